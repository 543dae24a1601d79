#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <string>
#include <vector>

namespace diffgeo {

// Writes `contents` to `path` atomically (write to a sibling temp file, then
// rename). Creates parent directories as needed.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

// Dataset CSV: header "x0,x1", one sample per row. Columns of `samples` are samples.
void write_dataset_csv(const std::filesystem::path& path, const Eigen::MatrixXd& samples);
Eigen::MatrixXd read_dataset_csv(const std::filesystem::path& path);

// Path CSV: a `# key=value ...` metadata line, then "u,x0,x1" rows.
struct PathCsv {
  std::string method;
  int tau = 0;
  int segments = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd points;  // D x (N+1)
};
void write_path_csv(const std::filesystem::path& path, const PathCsv& p);
PathCsv read_path_csv(const std::filesystem::path& path);

std::string format_double(double v);  // round-trippable shortest form

}  // namespace diffgeo
