#include "diffgeo/rng.hpp"

namespace diffgeo {

std::uint64_t child_seed(std::uint64_t global_seed, std::string_view module,
                         std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the module name
  for (unsigned char c : module) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(splitmix64(global_seed ^ h) ^ index);
}

}  // namespace diffgeo
