#pragma once

#include <cstdint>
#include <string_view>

namespace diffgeo {

// splitmix64 finalizer; stateless mixing stage used by child_seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed splitting: child = mix(mix(global ^ fnv1a(module)) ^ index).
// Every component derives its RNG seed from the global seed through this rule,
// so a single --seed pins the whole pipeline. Documented in the README.
std::uint64_t child_seed(std::uint64_t global_seed, std::string_view module,
                         std::uint64_t index = 0);

}  // namespace diffgeo
