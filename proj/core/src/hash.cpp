#include "codemorph/hash.hpp"

#include <array>

#include "codemorph/rng.hpp"

namespace codemorph {

std::string hex64(std::uint64_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 rng(seed ^ (salt + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
  return rng.next();
}

}  // namespace codemorph
