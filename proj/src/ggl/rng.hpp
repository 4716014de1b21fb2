#pragma once

#include <cstdint>

namespace ggl {

// splitmix64. Deterministic and platform-independent; all randomized code in
// this project derives from it so that a (seed, stream) pair pins the output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  double unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed, e.g. one per trial or per sample index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  Rng mix(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  mix.next();
  return mix.next();
}

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace ggl
