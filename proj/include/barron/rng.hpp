#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace barron {

// mt19937_64 with an explicit 53-bit real mapping so that draws are
// bit-identical across standard libraries (std::uniform_real_distribution
// is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // in [0, 1)
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Open interval (a, b): endpoint hits are rejected and redrawn.
  // In floating point the rejection is a measure-zero no-op, but it makes
  // the open-interval contract explicit.
  double uniform(double a, double b) {
    for (;;) {
      double x = a + (b - a) * uniform01();
      if (x > a && x < b) return x;
      if (a == b) return a;
    }
  }

  // Unbiased integer in [0, n), rejection sampled.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t x = eng_();
      if (x < limit) return x % n;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 step; used to derive independent per-task seed streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace barron
