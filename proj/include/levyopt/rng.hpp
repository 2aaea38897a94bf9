#pragma once

#include <cmath>
#include <cstdint>

namespace levyopt {

// SplitMix64 finalizer; avalanches a 64-bit value.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-derived random stream: the initial state is a pure function of
// (seed, stream), so stream i sees the same draws no matter which thread
// runs it or in which order streams are consumed.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix64(seed ^ 0x2545f4914f6cdd1dull) ^
               mix64(stream * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1); endpoints are never returned.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // Standard normal via Marsaglia's polar method; the spare deviate is cached
  // so a pair of uniforms yields two normals.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Exact Poisson draw by multiplicative inversion; large means are split
  // into chunks so exp(-mean) stays representable.
  int poisson(double mean) {
    int count = 0;
    while (mean > 32.0) {
      count += poisson_small(32.0);
      mean -= 32.0;
    }
    return count + poisson_small(mean);
  }

 private:
  int poisson_small(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    double prod = uniform();
    int k = 0;
    while (prod > limit) {
      prod *= uniform();
      ++k;
    }
    return k;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace levyopt
