#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cevopt {

// splitmix64; used only to expand user seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** seeded through splitmix64. Hand-rolled because the reports
// built on top of this must be byte-identical across platforms and thread
// counts; std::uniform_real_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : s_) word = sm.next();
  }

  // Independent stream for work item `index` under a common master seed.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 sm{seed};
    const std::uint64_t base = sm.next();
    return Rng(base ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

// Uniform sample from the open standard simplex: exponential spacings,
// normalized. Draws are rejected until every coordinate exceeds 1e-12 so the
// result is safely interior for downstream strict checks.
inline std::vector<double> uniform_simplex_point(Rng& rng, std::size_t size) {
  if (size < 2) throw std::invalid_argument("simplex sample needs at least 2 coordinates");
  std::vector<double> coords(size);
  while (true) {
    double sum = 0.0;
    for (auto& c : coords) {
      c = -std::log1p(-rng.uniform01());
      sum += c;
    }
    if (sum <= 0.0) continue;
    double min_coord = 1.0;
    for (auto& c : coords) {
      c /= sum;
      min_coord = std::min(min_coord, c);
    }
    if (min_coord > 1e-12) return coords;
  }
}

// Uniform sample from the simplex shrunk toward its centroid so that every
// coordinate is at least `floor`. Keeps measurement points away from the
// boundary, where volume-ratio comparisons lose conditioning.
inline std::vector<double> uniform_interior_point(Rng& rng, std::size_t size, double floor) {
  if (!(floor >= 0.0) || floor * static_cast<double>(size) >= 1.0) {
    throw std::invalid_argument("floor must satisfy 0 <= floor * size < 1");
  }
  std::vector<double> coords = uniform_simplex_point(rng, size);
  const double scale = 1.0 - floor * static_cast<double>(size);
  for (auto& c : coords) c = floor + scale * c;
  return coords;
}

}  // namespace cevopt
