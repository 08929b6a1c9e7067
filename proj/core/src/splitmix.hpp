// Deterministic seed stream. std::uniform_real_distribution is
// implementation-defined, which would break byte-identical reports across
// standard libraries, so seeded operators draw from this instead.
#ifndef KOENIGSLAB_SRC_SPLITMIX_HPP
#define KOENIGSLAB_SRC_SPLITMIX_HPP

#include <cstdint>

namespace koenigslab {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace koenigslab

#endif  // KOENIGSLAB_SRC_SPLITMIX_HPP
