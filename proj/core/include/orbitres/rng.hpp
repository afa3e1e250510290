#pragma once

#include <cstdint>

namespace orbitres {

/// splitmix64: state advances by the golden-ratio increment and the output
/// runs through the mix13 finalizer. The stream is identical on every
/// platform, which keeps seeded reports reproducible bit for bit.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// lo + next() % span. The modulo mapping is part of the documented
  /// contract; spans here are tiny compared to 2^64.
  std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

private:
  std::uint64_t state_;
};

/// Seed for the index-th item of a batch: mix(seed ^ mix(index)), so item
/// streams are independent of each other and of the batch size.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 inner(index);
  SplitMix64 outer(seed ^ inner.next());
  return outer.next();
}

}  // namespace orbitres
