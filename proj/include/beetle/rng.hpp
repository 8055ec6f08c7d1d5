#pragma once

#include <cstdint>
#include <random>

namespace beetle {

/// Seeded random stream backed by the 64-bit Mersenne Twister (std::mt19937_64).
///
/// Substreams are derived by hashing (seed, stream id) through SplitMix64, so a
/// trial can hand each consumer its own reproducible stream without sharing
/// generator state. A stream is single-owner; never share one across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform draw in [0, 1).
  double uniform() { return uniform_(engine_); }

  double normal() { return normal_(engine_); }

  /// Independent stream keyed by `stream_id`; does not advance this stream.
  RngStream split(std::uint64_t stream_id) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL)));
  }

  static std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace beetle
