#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace confmodel {

/// Seeded random stream with counter-based substreams.
///
/// A stream is identified by a 64-bit key derived from the root seed and the
/// path of substream indices that produced it. Substreams depend only on that
/// key, never on how many draws the parent has made, so work split across
/// threads by (experiment, replication) reproduces the same numbers for any
/// worker count.
class RandomStream {
 public:
  using engine_type = std::mt19937_64;

  explicit RandomStream(std::uint64_t seed);

  RandomStream substream(std::uint64_t index) const;
  RandomStream substream(std::uint64_t experiment, std::uint64_t rep) const {
    return substream(experiment).substream(rep);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t key() const { return key_; }

  engine_type& engine() { return engine_; }

  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound);
  /// Uniform real in [0, 1).
  double uniform();
  /// Fair coin.
  bool coin() { return below(2) == 1; }

 private:
  RandomStream(std::uint64_t seed, std::uint64_t key);

  std::uint64_t seed_;
  std::uint64_t key_;
  engine_type engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace confmodel
