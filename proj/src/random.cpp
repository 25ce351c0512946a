#include "confmodel/random.hpp"

#include <stdexcept>

namespace confmodel {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : RandomStream(seed, splitmix64(seed)) {}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t key)
    : seed_(seed), key_(key), engine_(splitmix64(key ^ 0x5851f42d4c957f2dULL)) {}

RandomStream RandomStream::substream(std::uint64_t index) const {
  return RandomStream(seed_, splitmix64(key_ ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

std::size_t RandomStream::below(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomStream::below: empty range");
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

double RandomStream::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

}  // namespace confmodel
