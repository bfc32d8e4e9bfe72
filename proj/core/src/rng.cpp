#include "qss/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qss {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

RandomStream::RandomStream(std::uint64_t seed) : origin_(seed), state_(seed) {}

std::uint64_t RandomStream::mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  std::uint64_t value = next_u64();
  while (value >= limit) {
    value = next_u64();
  }
  return value % bound;
}

RandomStream RandomStream::fork(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
  std::uint64_t seed = origin_;
  seed = mix(seed ^ (a + kGolden));
  seed = mix(seed ^ (b + 2 * kGolden));
  seed = mix(seed ^ (c + 3 * kGolden));
  return RandomStream(seed);
}

std::vector<int> RandomStream::sample_without_replacement(int n, int count) {
  if (count < 0 || count > n) {
    throw std::invalid_argument("sample_without_replacement: count out of range");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pool[static_cast<std::size_t>(i)] = i;
  }
  // Partial Fisher-Yates, then sort the prefix for a canonical result.
  for (int i = 0; i < count; ++i) {
    const int j = i + static_cast<int>(uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace qss
