#ifndef QSS_RNG_HPP_
#define QSS_RNG_HPP_

#include <cstdint>
#include <vector>

namespace qss {

// Deterministic, platform-independent random stream (splitmix64 core).
// A master seed expands into independent sub-streams via counter-based
// forks, so per-trial / per-position / per-party draws are reproducible
// regardless of evaluation order. std::random distributions are avoided
// on purpose: their algorithms are implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

  // Unbiased uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Independent sub-stream labeled by up to three counters. Forking is a
  // pure function of the stream's origin seed and the labels, not of how
  // many values have been drawn.
  RandomStream fork(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

  // Uniform sample of `count` distinct values from [0, n), ascending.
  std::vector<int> sample_without_replacement(int n, int count);

  std::uint64_t origin_seed() const { return origin_; }

  // splitmix64 finalizer; also used as the seed/label mixer.
  static std::uint64_t mix(std::uint64_t value);

 private:
  std::uint64_t origin_;
  std::uint64_t state_;
};

}  // namespace qss

#endif  // QSS_RNG_HPP_
