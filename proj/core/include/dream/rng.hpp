#pragma once

#include <cstdint>
#include <limits>

namespace dream {

// Mixes a 64-bit value through the splitmix64 finalizer. Good enough to turn
// structured keys (seed, stream, iteration) into independent-looking states.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Small counter-based generator (splitmix64 sequence). Constructing one per
// (agent, iteration) key is cheap, which is what the optimizer's
// order-independent stream discipline needs; a heavier engine would pay its
// seeding cost millions of times per run.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits; bit-identical across
  // platforms, unlike std::uniform_real_distribution.
  double next_double() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform integer in [0, n). Modulo bias is < n / 2^64, irrelevant here.
  int uniform_index(int n) {
    return static_cast<int>((*this)() % static_cast<std::uint64_t>(n));
  }

 private:
  std::uint64_t state_;
};

// Fixed stream identifiers.  Every random decision in a run is drawn from a
// substream keyed by (seed, stream id, counter), so per-agent work can be
// reordered or parallelized without changing the draws.  Counter 0 is the
// initialization phase; iteration t uses counter t + 1.
namespace stream {
inline constexpr std::uint64_t coin = 0;        // shared Bernoulli(p) coin
inline constexpr std::uint64_t output = 1;      // uniform output sampling
inline constexpr std::uint64_t agent_base = 2;  // agent i => agent_base + i
}  // namespace stream

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t id,
                            std::uint64_t counter) {
  return SplitMix64(mix64(seed ^ mix64(id ^ mix64(counter))));
}

inline std::uint64_t agent_stream(int agent) {
  return stream::agent_base + static_cast<std::uint64_t>(agent);
}

}  // namespace dream
