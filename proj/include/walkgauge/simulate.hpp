#ifndef WALKGAUGE_SIMULATE_HPP
#define WALKGAUGE_SIMULATE_HPP

#include <cmath>
#include <cstdint>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"

namespace walkgauge {

namespace detail {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Each trial owns a stream keyed by (seed, trial), so results depend only on
// those two values, never on scheduling or trial order.
inline uint64_t trial_stream_state(uint64_t seed, long long trial) {
  uint64_t s = seed ^ (0xbf58476d1ce4e5b9ULL * (static_cast<uint64_t>(trial) + 1));
  return splitmix64(s);
}

// Unbiased uniform draw from [0, bound) by rejection.
inline uint64_t uniform_below(uint64_t& state, uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = splitmix64(state);
    if (r >= threshold) return r % bound;
  }
}

}  // namespace detail

struct WalkStats {
  double sample_mean = 0.0;
  double standard_error = 0.0;
  long long trials = 0;
  long long capped_trials = 0;
  long long step_cap = 0;
  uint64_t seed = 0;
};

// Monte-Carlo estimate of the hitting time from `from` to `to`: simple random
// walks, each trial on its own deterministic substream. A trial that reaches
// the step cap is truncated there and counted (and reported in
// capped_trials); with any sane cap this never fires at desk scale.
inline WalkStats simulate_hitting_time(const Graph& g, int from, int to, long long trials,
                                       uint64_t seed, long long step_cap = 10'000'000) {
  if (!g.connected()) throw DisconnectedError("walk simulation needs a connected graph");
  g.check_vertex(from);
  g.check_vertex(to);
  if (trials < 1) throw Error("simulation needs at least one trial");
  if (step_cap < 1) throw Error("step cap must be positive");

  WalkStats stats;
  stats.trials = trials;
  stats.step_cap = step_cap;
  stats.seed = seed;

  long double mean = 0.0L, m2 = 0.0L;
  for (long long t = 0; t < trials; ++t) {
    uint64_t state = detail::trial_stream_state(seed, t);
    int pos = from;
    long long steps = 0;
    while (pos != to && steps < step_cap) {
      auto nbrs = g.neighbors(pos);
      pos = nbrs[detail::uniform_below(state, nbrs.size())];
      ++steps;
    }
    if (pos != to) ++stats.capped_trials;
    long double x = static_cast<long double>(steps);
    long double delta = x - mean;
    mean += delta / static_cast<long double>(t + 1);
    m2 += delta * (x - mean);
  }
  stats.sample_mean = static_cast<double>(mean);
  if (trials > 1) {
    long double var = m2 / static_cast<long double>(trials - 1);
    stats.standard_error = static_cast<double>(std::sqrt(var / static_cast<long double>(trials)));
  }
  return stats;
}

}  // namespace walkgauge

#endif
