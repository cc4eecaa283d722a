#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posetff/interval_extension.hpp"
#include "posetff/poset.hpp"

namespace posetff {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the index-th sub-instance of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Portable random source. The engine is std::mt19937_64 (its output sequence
/// is fixed by the standard) seeded with splitmix64(seed); bounded draws use
/// rejection sampling and probabilities use the top 53 bits, so no
/// implementation-defined std distribution is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);
  /// Uniform in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// n random integer intervals with endpoints in [0, coordinate_range).
std::vector<IntInterval> gen_intervals(std::uint64_t seed, std::size_t n,
                                       long long coordinate_range);

Poset gen_interval_order(std::uint64_t seed, std::size_t n, long long coordinate_range);

/// Interval order whose intervals sit on `width` disjoint tracks, so its width
/// is at most `width`; redrawn until the width is exactly `width`.
/// Throws GaveUp after `max_tries` draws.
Poset gen_interval_order_of_width(std::uint64_t seed, std::size_t n, std::size_t width,
                                  std::size_t max_tries = 1000);

/// Random permutation as a linear-extension skeleton; each forward pair of the
/// skeleton is kept with probability `density`; closed afterwards.
Poset gen_random_dag(std::uint64_t seed, std::size_t n, double density);

/// Union of `width` chains (each element joins a random chain) plus forward
/// cross pairs kept with probability `density`. Width is at most `width`.
Poset gen_chain_union(std::uint64_t seed, std::size_t n, std::size_t width, double density);

struct KkFreeOptions {
  std::size_t max_tries = 1000;
  /// 0 samples gen_random_dag; otherwise gen_chain_union with this width and
  /// rejects draws of smaller width.
  std::size_t target_width = 0;
  double density = 0.5;
  std::uint64_t budget = kDefaultKkBudget;
};

struct KkFreeSample {
  Poset poset;
  std::size_t tries = 0;          // draws consumed, including the accepted one
  std::uint64_t sample_seed = 0;  // seed of the accepted draw
};

/// Rejection-samples random posets until the complete k+k search finds none.
/// Throws GaveUp after opts.max_tries draws.
KkFreeSample gen_kk_free(std::uint64_t seed, std::size_t n, std::size_t k,
                         const KkFreeOptions& opts = {});

/// Erdos-Renyi graph: each pair is an edge with probability `density`.
Graph gen_graph(std::uint64_t seed, std::size_t n, double density);

enum class GenKind { IntervalOrder, RandomDag, KkFreeRejection, RandomGraph };

std::string to_string(GenKind kind);

/// Everything that determines a generated instance; echoed into output files.
struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  GenKind kind = GenKind::IntervalOrder;
  std::size_t k = 2;
  std::size_t target_width = 0;
  double density = 0.5;
  long long coordinate_range = 0;  // 0 means 2n
};

/// Poset for an IntervalOrder, RandomDag or KkFreeRejection config.
Poset generate_poset(const GenConfig& config);
/// Graph for a RandomGraph config.
Graph generate_graph(const GenConfig& config);

}  // namespace posetff
