#include "posetff/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace posetff {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (index * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ParamError("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

long long Rng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<IntInterval> gen_intervals(std::uint64_t seed, std::size_t n,
                                       long long coordinate_range) {
  if (coordinate_range <= 0) throw ParamError("coordinate range must be positive");
  Rng rng(seed);
  std::vector<IntInterval> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long a = rng.between(0, coordinate_range - 1);
    long long b = rng.between(0, coordinate_range - 1);
    out.push_back(IntInterval{std::min(a, b), std::max(a, b)});
  }
  return out;
}

Poset gen_interval_order(std::uint64_t seed, std::size_t n, long long coordinate_range) {
  return interval_order_from_intervals(gen_intervals(seed, n, coordinate_range));
}

Poset gen_interval_order_of_width(std::uint64_t seed, std::size_t n, std::size_t width,
                                  std::size_t max_tries) {
  if (width == 0 ? n != 0 : width > n) {
    throw ParamError("cannot reach width " + std::to_string(width) + " with " +
                     std::to_string(n) + " elements");
  }
  for (std::size_t t = 0; t < max_tries; ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<long long> track_end(width, -1);
    std::vector<IntInterval> iv;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t track = rng.below(width);
      const long long lo = track_end[track] + 1 + rng.between(0, 3);
      const long long hi = lo + rng.between(0, 6);
      track_end[track] = hi;
      iv.push_back(IntInterval{lo, hi});
    }
    Poset p = interval_order_from_intervals(iv);
    if (posetff::width(p) == width) return p;
  }
  throw GaveUp("no interval order of width " + std::to_string(width) + " after " +
               std::to_string(max_tries) + " tries");
}

Poset gen_random_dag(std::uint64_t seed, std::size_t n, double density) {
  if (density < 0.0 || density > 1.0) throw ParamError("density must lie in [0,1]");
  Rng rng(seed);
  std::vector<Id> skeleton(n);
  std::iota(skeleton.begin(), skeleton.end(), Id{0});
  rng.shuffle(skeleton);
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(density)) rel.emplace_back(skeleton[i], skeleton[j]);
    }
  }
  return Poset::build(n, rel);
}

Poset gen_chain_union(std::uint64_t seed, std::size_t n, std::size_t width, double density) {
  if (density < 0.0 || density > 1.0) throw ParamError("density must lie in [0,1]");
  if (width == 0 && n != 0) throw ParamError("width 0 needs an empty poset");
  Rng rng(seed);
  std::vector<Id> skeleton(n);
  std::iota(skeleton.begin(), skeleton.end(), Id{0});
  rng.shuffle(skeleton);
  std::vector<std::size_t> chain_of(n);
  for (std::size_t i = 0; i < n; ++i) chain_of[i] = rng.below(width);
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (chain_of[i] == chain_of[j] || rng.bernoulli(density)) {
        rel.emplace_back(skeleton[i], skeleton[j]);
      }
    }
  }
  return Poset::build(n, rel);
}

KkFreeSample gen_kk_free(std::uint64_t seed, std::size_t n, std::size_t k,
                         const KkFreeOptions& opts) {
  if (k < 2) throw ParamError("k must be at least 2");
  for (std::size_t t = 0; t < opts.max_tries; ++t) {
    const std::uint64_t s = derive_seed(seed, t);
    Poset p = opts.target_width == 0 ? gen_random_dag(s, n, opts.density)
                                     : gen_chain_union(s, n, opts.target_width, opts.density);
    if (opts.target_width != 0 && width(p) != opts.target_width) continue;
    if (!find_k_plus_k(p, k, opts.budget)) return KkFreeSample{std::move(p), t + 1, s};
  }
  throw GaveUp("no " + std::to_string(k) + "+" + std::to_string(k) + "-free poset after " +
               std::to_string(opts.max_tries) + " tries");
}

Graph gen_graph(std::uint64_t seed, std::size_t n, double density) {
  if (density < 0.0 || density > 1.0) throw ParamError("density must lie in [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Id u = 0; u < n; ++u) {
    for (Id v = u + 1; v < n; ++v) {
      if (rng.bernoulli(density)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Poset generate_poset(const GenConfig& c) {
  switch (c.kind) {
    case GenKind::IntervalOrder:
      return gen_interval_order(c.seed, c.n,
                                c.coordinate_range > 0 ? c.coordinate_range
                                                       : std::max<long long>(1, 2 * static_cast<long long>(c.n)));
    case GenKind::RandomDag:
      return gen_random_dag(c.seed, c.n, c.density);
    case GenKind::KkFreeRejection: {
      KkFreeOptions opts;
      opts.target_width = c.target_width;
      opts.density = c.density;
      return gen_kk_free(c.seed, c.n, c.k, opts).poset;
    }
    case GenKind::RandomGraph:
      break;
  }
  throw ParamError("config kind " + to_string(c.kind) + " does not produce a poset");
}

Graph generate_graph(const GenConfig& c) {
  if (c.kind != GenKind::RandomGraph) {
    throw ParamError("config kind " + to_string(c.kind) + " does not produce a graph");
  }
  return gen_graph(c.seed, c.n, c.density);
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::IntervalOrder: return "intervalOrder";
    case GenKind::RandomDag: return "randomDag";
    case GenKind::KkFreeRejection: return "kkFreeRejection";
    case GenKind::RandomGraph: return "randomGraph";
  }
  return "unknown";
}

}  // namespace posetff
