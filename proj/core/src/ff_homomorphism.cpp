#include "posetff/ff_homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

namespace posetff {

IntervalCompletion interval_completion(const Graph& g, const PathDecomposition& pd) {
  if (!validate_path_decomposition(g, pd)) {
    throw InvalidDecomposition("not a path decomposition of the graph");
  }
  IntervalCompletion ic;
  ic.intervals.assign(g.size(), IntInterval{0, -1});
  for (std::size_t t = 0; t < pd.bags.size(); ++t) {
    const auto pos = static_cast<long long>(t + 1);
    for (Id v : pd.bags[t]) {
      if (ic.intervals[v].hi == -1) ic.intervals[v].lo = pos;
      ic.intervals[v].hi = pos;
    }
  }
  ic.clique_number = interval_clique_number(ic.intervals);
  return ic;
}

Graph interval_graph(std::span<const IntInterval> intervals) {
  GraphBuilder b(intervals.size());
  for (Id u = 0; u < intervals.size(); ++u) {
    for (Id v = u + 1; v < intervals.size(); ++v) {
      if (intervals[u].lo <= intervals[v].hi && intervals[v].lo <= intervals[u].hi) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::size_t interval_clique_number(std::span<const IntInterval> intervals) {
  // (coordinate, 0 = open, 1 = close): closed intervals open before any
  // interval closing at the same point.
  std::vector<std::pair<long long, int>> events;
  events.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    events.emplace_back(iv.lo, 0);
    events.emplace_back(iv.hi, 1);
  }
  std::sort(events.begin(), events.end());
  std::size_t load = 0, best = 0;
  for (auto [x, kind] : events) {
    if (kind == 0) best = std::max(best, ++load);
    else --load;
  }
  return best;
}

std::pair<FFImage, Homomorphism> build_ff_image(const Graph& g, const IntervalCompletion& ic,
                                                const FFColoring& coloring) {
  bool valid = false;
  try {
    valid = validate_ff_coloring(g, coloring);
  } catch (const CoverageError& e) {
    throw InvalidColoring(e.what());
  }
  if (!valid) throw InvalidColoring("not a First-Fit colouring of the graph");
  if (ic.intervals.size() != g.size()) {
    throw SizeMismatch("completion covers " + std::to_string(ic.intervals.size()) +
                       " vertices, graph has " + std::to_string(g.size()));
  }

  FFImage img;
  Homomorphism f{std::vector<Id>(g.size(), 0)};
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    // Components of G'[V_i]: sweep the class left to right, merging while the
    // next interval starts inside the running union.
    std::vector<Id> members = coloring.classes[i];
    std::sort(members.begin(), members.end(), [&](Id a, Id b) {
      const auto& x = ic.intervals[a];
      const auto& y = ic.intervals[b];
      return std::tie(x.lo, x.hi, a) < std::tie(y.lo, y.hi, b);
    });
    img.components.emplace_back();
    img.classes.classes.emplace_back();
    for (Id v : members) {
      const IntInterval& iv = ic.intervals[v];
      if (img.components[i].empty() || iv.lo > img.intervals.back().hi) {
        img.classes.classes[i].push_back(img.intervals.size());
        img.intervals.push_back(iv);
        img.components[i].emplace_back();
      } else {
        img.intervals.back().hi = std::max(img.intervals.back().hi, iv.hi);
      }
      img.components[i].back().push_back(v);
      f.map[v] = img.intervals.size() - 1;
    }
    for (auto& w : img.components[i]) std::sort(w.begin(), w.end());
  }
  img.h = interval_graph(img.intervals);

  if (!validate_homomorphism(g, img.h, f)) {
    throw InternalError("component collapse is not a surjective homomorphism");
  }
  if (!validate_ff_coloring(img.h, img.classes)) {
    throw InternalError("transferred classes are not an FF colouring of H");
  }
  return {std::move(img), std::move(f)};
}

bool validate_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f) {
  if (f.map.size() != g.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (Id image : f.map) {
    if (image >= h.size()) return false;
    hit[image] = true;
  }
  for (auto [u, v] : g.edges()) {
    if (f.map[u] == f.map[v] || !h.adjacent(f.map[u], f.map[v])) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

constexpr std::size_t kSubsetCap = 24;

struct SeparationTable {
  std::vector<std::uint32_t> adj;
  std::vector<std::uint8_t> cost;  // vertex separation of the best ordering of S

  std::size_t boundary(std::uint32_t s) const {
    std::size_t count = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if ((s >> u & 1u) && (adj[u] & ~s)) ++count;
    }
    return count;
  }
};

SeparationTable separation_table(const Graph& g, std::size_t limit) {
  const std::size_t n = g.size();
  if (n > limit || n > kSubsetCap) {
    throw TooLarge("pathwidth DP limited to " + std::to_string(std::min(limit, kSubsetCap)) +
                   " vertices, got " + std::to_string(n));
  }
  SeparationTable t;
  t.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    t.adj[u] |= 1u << v;
    t.adj[v] |= 1u << u;
  }
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  t.cost.assign(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    std::uint8_t best = 0xff;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      best = std::min(best, t.cost[s ^ bit]);
    }
    t.cost[s] = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(t.boundary(s)));
  }
  return t;
}

}  // namespace

std::size_t pathwidth_exact(const Graph& g, std::size_t limit) {
  SeparationTable t = separation_table(g, limit);
  return t.cost.back();
}

PathDecomposition optimal_path_decomposition(const Graph& g, std::size_t limit) {
  SeparationTable t = separation_table(g, limit);
  const std::size_t n = g.size();
  // Peel vertices off the back of an optimal ordering.
  std::vector<Id> order;
  std::uint32_t s = static_cast<std::uint32_t>(t.cost.size() - 1);
  while (s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (t.cost[s ^ bit] <= t.cost[s]) {
        order.push_back(static_cast<Id>(std::countr_zero(bit)));
        s ^= bit;
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());

  // Bag i: the vertex placed at step i plus everything placed earlier that
  // still has an unplaced neighbour.
  PathDecomposition pd;
  std::uint32_t placed = 0;
  for (Id v : order) {
    std::vector<Id> bag;
    for (Id u = 0; u < n; ++u) {
      if ((placed >> u & 1u) && (t.adj[u] & ~placed)) bag.push_back(u);
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
    placed |= 1u << v;
  }
  return pd;
}

}  // namespace posetff
