#include "posetff/first_fit.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace posetff {

PresentationOrder::PresentationOrder(std::vector<Id> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (Id u : order_) {
    if (u >= order_.size() || seen[u]) {
      throw InvalidOrder("presentation order is not a permutation of 0.." +
                         std::to_string(order_.size()) + "-1");
    }
    seen[u] = true;
  }
}

PresentationOrder PresentationOrder::identity(std::size_t n) {
  std::vector<Id> ids(n);
  std::iota(ids.begin(), ids.end(), Id{0});
  return PresentationOrder(std::move(ids));
}

FFChainResult first_fit_chains(const Poset& p, const PresentationOrder& order) {
  if (order.size() != p.size()) {
    throw SizeMismatch("order has " + std::to_string(order.size()) + " ids for " +
                       std::to_string(p.size()) + " elements");
  }
  FFChainResult r;
  r.assignment.assign(p.size(), 0);
  std::vector<Bits> members;
  for (Id v : order.ids()) {
    const Bits inc = p.incomparable_to(v);
    std::size_t i = 0;
    while (i < members.size() && members[i].intersects(inc)) ++i;
    if (i == members.size()) {
      members.emplace_back(p.size());
      r.partition.chains.emplace_back();
    }
    members[i].set(v);
    r.partition.chains[i].elements.push_back(v);
    r.assignment[v] = i + 1;
    r.trace.push_back(FFStep{v, i + 1});
  }
  for (auto& c : r.partition.chains) {
    std::sort(c.elements.begin(), c.elements.end(),
              [&](Id a, Id b) { return p.less(a, b); });
  }
  return r;
}

namespace {

// Throws CoverageError unless `parts` partitions 0..n-1.
void require_partition(std::size_t n, const std::vector<std::vector<Id>>& parts) {
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& part : parts) {
    for (Id u : part) {
      if (u >= n) throw CoverageError("id " + std::to_string(u) + " out of range");
      if (seen[u]) throw CoverageError("id " + std::to_string(u) + " appears twice");
      seen[u] = true;
      ++total;
    }
  }
  if (total != n) throw CoverageError("partition misses " + std::to_string(n - total) + " ids");
}

}  // namespace

bool validate_ff_partition(const Poset& p, const ChainPartition& cp) {
  std::vector<std::vector<Id>> parts;
  for (const auto& c : cp.chains) parts.push_back(c.elements);
  require_partition(p.size(), parts);

  for (const auto& c : cp.chains) {
    if (c.elements.empty() || !is_chain(p, c.elements)) return false;
  }
  for (std::size_t j = 1; j < cp.size(); ++j) {
    for (Id v : cp.chains[j].elements) {
      for (std::size_t i = 0; i < j; ++i) {
        const auto& ci = cp.chains[i].elements;
        if (std::none_of(ci.begin(), ci.end(), [&](Id w) { return p.incomparable(v, w); })) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> FFColoring::colors(std::size_t n) const {
  std::vector<std::size_t> out(n, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Id v : classes[i]) out.at(v) = i + 1;
  }
  return out;
}

namespace {

// Least colour (1-based) not present among coloured neighbours of v.
std::size_t first_free_color(const Graph& g, Id v, const std::vector<std::size_t>& color) {
  std::vector<bool> used(g.degree(v) + 2, false);
  const Bits& nb = g.neighbors(v);
  for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
    std::size_t c = color[u];
    if (c != 0 && c < used.size()) used[c] = true;
  }
  std::size_t c = 1;
  while (used[c]) ++c;
  return c;
}

FFColoring classes_from_colors(const std::vector<std::size_t>& color) {
  FFColoring out;
  for (Id v = 0; v < color.size(); ++v) {
    if (color[v] > out.classes.size()) out.classes.resize(color[v]);
    out.classes[color[v] - 1].push_back(v);
  }
  return out;
}

}  // namespace

FFColoring first_fit_color(const Graph& g, const PresentationOrder& order) {
  if (order.size() != g.size()) {
    throw SizeMismatch("order has " + std::to_string(order.size()) + " ids for " +
                       std::to_string(g.size()) + " vertices");
  }
  std::vector<std::size_t> color(g.size(), 0);
  for (Id v : order.ids()) color[v] = first_free_color(g, v, color);
  return classes_from_colors(color);
}

bool validate_ff_coloring(const Graph& g, const FFColoring& c) {
  require_partition(g.size(), c.classes);
  const auto color = c.colors(g.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.classes[i].empty()) return false;
    for (Id v : c.classes[i]) {
      std::vector<bool> seen(i + 1, false);
      const Bits& nb = g.neighbors(v);
      for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
        if (color[u] == i + 1) return false;
        if (color[u] <= i) seen[color[u]] = true;
      }
      for (std::size_t j = 1; j <= i; ++j) {
        if (!seen[j]) return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first sweep over presentation-order prefixes. A prefix is summarised
// by the partial colouring it produces; two prefixes with the same partial
// colouring have the same continuations, so each is expanded once.
class GrundySweep {
 public:
  explicit GrundySweep(const Graph& g) : g_(g), color_(g.size(), 0) {
    std::size_t max_deg = 0;
    for (Id v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.degree(v));
    ceiling_ = g.size() == 0 ? 0 : max_deg + 1;
  }

  FFColoring run() {
    best_colors_ = color_;
    if (g_.size() == 0) return {};
    visit(0, 0);
    return classes_from_colors(best_colors_);
  }

 private:
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t c : color_) k = (k << 4) | c;
    return k;
  }

  void visit(std::size_t colored, std::size_t used) {
    if (best_ == ceiling_) return;
    if (colored == g_.size()) {
      if (used > best_) {
        best_ = used;
        best_colors_ = color_;
      }
      return;
    }
    // Each remaining vertex adds at most one new colour.
    if (used + (g_.size() - colored) <= best_) return;
    if (!seen_.insert(key()).second) return;
    for (Id v = 0; v < g_.size(); ++v) {
      if (color_[v] != 0) continue;
      color_[v] = first_free_color(g_, v, color_);
      visit(colored + 1, std::max(used, color_[v]));
      color_[v] = 0;
    }
  }

  const Graph& g_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> best_colors_;
  std::size_t best_ = 0;
  std::size_t ceiling_ = 0;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

FFColoring grundy_coloring(const Graph& g, std::size_t limit) {
  // Four bits per vertex in the memo key caps the sweep at 15 vertices.
  if (g.size() > limit || g.size() > 15) {
    throw TooLarge("grundy sweep limited to " + std::to_string(std::min<std::size_t>(limit, 15)) +
                   " vertices, got " + std::to_string(g.size()));
  }
  return GrundySweep(g).run();
}

}  // namespace posetff
