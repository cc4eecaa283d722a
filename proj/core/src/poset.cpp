#include "posetff/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace posetff {

namespace {

void check_id(Id u, std::size_t n) {
  if (u >= n) {
    throw IdOutOfRange("element id " + std::to_string(u) + " out of range [0," +
                       std::to_string(n) + ")");
  }
}

template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(static_cast<Id>(i));
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : adj_(n, Bits(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Relation> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_id(u, n);
    check_id(v, n);
    if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
    if (g.adj_[u].test(v)) {
      throw InvalidGraph("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Relation> Graph::edges() const {
  std::vector<Relation> out;
  for (Id u = 0; u < size(); ++u) {
    for_each_bit(adj_[u], [&](Id v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

void GraphBuilder::add_edge(Id u, Id v) {
  check_id(u, g_.size());
  check_id(v, g_.size());
  if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
  g_.adj_[u].set(v);
  g_.adj_[v].set(u);
}

// ---------------------------------------------------------------- Poset

Poset Poset::build(std::size_t n, std::span<const Relation> relations,
                   std::vector<std::string> names) {
  if (!names.empty() && names.size() != n) {
    throw SizeMismatch("names has " + std::to_string(names.size()) + " entries for " +
                       std::to_string(n) + " elements");
  }
  std::vector<Bits> succ(n, Bits(n));
  for (auto [u, v] : relations) {
    check_id(u, n);
    check_id(v, n);
    if (u == v) throw CycleError("relation " + std::to_string(u) + " < itself");
    succ[u].set(v);
  }

  // Kahn order over the generators; leftover vertices sit on a cycle.
  std::vector<std::size_t> indeg(n, 0);
  for (Id u = 0; u < n; ++u) for_each_bit(succ[u], [&](Id v) { ++indeg[v]; });
  std::vector<Id> topo;
  topo.reserve(n);
  for (Id u = 0; u < n; ++u) {
    if (indeg[u] == 0) topo.push_back(u);
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for_each_bit(succ[topo[head]], [&](Id v) {
      if (--indeg[v] == 0) topo.push_back(v);
    });
  }
  if (topo.size() != n) {
    Id culprit = 0;
    while (indeg[culprit] == 0) ++culprit;
    throw CycleError("relations contain a cycle through element " + std::to_string(culprit));
  }

  Poset p;
  p.above_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Bits& row = p.above_[*it];
    for_each_bit(succ[*it], [&](Id v) {
      row |= p.above_[v];
      row.set(v);
    });
  }
  p.below_.assign(n, Bits(n));
  for (Id u = 0; u < n; ++u) for_each_bit(p.above_[u], [&](Id v) { p.below_[v].set(u); });
  for (Id u = 0; u < n; ++u) {
    if (p.above_[u].test(u) || p.above_[u].intersects(p.below_[u])) {
      throw InternalError("closure violates the order axioms at " + std::to_string(u));
    }
  }
  p.names_ = std::move(names);
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<Relation> rel;
  for (Id u = 0; u + 1 < n; ++u) rel.emplace_back(u, u + 1);
  return build(n, rel);
}

Poset Poset::antichain(std::size_t n) { return build(n, {}); }

Bits Poset::incomparable_to(Id u) const {
  Bits b = above_[u] | below_[u];
  b.flip();
  b.reset(u);
  return b;
}

std::string Poset::name(Id u) const {
  return names_.empty() ? std::to_string(u) : names_[u];
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (Id u = 0; u < size(); ++u) for_each_bit(above_[u], [&](Id v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Relation> Poset::cover_relations() const {
  std::vector<Relation> out;
  for (Id u = 0; u < size(); ++u) {
    for_each_bit(above_[u], [&](Id v) {
      if (!above_[u].intersects(below_[v])) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<Id> Poset::linear_extension() const {
  std::vector<Id> ids(size());
  std::iota(ids.begin(), ids.end(), Id{0});
  std::vector<std::size_t> depth(size());
  for (Id u = 0; u < size(); ++u) depth[u] = below_[u].count();
  std::stable_sort(ids.begin(), ids.end(), [&](Id a, Id b) { return depth[a] < depth[b]; });
  return ids;
}

// ---------------------------------------------------------------- predicates

bool is_chain(const Poset& p, std::span<const Id> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= p.size()) return false;
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[j] >= p.size() || !p.less(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool is_antichain(const Poset& p, std::span<const Id> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= p.size()) return false;
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[j] >= p.size() || p.comparable(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool is_chain_partition(const Poset& p, const ChainPartition& cp) {
  Bits seen(p.size());
  for (const auto& c : cp.chains) {
    if (c.elements.empty() || !is_chain(p, c.elements)) return false;
    for (Id u : c.elements) {
      if (seen.test(u)) return false;
      seen.set(u);
    }
  }
  return seen.all();
}

bool is_kk_witness(const Poset& p, const KkWitness& w, std::size_t k) {
  if (w.a.size() != k || w.b.size() != k) return false;
  if (!is_chain(p, w.a.elements) || !is_chain(p, w.b.elements)) return false;
  for (Id x : w.a.elements) {
    for (Id y : w.b.elements) {
      if (p.comparable(x, y)) return false;  // also rules out x == y
    }
  }
  return true;
}

// ---------------------------------------------------------------- Dilworth

namespace {

constexpr Id kUnmatched = static_cast<Id>(-1);

// Maximum matching in the bipartite graph {u_left -> v_right : u < v}.
struct SplitMatching {
  std::vector<Id> right_of;  // left u -> matched right v
  std::vector<Id> left_of;   // right v -> matched left u
  std::size_t size = 0;
};

SplitMatching max_split_matching(const Poset& p) {
  const std::size_t n = p.size();
  SplitMatching m{std::vector<Id>(n, kUnmatched), std::vector<Id>(n, kUnmatched), 0};
  Bits visited(n);

  // Iterative augmenting-path search (Kuhn); the explicit stack keeps deep
  // chains from overflowing the call stack.
  struct Frame {
    Id u;
    Bits::size_type next;
  };
  std::vector<Frame> stack;

  for (Id root = 0; root < n; ++root) {
    visited.reset();
    stack.assign(1, Frame{root, p.above(root).find_first()});
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      Frame& f = stack.back();
      Bits::size_type v = f.next;
      while (v != Bits::npos && visited.test(v)) v = p.above(f.u).find_next(v);
      if (v == Bits::npos) {
        stack.pop_back();
        continue;
      }
      f.next = p.above(f.u).find_next(v);
      visited.set(v);
      if (m.left_of[v] == kUnmatched) {
        // Flip the path root -> ... -> f.u -> v.
        Id right = static_cast<Id>(v);
        for (std::size_t d = stack.size(); d-- > 0;) {
          Id left = stack[d].u;
          Id prev = m.right_of[left];
          m.right_of[left] = right;
          m.left_of[right] = left;
          right = prev;
        }
        ++m.size;
        augmented = true;
      } else {
        Id next_left = m.left_of[v];
        stack.push_back(Frame{next_left, p.above(next_left).find_first()});
      }
    }
  }
  return m;
}

}  // namespace

WidthResult width_with_witness(const Poset& p) {
  const std::size_t n = p.size();
  SplitMatching m = max_split_matching(p);

  // Konig: Z = vertices reachable from unmatched left vertices by alternating
  // paths. The maximum antichain is {u : u_left in Z, u_right not in Z}.
  Bits left_z(n), right_z(n);
  std::vector<Id> queue;
  for (Id u = 0; u < n; ++u) {
    if (m.right_of[u] == kUnmatched) {
      left_z.set(u);
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Id u = queue[head];
    for_each_bit(p.above(u), [&](Id v) {
      if (right_z.test(v)) return;
      right_z.set(v);
      Id w = m.left_of[v];
      if (w != kUnmatched && !left_z.test(w)) {
        left_z.set(w);
        queue.push_back(w);
      }
    });
  }
  WidthResult r;
  for (Id u = 0; u < n; ++u) {
    if (left_z.test(u) && !right_z.test(u)) r.witness.elements.push_back(u);
  }
  r.width = n - m.size;
  if (r.witness.size() != r.width) {
    throw InternalError("Konig antichain size disagrees with the matching");
  }
  return r;
}

ChainPartition dilworth_partition(const Poset& p) {
  SplitMatching m = max_split_matching(p);
  ChainPartition cp;
  for (Id start = 0; start < p.size(); ++start) {
    if (m.left_of[start] != kUnmatched) continue;
    Chain c;
    for (Id u = start; u != kUnmatched; u = m.right_of[u]) c.elements.push_back(u);
    cp.chains.push_back(std::move(c));
  }
  return cp;
}

Graph incomparability_graph(const Poset& p) {
  GraphBuilder b(p.size());
  for (Id u = 0; u < p.size(); ++u) {
    for_each_bit(p.incomparable_to(u), [&](Id v) {
      if (u < v) b.add_edge(u, v);
    });
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------- k+k search

namespace {

class KkSearch {
 public:
  KkSearch(const Poset& p, std::size_t k, std::uint64_t budget)
      : p_(p), k_(k), budget_(budget), order_(p.linear_extension()) {
    // Longest chain starting at each element, for pruning extensions of A.
    height_.assign(p.size(), 1);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      for_each_bit(p.above(*it), [&](Id v) { height_[*it] = std::max(height_[*it], height_[v] + 1); });
    }
  }

  std::optional<KkWitness> run() {
    Bits all(p_.size());
    all.set();
    for (Id x = 0; x < p_.size(); ++x) {
      if (auto w = extend(x, all)) return w;
    }
    return std::nullopt;
  }

 private:
  // Longest chain inside `s`, as increasing elements.
  std::vector<Id> longest_chain(const Bits& s) const {
    std::vector<std::size_t> len(p_.size(), 0);
    std::vector<Id> parent(p_.size(), kUnmatched);
    Id best = kUnmatched;
    for (Id x : order_) {
      if (!s.test(x)) continue;
      len[x] = 1;
      Bits lower = p_.below(x) & s;
      for_each_bit(lower, [&](Id y) {
        if (len[y] + 1 > len[x]) {
          len[x] = len[y] + 1;
          parent[x] = y;
        }
      });
      if (best == kUnmatched || len[x] > len[best]) best = x;
    }
    std::vector<Id> out;
    for (Id x = best; x != kUnmatched; x = parent[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::optional<KkWitness> extend(Id x, const Bits& free) {
    if (++nodes_ > budget_) {
      throw BudgetExhausted("k+k search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (height_[x] < k_ - chain_.size()) return std::nullopt;
    Bits next_free = free & p_.incomparable_to(x);
    if (next_free.count() < k_) return std::nullopt;
    std::vector<Id> b = longest_chain(next_free);
    if (b.size() < k_) return std::nullopt;

    chain_.push_back(x);
    std::optional<KkWitness> found;
    if (chain_.size() == k_) {
      b.resize(k_);
      found = KkWitness{Chain{chain_}, Chain{std::move(b)}};
    } else {
      for (auto y = p_.above(x).find_first(); y != Bits::npos && !found;
           y = p_.above(x).find_next(y)) {
        found = extend(static_cast<Id>(y), next_free);
      }
    }
    chain_.pop_back();
    return found;
  }

  const Poset& p_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Id> order_;
  std::vector<std::size_t> height_;
  std::vector<Id> chain_;
};

}  // namespace

std::optional<KkWitness> find_k_plus_k(const Poset& p, std::size_t k, std::uint64_t budget) {
  if (k == 0) throw ParamError("k must be at least 1");
  return KkSearch(p, k, budget).run();
}

bool is_extension(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("posets have " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()) + " elements");
  }
  for (Id u = 0; u < p.size(); ++u) {
    if (!q.above(u).is_subset_of(p.above(u))) return false;
  }
  return true;
}

std::optional<KkWitness> find_two_plus_two(const Poset& p) {
  for (Id a = 0; a < p.size(); ++a) {
    const Bits inc_a = p.incomparable_to(a);
    for (auto b = p.above(a).find_first(); b != Bits::npos; b = p.above(a).find_next(b)) {
      const Bits inc_b = p.incomparable_to(static_cast<Id>(b));
      for (auto c = inc_b.find_first(); c != Bits::npos; c = inc_b.find_next(c)) {
        Bits ds = p.above(static_cast<Id>(c)) & inc_a;
        auto d = ds.find_first();
        if (d != Bits::npos) {
          return KkWitness{Chain{{a, static_cast<Id>(b)}},
                           Chain{{static_cast<Id>(c), static_cast<Id>(d)}}};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_interval_order(const Poset& p) { return !find_two_plus_two(p).has_value(); }

}  // namespace posetff
