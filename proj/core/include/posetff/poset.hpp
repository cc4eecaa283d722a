#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetff/errors.hpp"

namespace posetff {

using Id = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;
using Relation = std::pair<Id, Id>;

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws InvalidGraph on loops or repeated edges, IdOutOfRange on bad ids.
  static Graph from_edges(std::size_t n, std::span<const Relation> edges);

  std::size_t size() const { return adj_.size(); }
  bool adjacent(Id u, Id v) const { return adj_[u].test(v); }
  const Bits& neighbors(Id u) const { return adj_[u]; }
  std::size_t degree(Id u) const { return adj_[u].count(); }
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Relation> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<Bits> adj_;
};

/// Mutable helper for assembling a Graph edge by edge. Repeated edges are
/// merged.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  void add_edge(Id u, Id v);
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

/// A finite strict partial order on 0..n-1, held as the full transitive
/// closure in both directions. Immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Closes `relations` (u < v generators) transitively and checks the order
  /// axioms. Throws CycleError if the closure is not antisymmetric.
  static Poset build(std::size_t n, std::span<const Relation> relations,
                     std::vector<std::string> names = {});

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return above_.size(); }
  bool empty() const { return above_.empty(); }

  bool less(Id u, Id v) const { return above_[u].test(v); }
  bool greater(Id u, Id v) const { return above_[v].test(u); }
  /// Equal elements count as comparable.
  bool comparable(Id u, Id v) const {
    return u == v || above_[u].test(v) || above_[v].test(u);
  }
  bool incomparable(Id u, Id v) const { return !comparable(u, v); }

  /// Elements strictly above / below `u`.
  const Bits& above(Id u) const { return above_[u]; }
  const Bits& below(Id u) const { return below_[u]; }
  /// Elements incomparable to `u` (never contains u itself).
  Bits incomparable_to(Id u) const;

  const std::vector<std::string>& names() const { return names_; }
  std::string name(Id u) const;

  /// Every ordered pair (u, v) with u < v.
  std::vector<Relation> relations() const;
  /// Cover pairs of the Hasse diagram.
  std::vector<Relation> cover_relations() const;

  /// A linear extension (ids sorted by number of elements below, then id).
  std::vector<Id> linear_extension() const;

  bool operator==(const Poset& o) const {
    return above_ == o.above_;
  }

 private:
  std::vector<Bits> above_;
  std::vector<Bits> below_;
  std::vector<std::string> names_;
};

/// Pairwise comparable elements, listed in increasing order.
struct Chain {
  std::vector<Id> elements;
  std::size_t size() const { return elements.size(); }
  bool operator==(const Chain&) const = default;
};

/// Pairwise incomparable elements.
struct Antichain {
  std::vector<Id> elements;
  std::size_t size() const { return elements.size(); }
};

/// Disjoint non-empty chains covering a poset.
struct ChainPartition {
  std::vector<Chain> chains;
  std::size_t size() const { return chains.size(); }
};

/// Two disjoint k-chains with every cross pair incomparable.
struct KkWitness {
  Chain a;
  Chain b;
};

bool is_chain(const Poset& p, std::span<const Id> elements);
bool is_antichain(const Poset& p, std::span<const Id> elements);
/// True when `cp` is a partition of p's elements into chains (each listed
/// increasingly).
bool is_chain_partition(const Poset& p, const ChainPartition& cp);
/// Checks the KkWitness invariants for chains of size k.
bool is_kk_witness(const Poset& p, const KkWitness& w, std::size_t k);

struct WidthResult {
  std::size_t width = 0;
  Antichain witness;
};

/// Width of `p` together with a maximum antichain, from a maximum matching on
/// the split comparability graph and Konig's theorem.
WidthResult width_with_witness(const Poset& p);
inline std::size_t width(const Poset& p) { return width_with_witness(p).width; }

/// A minimum chain partition (Dilworth). Chains are ordered by their least
/// element's id.
ChainPartition dilworth_partition(const Poset& p);

Graph incomparability_graph(const Poset& p);

inline constexpr std::uint64_t kDefaultKkBudget = 50'000'000;

/// Budgeted exhaustive search for two disjoint, mutually incomparable
/// k-chains. Returns nullopt only when the search completed; throws
/// BudgetExhausted if it ran out of nodes first.
std::optional<KkWitness> find_k_plus_k(const Poset& p, std::size_t k,
                                       std::uint64_t budget = kDefaultKkBudget);

/// True iff every relation of q is a relation of p. Throws SizeMismatch.
bool is_extension(const Poset& p, const Poset& q);

template <typename T>
struct ClosedInterval {
  T lo;
  T hi;
  bool operator==(const ClosedInterval&) const = default;
};

/// Interval order: u < v iff I(u) lies entirely left of I(v).
template <typename T>
Poset interval_order_from_intervals(std::span<const ClosedInterval<T>> intervals) {
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) throw MalformedInterval("interval with hi < lo");
  }
  std::vector<Relation> rel;
  for (Id u = 0; u < intervals.size(); ++u) {
    for (Id v = 0; v < intervals.size(); ++v) {
      if (intervals[u].hi < intervals[v].lo) rel.emplace_back(u, v);
    }
  }
  return Poset::build(intervals.size(), rel);
}

template <typename T>
Poset interval_order_from_intervals(const std::vector<ClosedInterval<T>>& intervals) {
  return interval_order_from_intervals(std::span<const ClosedInterval<T>>(intervals));
}

/// Polynomial scan for the four-element 2+2 pattern a<b, c<d, a||d, c||b.
std::optional<KkWitness> find_two_plus_two(const Poset& p);
bool is_interval_order(const Poset& p);

}  // namespace posetff
