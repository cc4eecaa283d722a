#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "posetff/poset.hpp"

namespace posetff {

/// The order in which an online algorithm sees the elements: a permutation
/// of 0..n-1.
class PresentationOrder {
 public:
  PresentationOrder() = default;
  /// Throws InvalidOrder unless `order` is a permutation of 0..size-1.
  explicit PresentationOrder(std::vector<Id> order);
  static PresentationOrder identity(std::size_t n);

  std::span<const Id> ids() const { return order_; }
  std::size_t size() const { return order_.size(); }
  Id operator[](std::size_t i) const { return order_[i]; }

 private:
  std::vector<Id> order_;
};

struct FFStep {
  Id element;
  std::size_t chain;  // 1-based
};

struct FFChainResult {
  ChainPartition partition;             // C_1..C_q, each listed increasingly
  std::vector<std::size_t> assignment;  // element -> 1-based chain index
  std::vector<FFStep> trace;
  std::size_t chains_used() const { return partition.size(); }
};

/// Online First-Fit: each arriving element joins the least-index chain whose
/// members are all comparable to it, or opens a new chain at the end.
FFChainResult first_fit_chains(const Poset& p, const PresentationOrder& order);

/// Checks the First-Fit chain partition property: every part is a non-empty
/// chain, and each v in C_j has an element of every earlier C_i incomparable
/// to it. Throws CoverageError if `cp` is not a partition of the elements.
bool validate_ff_partition(const Poset& p, const ChainPartition& cp);

/// Colour classes V_1..V_c, each sorted by vertex id.
struct FFColoring {
  std::vector<std::vector<Id>> classes;
  std::size_t size() const { return classes.size(); }
  /// Vertex -> 1-based colour. `n` is the vertex count.
  std::vector<std::size_t> colors(std::size_t n) const;
};

FFColoring first_fit_color(const Graph& g, const PresentationOrder& order);

/// Independence of every class plus the lower-neighbour condition. Throws
/// CoverageError if the classes do not partition the vertices.
bool validate_ff_coloring(const Graph& g, const FFColoring& c);

inline constexpr std::size_t kDefaultGrundyLimit = 10;

/// An FF coloring with the maximum number of colours, found by sweeping
/// presentation orders. Orders that reach the same partial colouring are
/// explored once. Throws TooLarge when g has more than `limit` vertices.
FFColoring grundy_coloring(const Graph& g, std::size_t limit = kDefaultGrundyLimit);

/// FF(G): the most colours First-Fit can be forced to use on g.
inline std::size_t grundy_number(const Graph& g, std::size_t limit = kDefaultGrundyLimit) {
  return grundy_coloring(g, limit).size();
}

}  // namespace posetff
