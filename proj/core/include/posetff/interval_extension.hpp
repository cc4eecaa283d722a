#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "posetff/poset.hpp"

namespace posetff {

/// Half-open run [begin, end) of positions inside one chain.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const Segment&) const = default;
};

/// A transversal of a chain partition: one consecutive segment per chain.
struct Block {
  std::vector<Segment> segments;  // indexed like the chains

  /// Ids of the block's elements, chain by chain.
  std::vector<Id> elements(const ChainPartition& cp) const;
  std::size_t size() const;
  bool operator==(const Block&) const = default;
};

/// Throws InvalidBlock unless `x` has one in-range segment per chain of `cp`.
void check_block_shape(const ChainPartition& cp, const Block& x);
/// The block condition proper: shape plus |X n C_i| >= min(|C_i|, 2k-3).
bool is_block(const ChainPartition& cp, const Block& x, std::size_t k);

/// up(X): elements of C_i - X lying above every element of X n C_i.
std::vector<Id> up_set(const Poset& p, const ChainPartition& cp, const Block& x);

/// Per-chain data of the good-element argument for one chain whose up-set
/// part is non-empty.
struct ChainCertificate {
  std::size_t chain;           // 0-based chain index
  Id a, b, c, d;               // a <= b < c <= d
  std::vector<Id> lower;       // L_i: the k smallest of (X n C_i) + {d}
  std::vector<Id> upper;       // U_i: from b upwards through d
};

/// Everything needed to re-check why the chosen element is good.
struct GoodElementCertificate {
  std::vector<ChainCertificate> chains;
  /// Arcs (i, j) of D as positions into `chains`: a_i is not below d_j.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t sink;  // position into `chains`
};

struct GoodElement {
  std::size_t chain;  // 0-based chain index i*
  Id element;         // min of X n C_{i*}
  GoodElementCertificate certificate;
};

/// Finds a chain whose segment minimum lies below all of up(X), choosing the
/// sink of D with the smallest chain index. If D has no sink the input holds a
/// k+k, and a witness is extracted by replaying the cycle argument. Goodness
/// of the returned element is verified against up(X) directly.
/// Throws NoUpSet when up(X) is empty.
std::variant<GoodElement, KkWitness> find_good_element(const Poset& p, const ChainPartition& cp,
                                                       const Block& x, std::size_t k);

struct BlockMove {
  Id removed;
  Id added;
  std::size_t chain;  // 0-based
};

struct BlockSequence {
  std::size_t k = 2;
  ChainPartition chains;
  std::vector<Block> blocks;  // B_1..B_q
  std::vector<BlockMove> moves;

  std::size_t length() const { return blocks.size(); }
  std::size_t max_block_size() const;
  std::vector<Id> block_elements(std::size_t t) const { return blocks.at(t).elements(chains); }
};

/// Slides blocks along a Dilworth partition from the bottom segments until
/// up(B_q) is empty. Returns a k+k witness if the sliding gets stuck.
/// Throws ParamError for k < 2.
std::variant<BlockSequence, KkWitness> block_sequence(const Poset& p, std::size_t k);

using IntInterval = ClosedInterval<long long>;

/// Per element, the 1-based range of blocks containing it.
struct IntervalRepresentation {
  std::vector<IntInterval> intervals;
};

struct IntervalExtension {
  Poset order;  // Q
  IntervalRepresentation representation;
  BlockSequence blocks;
};

/// An interval order Q of width at most (2k-3)w that p extends.
std::variant<IntervalExtension, KkWitness> interval_order_of(const Poset& p, std::size_t k);

struct PathDecomposition {
  std::vector<std::vector<Id>> bags;
  /// Largest bag minus one; -1 for no bags.
  long long width() const;
};

/// The block sequence read as bags; a path decomposition of the
/// incomparability graph of p.
std::variant<PathDecomposition, KkWitness> path_decomposition_of(const Poset& p, std::size_t k);

/// Every vertex appears in a non-empty consecutive run of bags and every edge
/// has both ends in some bag.
bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

}  // namespace posetff
