#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "posetff/first_fit.hpp"
#include "posetff/interval_extension.hpp"
#include "posetff/poset.hpp"

namespace posetff {

/// Interval supergraph G' of a graph, read off a path decomposition: each
/// vertex spans the (1-based) bags that contain it.
struct IntervalCompletion {
  std::vector<IntInterval> intervals;
  std::size_t clique_number = 0;  // max point load = largest bag
};

/// Throws InvalidDecomposition unless pd is a path decomposition of g.
IntervalCompletion interval_completion(const Graph& g, const PathDecomposition& pd);

/// Intersection graph of closed intervals.
Graph interval_graph(std::span<const IntInterval> intervals);

/// Maximum number of intervals sharing a point (sweep over endpoints).
std::size_t interval_clique_number(std::span<const IntInterval> intervals);

struct Homomorphism {
  std::vector<Id> map;  // vertex of G -> vertex of H
};

/// H and its colouring Z_1..Z_c. Vertex v_{i,j} of H is the j-th component
/// (left to right) of G'[V_i]; vertices are numbered class by class.
struct FFImage {
  Graph h;
  std::vector<IntInterval> intervals;                // I_{i,j} per H vertex
  FFColoring classes;                                // Z_1..Z_c
  std::vector<std::vector<std::vector<Id>>> components;  // W_{i,j} as G vertices
};

/// Collapses each component of G'[V_i] to a single interval vertex. Checks
/// on the way that every union interval is contiguous, that same-class
/// intervals are disjoint and that Z is an FF colouring of H.
/// Throws InvalidColoring if `coloring` is not an FF colouring of g.
std::pair<FFImage, Homomorphism> build_ff_image(const Graph& g, const IntervalCompletion& ic,
                                                const FFColoring& coloring);

/// Edge preservation (no edge may collapse to a single vertex) and
/// surjectivity.
bool validate_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f);

inline constexpr std::size_t kDefaultPathwidthLimit = 14;

/// Exact pathwidth as the vertex separation number, by dynamic programming
/// over vertex subsets. Throws TooLarge above `limit` vertices.
std::size_t pathwidth_exact(const Graph& g, std::size_t limit = kDefaultPathwidthLimit);

/// A path decomposition of minimum width, built from an optimal vertex
/// separation ordering.
PathDecomposition optimal_path_decomposition(const Graph& g,
                                             std::size_t limit = kDefaultPathwidthLimit);

}  // namespace posetff
