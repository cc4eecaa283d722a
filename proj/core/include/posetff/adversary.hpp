#pragma once

#include <cstddef>
#include <string>

#include "posetff/first_fit.hpp"
#include "posetff/poset.hpp"

namespace posetff {

/// Row/column coordinates of v_{i,j} (1 <= j <= i <= q), plus the copy index
/// (1-based) for stacked posets.
struct AdversaryCoord {
  std::size_t copy = 1;
  std::size_t row = 1;
  std::size_t col = 1;
  bool operator==(const AdversaryCoord&) const = default;
};

/// Kierstead's width-2 poset P_q on v_{i,j}, 1 <= j <= i <= q:
///   v_{i,j} < v_{i',j'}  iff  i <= i'-2, or i in {i'-1, i'} and j <= j'-1.
/// Ids are row-major, so the natural order v_{1,1}, v_{2,1}, v_{2,2}, ... is
/// the identity permutation.
struct KiersteadPoset {
  std::size_t q = 0;
  Poset poset;
  PresentationOrder natural;

  static Id id_of(std::size_t row, std::size_t col) { return row * (row - 1) / 2 + (col - 1); }
  static AdversaryCoord coord_of(Id id);
};

/// w-1 copies of P_{k-1}, stacked so that every element outside the top row
/// of copy l lies below everything in later copies. Ids concatenate the copies.
struct StackedPoset {
  std::size_t k = 0;
  std::size_t w = 0;
  Poset poset;
  PresentationOrder order;

  std::size_t copy_size() const { return (k - 1) * k / 2; }
  Id id_of(AdversaryCoord c) const;
  AdversaryCoord coord_of(Id id) const;
};

/// Throws ParamError for q == 0.
KiersteadPoset kierstead(std::size_t q);

/// Throws ParamError for k < 3 or w < 2; see stacked_k2_antichain for k = 2.
StackedPoset stacked(std::size_t k, std::size_t w);

/// Replacement for the degenerate k = 2 stack: an antichain of w elements,
/// which has width w, no 2+2 and forces w chains.
StackedPoset stacked_k2_antichain(std::size_t w);

enum class AdversaryKind { Kierstead, Stacked };

struct AdversaryParams {
  AdversaryKind kind = AdversaryKind::Kierstead;
  std::size_t q = 0;  // Kierstead
  std::size_t k = 0;  // Stacked
  std::size_t w = 0;  // Stacked
};

/// Chain (1-based) First-Fit picks for `element` under the forcing order:
/// i-j+1 within a copy, shifted by (k-1)(l-1) for copy l.
/// Throws OutOfRange for ids outside the construction.
std::size_t predicted_assignment(const AdversaryParams& params, Id element);

/// Label such as "v_{3,2}" or "v^2_{3,2}".
std::string adversary_label(AdversaryKind kind, AdversaryCoord c);

}  // namespace posetff
