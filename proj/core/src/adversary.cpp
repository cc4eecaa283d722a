#include "posetff/adversary.hpp"

#include <string>
#include <vector>

namespace posetff {

namespace {

bool kierstead_less(AdversaryCoord a, AdversaryCoord b) {
  return a.row + 2 <= b.row || ((a.row + 1 == b.row || a.row == b.row) && a.col + 1 <= b.col);
}

std::size_t triangle(std::size_t q) { return q * (q + 1) / 2; }

}  // namespace

AdversaryCoord KiersteadPoset::coord_of(Id id) {
  std::size_t row = 1;
  while (triangle(row) <= id) ++row;
  return AdversaryCoord{1, row, id - triangle(row - 1) + 1};
}

std::string adversary_label(AdversaryKind kind, AdversaryCoord c) {
  std::string s = "v";
  if (kind == AdversaryKind::Stacked) s += "^" + std::to_string(c.copy);
  return s + "_{" + std::to_string(c.row) + "," + std::to_string(c.col) + "}";
}

KiersteadPoset kierstead(std::size_t q) {
  if (q == 0) throw ParamError("Kierstead poset needs q >= 1");
  const std::size_t n = triangle(q);
  std::vector<Relation> rel;
  std::vector<std::string> names;
  for (Id u = 0; u < n; ++u) {
    const auto cu = KiersteadPoset::coord_of(u);
    names.push_back(adversary_label(AdversaryKind::Kierstead, cu));
    for (Id v = 0; v < n; ++v) {
      if (kierstead_less(cu, KiersteadPoset::coord_of(v))) rel.emplace_back(u, v);
    }
  }
  return KiersteadPoset{q, Poset::build(n, rel, std::move(names)), PresentationOrder::identity(n)};
}

Id StackedPoset::id_of(AdversaryCoord c) const {
  return (c.copy - 1) * copy_size() + KiersteadPoset::id_of(c.row, c.col);
}

AdversaryCoord StackedPoset::coord_of(Id id) const {
  AdversaryCoord c = KiersteadPoset::coord_of(id % copy_size());
  c.copy = id / copy_size() + 1;
  return c;
}

StackedPoset stacked(std::size_t k, std::size_t w) {
  if (k < 3) throw ParamError("stacked construction needs k >= 3 (use stacked_k2_antichain)");
  if (w < 2) throw ParamError("stacked construction needs w >= 2");
  StackedPoset sp;
  sp.k = k;
  sp.w = w;
  const std::size_t n = (w - 1) * sp.copy_size();
  std::vector<Relation> rel;
  std::vector<std::string> names;
  for (Id u = 0; u < n; ++u) {
    const auto cu = sp.coord_of(u);
    names.push_back(adversary_label(AdversaryKind::Stacked, cu));
    for (Id v = 0; v < n; ++v) {
      const auto cv = sp.coord_of(v);
      const bool inside = cu.copy == cv.copy && kierstead_less(cu, cv);
      const bool across = cu.copy < cv.copy && cu.row != k - 1;
      if (inside || across) rel.emplace_back(u, v);
    }
  }
  sp.poset = Poset::build(n, rel, std::move(names));
  sp.order = PresentationOrder::identity(n);
  return sp;
}

StackedPoset stacked_k2_antichain(std::size_t w) {
  StackedPoset sp;
  sp.k = 2;
  sp.w = w;
  sp.poset = Poset::antichain(w);
  sp.order = PresentationOrder::identity(w);
  return sp;
}

std::size_t predicted_assignment(const AdversaryParams& params, Id element) {
  switch (params.kind) {
    case AdversaryKind::Kierstead: {
      if (params.q == 0 || element >= triangle(params.q)) {
        throw OutOfRange("element " + std::to_string(element) + " not in P_" +
                         std::to_string(params.q));
      }
      const auto c = KiersteadPoset::coord_of(element);
      return c.row - c.col + 1;
    }
    case AdversaryKind::Stacked: {
      if (params.k == 2) {
        if (element >= params.w) throw OutOfRange("element outside the k=2 antichain");
        return element + 1;
      }
      const std::size_t m = (params.k - 1) * params.k / 2;
      if (params.k < 3 || params.w < 2 || element >= (params.w - 1) * m) {
        throw OutOfRange("element " + std::to_string(element) + " not in Q_{" +
                         std::to_string(params.k) + "," + std::to_string(params.w) + "}");
      }
      const auto c = KiersteadPoset::coord_of(element % m);
      const std::size_t copy = element / m + 1;
      return (params.k - 1) * (copy - 1) + (c.row - c.col + 1);
    }
  }
  throw OutOfRange("unknown adversary kind");
}

}  // namespace posetff
