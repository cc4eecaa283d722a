#pragma once

// Brute-force reference implementations. They work on plain boolean matrices
// and share no code with the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "posetff/poset.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix less_matrix(const posetff::Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t u = 0; u < p.size(); ++u)
    for (std::size_t v = 0; v < p.size(); ++v) m[u][v] = p.less(u, v);
  return m;
}

inline Matrix adjacency(const posetff::Graph& g) {
  Matrix m(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline Matrix adjacency(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) m[u][v] = m[v][u] = true;
  return m;
}

/// Floyd-Warshall reachability; nullopt when a cycle makes some u < u.
inline std::optional<Matrix> closure(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  Matrix m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : rel) m[u][v] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i][i]) return std::nullopt;
  return m;
}

inline bool comparable(const Matrix& lt, std::size_t u, std::size_t v) {
  return u == v || lt[u][v] || lt[v][u];
}

/// Largest antichain by subset enumeration (n <= 20).
inline std::size_t width(const Matrix& lt) {
  const std::size_t n = lt.size();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && comparable(lt, u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Any four elements a<b, c<d with all cross pairs incomparable.
inline bool has_two_plus_two(const Matrix& lt) {
  const std::size_t n = lt.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (!lt[c][d] || c == a || c == b || d == a || d == b) continue;
          if (!comparable(lt, a, c) && !comparable(lt, a, d) && !comparable(lt, b, c) &&
              !comparable(lt, b, d))
            return true;
        }
    }
  return false;
}

/// All k-subsets of `pool` that are chains.
inline std::vector<std::vector<std::size_t>> chains_of_size(const Matrix& lt,
                                                           const std::vector<std::size_t>& pool,
                                                           std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      bool ok = true;
      for (auto x : pick) ok = ok && comparable(lt, x, pool[i]);
      if (!ok) continue;
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// k+k by enumerating chains A and searching the elements incomparable to A.
inline bool has_k_plus_k(const Matrix& lt, std::size_t k) {
  const std::size_t n = lt.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (const auto& a : chains_of_size(lt, all, k)) {
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < n; ++v) {
      bool ok = true;
      for (auto x : a) ok = ok && !comparable(lt, x, v);
      if (ok) free.push_back(v);
    }
    if (!chains_of_size(lt, free, k).empty()) return true;
  }
  return false;
}

/// Greedy colours used in the given order.
inline std::size_t greedy_colors(const Matrix& adj, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> color(adj.size(), 0);
  std::size_t used = 0;
  for (auto v : order) {
    std::size_t c = 1;
    for (bool clash = true; clash; ) {
      clash = false;
      for (std::size_t u = 0; u < adj.size(); ++u)
        if (adj[v][u] && color[u] == c) {
          clash = true;
          ++c;
          break;
        }
    }
    color[v] = c;
    used = std::max(used, c);
  }
  return used;
}

/// FF(G) over all n! orders (n <= 9).
inline std::size_t grundy(const Matrix& adj) {
  std::vector<std::size_t> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = 0;
  do best = std::max(best, greedy_colors(adj, order));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Pathwidth as the minimum vertex separation over all n! orders (n <= 9).
inline std::size_t pathwidth(const Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = n;
  do {
    std::vector<bool> placed(n, false);
    std::size_t worst = 0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      placed[order[i]] = true;
      std::size_t boundary = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (!placed[u]) continue;
        for (std::size_t v = 0; v < n; ++v)
          if (!placed[v] && adj[u][v]) {
            ++boundary;
            break;
          }
      }
      worst = std::max(worst, boundary);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace oracle
