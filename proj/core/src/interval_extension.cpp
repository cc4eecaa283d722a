#include "posetff/interval_extension.hpp"

#include <algorithm>
#include <string>

namespace posetff {

std::vector<Id> Block::elements(const ChainPartition& cp) const {
  std::vector<Id> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& c = cp.chains.at(i).elements;
    out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(segments[i].begin),
               c.begin() + static_cast<std::ptrdiff_t>(segments[i].end));
  }
  return out;
}

std::size_t Block::size() const {
  std::size_t s = 0;
  for (const auto& seg : segments) s += seg.size();
  return s;
}

void check_block_shape(const ChainPartition& cp, const Block& x) {
  if (x.segments.size() != cp.size()) {
    throw InvalidBlock("block has " + std::to_string(x.segments.size()) + " segments for " +
                       std::to_string(cp.size()) + " chains");
  }
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const Segment& s = x.segments[i];
    if (s.begin > s.end || s.end > cp.chains[i].size()) {
      throw InvalidBlock("segment [" + std::to_string(s.begin) + "," + std::to_string(s.end) +
                         ") does not fit chain " + std::to_string(i));
    }
  }
}

bool is_block(const ChainPartition& cp, const Block& x, std::size_t k) {
  check_block_shape(cp, x);
  const std::size_t window = 2 * k - 3;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (x.segments[i].size() < std::min(cp.chains[i].size(), window)) return false;
  }
  return true;
}

std::vector<Id> up_set(const Poset& p, const ChainPartition& cp, const Block& x) {
  check_block_shape(cp, x);
  std::vector<Id> out;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const auto& c = cp.chains[i].elements;
    const Segment& s = x.segments[i];
    // An empty segment puts the whole chain above it vacuously.
    const std::size_t from = s.size() == 0 ? 0 : s.end;
    for (std::size_t pos = from; pos < c.size(); ++pos) {
      if (s.size() != 0 && !p.less(c[s.end - 1], c[pos])) {
        throw InvalidBlock("chain " + std::to_string(i) + " is not increasing");
      }
      out.push_back(c[pos]);
    }
  }
  return out;
}

namespace {

// First cross pair (l, u) with l comparable to u, if any.
std::optional<std::pair<Id, Id>> comparable_cross_pair(const Poset& p, std::span<const Id> lower,
                                                       std::span<const Id> upper) {
  for (Id l : lower) {
    for (Id u : upper) {
      if (p.comparable(l, u)) return std::pair{l, u};
    }
  }
  return std::nullopt;
}

// Replays the cycle argument along `cycle` (positions into cert.chains,
// every consecutive pair an arc of D, closing back to the front). Each step
// pairs a k-chain ending in c of the first chain with the next chain's U. A
// step without a comparable cross pair is a k+k.
KkWitness witness_from_cycle(const Poset& p, const GoodElementCertificate& cert,
                             const std::vector<std::size_t>& cycle, std::size_t k) {
  const ChainCertificate& first = cert.chains[cycle.front()];
  std::vector<Id> lower = first.lower;
  for (std::size_t t = 1; t < cycle.size(); ++t) {
    const ChainCertificate& prev = cert.chains[cycle[t - 1]];
    const ChainCertificate& cur = cert.chains[cycle[t]];
    if (t > 1) {
      // {c_first} + (L_prev - {c_prev}); a chain because c_first > b_prev.
      lower.assign(prev.lower.begin(), prev.lower.end() - 1);
      lower.push_back(first.c);
    }
    auto hit = comparable_cross_pair(p, lower, cur.upper);
    if (!hit) {
      KkWitness w{Chain{lower}, Chain{{cur.upper.begin(), cur.upper.begin() + static_cast<std::ptrdiff_t>(k)}}};
      if (!is_kk_witness(p, w, k)) throw InternalError("cycle replay produced an invalid witness");
      return w;
    }
    if (p.less(hit->first, hit->second)) {
      throw InternalError("comparable pair points upward despite the arc of D");
    }
    if (!p.less(cur.b, first.c)) {
      throw InternalError("cycle replay lost c_first > b");
    }
  }
  throw InternalError("directed cycle in D without a k+k witness");
}

}  // namespace

std::variant<GoodElement, KkWitness> find_good_element(const Poset& p, const ChainPartition& cp,
                                                       const Block& x, std::size_t k) {
  if (k < 2) throw ParamError("k must be at least 2");
  if (!is_block(cp, x, k)) throw InvalidBlock("segments shorter than min(|C_i|, 2k-3)");
  const std::vector<Id> up = up_set(p, cp, x);
  if (up.empty()) throw NoUpSet("up(X) is empty");

  GoodElementCertificate cert;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const auto& c = cp.chains[i].elements;
    const Segment& s = x.segments[i];
    if (s.end == c.size()) continue;
    // T = (X n C_i) + {d_i}, increasing; |T| >= 2k-2 >= k.
    std::vector<Id> t(c.begin() + static_cast<std::ptrdiff_t>(s.begin),
                      c.begin() + static_cast<std::ptrdiff_t>(s.end) + 1);
    ChainCertificate cc;
    cc.chain = i;
    cc.lower.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
    cc.upper.assign(t.begin() + static_cast<std::ptrdiff_t>(k - 2), t.end());
    cc.a = cc.lower.front();
    cc.b = cc.lower[k - 2];
    cc.c = cc.lower[k - 1];
    cc.d = t.back();
    cert.chains.push_back(std::move(cc));
  }

  const std::size_t m = cert.chains.size();
  std::vector<std::vector<std::size_t>> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !p.less(cert.chains[i].a, cert.chains[j].d)) {
        cert.arcs.emplace_back(i, j);
        out[i].push_back(j);
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!out[i].empty()) continue;
    cert.sink = i;
    const Id good = cert.chains[i].a;
    for (Id y : up) {
      if (!p.less(good, y)) throw InternalError("sink of D is not below all of up(X)");
    }
    const std::size_t chain = cert.chains[i].chain;
    return GoodElement{chain, good, std::move(cert)};
  }

  // Every vertex has an out-arc: walk smallest successors until a repeat.
  std::vector<std::size_t> seen_at(m, m);
  std::vector<std::size_t> walk;
  std::size_t v = 0;
  while (seen_at[v] == m) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    v = out[v].front();
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return witness_from_cycle(p, cert, cycle, k);
}

std::size_t BlockSequence::max_block_size() const {
  std::size_t best = 0;
  for (const auto& b : blocks) best = std::max(best, b.size());
  return best;
}

std::variant<BlockSequence, KkWitness> block_sequence(const Poset& p, std::size_t k) {
  if (k < 2) throw ParamError("k must be at least 2");
  BlockSequence seq;
  seq.k = k;
  seq.chains = dilworth_partition(p);

  Block current;
  for (const auto& c : seq.chains.chains) {
    current.segments.push_back(Segment{0, std::min(c.size(), 2 * k - 3)});
  }
  seq.blocks.push_back(current);

  while (!up_set(p, seq.chains, current).empty()) {
    auto found = find_good_element(p, seq.chains, current, k);
    if (auto* w = std::get_if<KkWitness>(&found)) return std::move(*w);
    const auto& good = std::get<GoodElement>(found);
    Segment& s = current.segments[good.chain];
    const auto& c = seq.chains.chains[good.chain].elements;
    seq.moves.push_back(BlockMove{c[s.begin], c[s.end], good.chain});
    ++s.begin;
    ++s.end;
    seq.blocks.push_back(current);
  }
  return seq;
}

std::variant<IntervalExtension, KkWitness> interval_order_of(const Poset& p, std::size_t k) {
  auto seq = block_sequence(p, k);
  if (auto* w = std::get_if<KkWitness>(&seq)) return std::move(*w);
  auto& blocks = std::get<BlockSequence>(seq);

  std::vector<IntInterval> iv(p.size(), IntInterval{0, -1});
  for (std::size_t t = 0; t < blocks.length(); ++t) {
    const auto pos = static_cast<long long>(t + 1);
    for (Id u : blocks.block_elements(t)) {
      if (iv[u].hi == -1) iv[u].lo = pos;
      else if (iv[u].hi != pos - 1) throw InternalError("element left a block and came back");
      iv[u].hi = pos;
    }
  }
  for (Id u = 0; u < p.size(); ++u) {
    if (iv[u].hi == -1) throw InternalError("element " + std::to_string(u) + " in no block");
  }

  Poset q = interval_order_from_intervals(iv);
  if (!is_extension(p, q)) throw InternalError("block interval order is not extended by P");
  return IntervalExtension{std::move(q), IntervalRepresentation{std::move(iv)}, std::move(blocks)};
}

long long PathDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return static_cast<long long>(best) - 1;
}

std::variant<PathDecomposition, KkWitness> path_decomposition_of(const Poset& p, std::size_t k) {
  auto seq = block_sequence(p, k);
  if (auto* w = std::get_if<KkWitness>(&seq)) return std::move(*w);
  const auto& blocks = std::get<BlockSequence>(seq);
  PathDecomposition pd;
  for (std::size_t t = 0; t < blocks.length(); ++t) {
    auto bag = blocks.block_elements(t);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  const std::size_t n = g.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(n, kNone), last(n, kNone), hits(n, 0);
  for (std::size_t t = 0; t < pd.bags.size(); ++t) {
    Bits in_bag(n);
    for (Id v : pd.bags[t]) {
      if (v >= n) return false;
      if (in_bag.test(v)) continue;
      in_bag.set(v);
      if (first[v] == kNone) first[v] = t;
      last[v] = t;
      ++hits[v];
    }
  }
  for (Id v = 0; v < n; ++v) {
    if (first[v] == kNone || last[v] - first[v] + 1 != hits[v]) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (last[u] < first[v] || last[v] < first[u]) return false;
  }
  return true;
}

}  // namespace posetff
