#include "posetff/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace posetff::json {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Runs a field accessor, turning nlohmann's type/key errors into ParseError.
template <typename F>
auto field(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad '") + what + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json meta_json(const Meta& meta) {
  Json m = Json::object();
  for (const auto& [key, value] : meta) {
    std::visit([&](const auto& v) { m[key] = v; }, value);
  }
  return m;
}

std::vector<Relation> read_pairs(const Json& arr, const char* what) {
  return field(what, [&] {
    std::vector<Relation> out;
    for (const auto& pr : arr) {
      if (!pr.is_array() || pr.size() != 2) throw ParseError(std::string(what) + " entry is not a pair");
      out.emplace_back(pr[0].get<Id>(), pr[1].get<Id>());
    }
    return out;
  });
}

Json id_lists(const std::vector<std::vector<Id>>& lists) {
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

}  // namespace

Meta meta_of(const GenConfig& c) {
  Meta m{{"kind", to_string(c.kind)},
         {"seed", static_cast<unsigned long long>(c.seed)},
         {"n", static_cast<long long>(c.n)}};
  switch (c.kind) {
    case GenKind::IntervalOrder:
      m.emplace_back("coordinate_range", c.coordinate_range);
      break;
    case GenKind::KkFreeRejection:
      m.emplace_back("k", static_cast<long long>(c.k));
      m.emplace_back("target_width", static_cast<long long>(c.target_width));
      m.emplace_back("density", c.density);
      break;
    case GenKind::RandomDag:
    case GenKind::RandomGraph:
      m.emplace_back("density", c.density);
      break;
  }
  return m;
}

std::string write_poset(const Poset& p, const Meta& meta) {
  Json j;
  j["n"] = p.size();
  if (!p.names().empty()) j["names"] = p.names();
  Json rel = Json::array();
  for (auto [u, v] : p.cover_relations()) rel.push_back({u, v});
  j["relations"] = std::move(rel);
  if (!meta.empty()) j["meta"] = meta_json(meta);
  return dump(j);
}

Poset read_poset(std::string_view text) {
  const Json j = parse(text);
  const auto n = field("n", [&] { return j.at("n").get<std::size_t>(); });
  std::vector<std::string> names;
  if (j.contains("names")) names = field("names", [&] { return j.at("names").get<std::vector<std::string>>(); });
  const Json empty = Json::array();
  const Json& rel = j.contains("relations") ? j.at("relations") : empty;
  return Poset::build(n, read_pairs(rel, "relations"), std::move(names));
}

std::string write_graph(const Graph& g, const Meta& meta) {
  Json j;
  j["n"] = g.size();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!meta.empty()) j["meta"] = meta_json(meta);
  return dump(j);
}

Graph read_graph(std::string_view text) {
  const Json j = parse(text);
  const auto n = field("n", [&] { return j.at("n").get<std::size_t>(); });
  const Json empty = Json::array();
  const Json& edges = j.contains("edges") ? j.at("edges") : empty;
  return Graph::from_edges(n, read_pairs(edges, "edges"));
}

std::string write_order(const PresentationOrder& order) {
  Json j;
  j["order"] = std::vector<Id>(order.ids().begin(), order.ids().end());
  return dump(j);
}

PresentationOrder read_order(std::string_view text) {
  const Json j = parse(text);
  return PresentationOrder(field("order", [&] { return j.at("order").get<std::vector<Id>>(); }));
}

std::string write_ff_result(const FFChainResult& r) {
  Json j;
  Json chains = Json::array();
  for (const auto& c : r.partition.chains) chains.push_back(c.elements);
  j["chains"] = std::move(chains);
  j["assignment"] = r.assignment;
  return dump(j);
}

ChainPartition read_ff_chains(std::string_view text) {
  const Json j = parse(text);
  const auto lists = field("chains", [&] { return j.at("chains").get<std::vector<std::vector<Id>>>(); });
  ChainPartition cp;
  for (const auto& l : lists) cp.chains.push_back(Chain{l});
  return cp;
}

std::string write_coloring(const FFColoring& c) {
  Json j;
  j["classes"] = id_lists(c.classes);
  return dump(j);
}

FFColoring read_coloring(std::string_view text) {
  const Json j = parse(text);
  return FFColoring{field("classes", [&] { return j.at("classes").get<std::vector<std::vector<Id>>>(); })};
}

std::string write_intervals(const IntervalRepresentation& rep) {
  Json arr = Json::array();
  for (const auto& iv : rep.intervals) arr.push_back({iv.lo, iv.hi});
  Json j;
  j["intervals"] = std::move(arr);
  return dump(j);
}

IntervalRepresentation read_intervals(std::string_view text) {
  const Json j = parse(text);
  IntervalRepresentation rep;
  field("intervals", [&] {
    for (const auto& pr : j.at("intervals")) {
      if (!pr.is_array() || pr.size() != 2) throw ParseError("interval is not a pair");
      IntInterval iv{pr[0].get<long long>(), pr[1].get<long long>()};
      if (iv.hi < iv.lo) throw MalformedInterval("interval with hi < lo");
      rep.intervals.push_back(iv);
    }
    return 0;
  });
  return rep;
}

std::string write_path_decomposition(const PathDecomposition& pd) {
  Json j;
  j["bags"] = id_lists(pd.bags);
  return dump(j);
}

PathDecomposition read_path_decomposition(std::string_view text) {
  const Json j = parse(text);
  return PathDecomposition{field("bags", [&] { return j.at("bags").get<std::vector<std::vector<Id>>>(); })};
}

std::string write_homomorphism(const Homomorphism& f) {
  Json j;
  j["map"] = f.map;
  return dump(j);
}

Homomorphism read_homomorphism(std::string_view text) {
  const Json j = parse(text);
  return Homomorphism{field("map", [&] { return j.at("map").get<std::vector<Id>>(); })};
}

std::string write_witness(const KkWitness& w) {
  Json j;
  j["k"] = w.a.size();
  j["a"] = w.a.elements;
  j["b"] = w.b.elements;
  return dump(j);
}

KkWitness read_witness(std::string_view text) {
  const Json j = parse(text);
  KkWitness w = field("witness", [&] {
    return KkWitness{Chain{j.at("a").get<std::vector<Id>>()}, Chain{j.at("b").get<std::vector<Id>>()}};
  });
  const auto k = field("k", [&] { return j.contains("k") ? j.at("k").get<std::size_t>() : w.a.size(); });
  if (w.a.size() != k || w.b.size() != k) throw ParseError("witness chains do not have k elements");
  return w;
}

std::string write_block_trace(const BlockSequence& seq) {
  Json arr = Json::array();
  for (const auto& m : seq.moves) {
    Json step;
    step["removed"] = m.removed;
    step["added"] = m.added;
    step["chain"] = m.chain + 1;
    arr.push_back(std::move(step));
  }
  return dump(arr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace posetff::json
