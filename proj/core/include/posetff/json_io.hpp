#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "posetff/ff_homomorphism.hpp"
#include "posetff/first_fit.hpp"
#include "posetff/generators.hpp"
#include "posetff/interval_extension.hpp"
#include "posetff/poset.hpp"

// Readers and writers for the on-disk JSON formats. Writers are
// deterministic: identical inputs give byte-identical text. Readers throw
// ParseError on malformed documents and the library's own errors (e.g.
// CycleError) on semantically invalid ones.
namespace posetff::json {

/// Free-form "meta" object echoed into generated files, kept in insertion
/// order.
using MetaValue = std::variant<long long, unsigned long long, double, std::string>;
using Meta = std::vector<std::pair<std::string, MetaValue>>;

Meta meta_of(const GenConfig& config);

// {"n": int, "names": [str]?, "relations": [[u,v],...], "meta": {...}?}
// Written relations are the cover pairs; readers accept any generating set.
std::string write_poset(const Poset& p, const Meta& meta = {});
Poset read_poset(std::string_view text);

// {"n": int, "edges": [[u,v],...], "meta": {...}?}
std::string write_graph(const Graph& g, const Meta& meta = {});
Graph read_graph(std::string_view text);

// {"order": [ids]}
std::string write_order(const PresentationOrder& order);
PresentationOrder read_order(std::string_view text);

// {"chains": [[ids]...], "assignment": [chain index per element]}
std::string write_ff_result(const FFChainResult& r);
/// Reads back the chains of an FF result file.
ChainPartition read_ff_chains(std::string_view text);

// {"classes": [[ids]...]}
std::string write_coloring(const FFColoring& c);
FFColoring read_coloring(std::string_view text);

// {"intervals": [[first,last], ...]} with 1-based block indices.
std::string write_intervals(const IntervalRepresentation& rep);
IntervalRepresentation read_intervals(std::string_view text);

// {"bags": [[ids]...]}
std::string write_path_decomposition(const PathDecomposition& pd);
PathDecomposition read_path_decomposition(std::string_view text);

// {"map": [image per vertex]}
std::string write_homomorphism(const Homomorphism& f);
Homomorphism read_homomorphism(std::string_view text);

// {"k": int, "a": [ids], "b": [ids]}
std::string write_witness(const KkWitness& w);
KkWitness read_witness(std::string_view text);

// [{"removed": id, "added": id, "chain": index}, ...]
std::string write_block_trace(const BlockSequence& seq);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace posetff::json
