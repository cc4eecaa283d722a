#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "bench.hpp"
#include "posetff/adversary.hpp"
#include "posetff/ff_homomorphism.hpp"
#include "posetff/first_fit.hpp"
#include "posetff/generators.hpp"
#include "posetff/interval_extension.hpp"
#include "posetff/json_io.hpp"
#include "posetff/poset.hpp"

namespace posetff::cli {

namespace fs = std::filesystem;

std::uint64_t kk_budget_from_env() {
  const char* raw = std::getenv("POSETFF_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultKkBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw ParamError(std::string("POSETFF_BUDGET is not a positive integer: ") + raw);
  return v;
}

namespace {

// "-" writes to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") out << text;
  else json::write_file(path, text);
}

Poset load_poset(const std::string& path) { return json::read_poset(json::read_file(path)); }

struct GenOptions {
  std::string out = "-";
  std::string order_out;
  std::size_t q = 0, k = 0, w = 0, n = 0, width = 0;
  std::uint64_t seed = 0;
  long long range = 0;
  double density = 0.5;
};

// Order file next to the poset file unless given explicitly.
std::string order_path(const GenOptions& o) {
  if (!o.order_out.empty() || o.out == "-") return o.order_out;
  fs::path p(o.out);
  return (p.parent_path() / (p.stem().string() + ".order.json")).string();
}

int cmd_gen_kierstead(const GenOptions& o, std::ostream& out) {
  const auto kp = kierstead(o.q);
  json::Meta meta{{"kind", std::string("kierstead")}, {"q", static_cast<long long>(o.q)}};
  emit(o.out, json::write_poset(kp.poset, meta), out);
  emit(order_path(o), json::write_order(kp.natural), out);
  return kExitOk;
}

int cmd_gen_stacked(const GenOptions& o, std::ostream& out) {
  const auto sp = o.k == 2 ? stacked_k2_antichain(o.w) : stacked(o.k, o.w);
  json::Meta meta{{"kind", std::string("stacked")},
                  {"k", static_cast<long long>(o.k)},
                  {"w", static_cast<long long>(o.w)}};
  if (o.k == 2) meta.emplace_back("construction", std::string("antichain"));
  emit(o.out, json::write_poset(sp.poset, meta), out);
  emit(order_path(o), json::write_order(sp.order), out);
  return kExitOk;
}

int cmd_gen_config(const GenOptions& o, GenKind kind, std::ostream& out) {
  GenConfig c;
  c.kind = kind;
  c.seed = o.seed;
  c.n = o.n;
  c.k = o.k;
  c.target_width = o.width;
  c.density = o.density;
  c.coordinate_range = o.range > 0 ? o.range : std::max<long long>(1, 2 * static_cast<long long>(o.n));
  if (kind == GenKind::KkFreeRejection) {
    KkFreeOptions opts;
    opts.target_width = o.width;
    opts.density = o.density;
    opts.budget = kk_budget_from_env();
    auto sample = gen_kk_free(o.seed, o.n, o.k, opts);
    auto meta = json::meta_of(c);
    meta.emplace_back("tries", static_cast<long long>(sample.tries));
    meta.emplace_back("sample_seed", static_cast<unsigned long long>(sample.sample_seed));
    emit(o.out, json::write_poset(sample.poset, meta), out);
  } else if (kind == GenKind::RandomGraph) {
    emit(o.out, json::write_graph(generate_graph(c), json::meta_of(c)), out);
  } else {
    emit(o.out, json::write_poset(generate_poset(c), json::meta_of(c)), out);
  }
  return kExitOk;
}

struct FFOptions {
  std::string poset, order, out;
  std::optional<std::size_t> expect;
  bool validate = false;
};

int cmd_ff(const FFOptions& o, std::ostream& out, std::ostream& err) {
  const Poset p = load_poset(o.poset);
  const PresentationOrder order =
      o.order.empty() ? PresentationOrder::identity(p.size()) : json::read_order(json::read_file(o.order));
  const auto r = first_fit_chains(p, order);
  out << "chains " << r.chains_used() << "\n";
  emit(o.out, json::write_ff_result(r), out);
  int code = kExitOk;
  if (o.validate) {
    const bool ok = validate_ff_partition(p, r.partition);
    out << "validate " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) code = kExitViolation;
  }
  if (o.expect && *o.expect != r.chains_used()) {
    err << "expected " << *o.expect << " chains, First-Fit used " << r.chains_used() << "\n";
    code = kExitViolation;
  }
  return code;
}

struct ExtendOptions {
  std::string poset, out_order, out_intervals, out_pd, out_trace, witness_out;
  std::size_t k = 2;
};

int report_witness(const KkWitness& w, const std::string& witness_out, std::ostream& out,
                   std::ostream& err) {
  const std::string text = json::write_witness(w);
  err << "found a " << w.a.size() << "+" << w.b.size() << " witness\n";
  out << text;
  if (!witness_out.empty()) json::write_file(witness_out, text);
  return kExitViolation;
}

int cmd_extend(const ExtendOptions& o, std::ostream& out, std::ostream& err) {
  const Poset p = load_poset(o.poset);
  auto result = interval_order_of(p, o.k);
  if (auto* w = std::get_if<KkWitness>(&result)) return report_witness(*w, o.witness_out, out, err);
  const auto& ext = std::get<IntervalExtension>(result);

  PathDecomposition pd;
  for (std::size_t t = 0; t < ext.blocks.length(); ++t) {
    auto bag = ext.blocks.block_elements(t);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  const std::size_t w = width(p);
  const std::size_t wq = width(ext.order);
  const std::size_t bound = (2 * o.k - 3) * w;
  const bool pd_ok = validate_path_decomposition(incomparability_graph(p), pd);
  const bool ok = is_extension(p, ext.order) && wq <= bound && wq == ext.blocks.max_block_size() &&
                  pd_ok && pd.width() <= static_cast<long long>(bound) - 1;
  out << "width_p " << w << "\n"
      << "width_q " << wq << "\n"
      << "bound " << bound << "\n"
      << "blocks " << ext.blocks.length() << "\n"
      << "pd_width " << pd.width() << "\n"
      << "certificate " << (ok ? "ok" : "FAILED") << "\n";

  emit(o.out_order, json::write_poset(ext.order), out);
  emit(o.out_intervals, json::write_intervals(ext.representation), out);
  emit(o.out_pd, json::write_path_decomposition(pd), out);
  emit(o.out_trace, json::write_block_trace(ext.blocks), out);
  if (!ok) err << "extension certificate failed\n";
  return ok ? kExitOk : kExitViolation;
}

struct ImageOptions {
  std::string poset, graph, pd, order, out, out_graph;
  std::size_t k = 0;
  bool grundy = false;
};

int cmd_image(const ImageOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<Poset> p;
  Graph g;
  if (!o.poset.empty()) {
    p = load_poset(o.poset);
    g = incomparability_graph(*p);
  } else {
    g = json::read_graph(json::read_file(o.graph));
  }

  PathDecomposition pd;
  if (!o.pd.empty()) {
    pd = json::read_path_decomposition(json::read_file(o.pd));
  } else if (p && o.k >= 2) {
    auto r = path_decomposition_of(*p, o.k);
    if (auto* w = std::get_if<KkWitness>(&r)) return report_witness(*w, "", out, err);
    pd = std::get<PathDecomposition>(r);
  } else {
    pd = optimal_path_decomposition(g);
  }

  FFColoring coloring;
  if (o.grundy) {
    coloring = grundy_coloring(g);
  } else {
    const PresentationOrder order =
        o.order.empty() ? PresentationOrder::identity(g.size()) : json::read_order(json::read_file(o.order));
    coloring = first_fit_color(g, order);
  }

  const auto ic = interval_completion(g, pd);
  const auto [img, f] = build_ff_image(g, ic, coloring);
  const std::size_t omega_h = interval_clique_number(img.intervals);
  const bool ok = validate_homomorphism(g, img.h, f) && validate_ff_coloring(img.h, img.classes) &&
                  img.classes.size() == coloring.size() &&
                  static_cast<long long>(omega_h) <= pd.width() + 1;
  out << "colors " << coloring.size() << "\n"
      << "pd_width " << pd.width() << "\n"
      << "h_vertices " << img.h.size() << "\n"
      << "omega_h " << omega_h << "\n"
      << "certificate " << (ok ? "ok" : "FAILED") << "\n";
  emit(o.out, json::write_homomorphism(f), out);
  emit(o.out_graph, json::write_graph(img.h), out);
  return ok ? kExitOk : kExitViolation;
}

struct VerifyOptions {
  std::string poset, witness, ff, pd;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Poset p = load_poset(o.poset);
  bool ok = true;
  if (!o.witness.empty()) {
    const auto w = json::read_witness(json::read_file(o.witness));
    const bool good = is_kk_witness(p, w, w.a.size());
    out << "witness " << (good ? "ok" : "FAILED") << "\n";
    ok = ok && good;
  }
  if (!o.ff.empty()) {
    bool good = false;
    try {
      good = validate_ff_partition(p, json::read_ff_chains(json::read_file(o.ff)));
    } catch (const CoverageError&) {
      good = false;
    }
    out << "ff_partition " << (good ? "ok" : "FAILED") << "\n";
    ok = ok && good;
  }
  if (!o.pd.empty()) {
    const bool good = validate_path_decomposition(incomparability_graph(p),
                                                  json::read_path_decomposition(json::read_file(o.pd)));
    out << "path_decomposition " << (good ? "ok" : "FAILED") << "\n";
    ok = ok && good;
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_bench(BenchConfig cfg, const std::string& csv, std::ostream& out, std::ostream& err) {
  cfg.budget = kk_budget_from_env();
  const auto result = run_bench(cfg);
  emit(csv, report_csv(result.rows), out);
  std::size_t worst = 0;
  for (const auto& r : result.rows) worst = std::max(worst, r.ff_chains);
  out << "instances " << result.rows.size() << "\n"
      << "max_ff_chains " << worst << "\n"
      << "bound " << first_fit_bound(cfg.k, cfg.w) << "\n"
      << "violations " << result.violations << "\n";
  if (result.violations != 0) {
    err << result.violations << " instance(s) exceeded the bound or failed certification\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-Fit chain partitioning of posets: generators, certificates, benchmarks", "posetff"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate posets and graphs as JSON");
  gen_cmd->require_subcommand(1);
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", gen.out, "Output file ('-' for stdout)");
  };
  auto* g_kier = gen_cmd->add_subcommand("kierstead", "Kierstead's width-2 poset P_q");
  g_kier->add_option("--q", gen.q, "Number of rows")->required()->check(CLI::PositiveNumber);
  add_out(g_kier);
  g_kier->add_option("--order-out", gen.order_out, "Natural presentation order file");
  auto* g_stack = gen_cmd->add_subcommand("stacked", "Stacked lower-bound poset Q_{k,w}");
  g_stack->add_option("--k", gen.k, "Forbidden k+k size")->required()->check(CLI::Range(2, 1000));
  g_stack->add_option("--w", gen.w, "Width")->required()->check(CLI::Range(2, 1000));
  add_out(g_stack);
  g_stack->add_option("--order-out", gen.order_out, "Forcing presentation order file");
  auto* g_int = gen_cmd->add_subcommand("interval", "Random interval order");
  g_int->add_option("--n", gen.n, "Elements")->required();
  g_int->add_option("--seed", gen.seed, "Seed")->required();
  g_int->add_option("--range", gen.range, "Coordinate range (default 2n)");
  add_out(g_int);
  auto* g_kk = gen_cmd->add_subcommand("kkfree", "Rejection-sampled k+k-free poset");
  g_kk->add_option("--n", gen.n, "Elements")->required();
  g_kk->add_option("--k", gen.k, "Forbidden k+k size")->required()->check(CLI::Range(2, 1000));
  g_kk->add_option("--seed", gen.seed, "Seed")->required();
  g_kk->add_option("--width", gen.width, "Exact width to sample (0 = any)");
  g_kk->add_option("--density", gen.density, "Edge density")->check(CLI::Range(0.0, 1.0));
  add_out(g_kk);
  auto* g_graph = gen_cmd->add_subcommand("graph", "Random graph");
  g_graph->add_option("--n", gen.n, "Vertices")->required();
  g_graph->add_option("--seed", gen.seed, "Seed")->required();
  g_graph->add_option("--density", gen.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  add_out(g_graph);

  FFOptions ff;
  auto* ff_cmd = app.add_subcommand("ff", "Run First-Fit on a poset");
  ff_cmd->add_option("--poset", ff.poset, "Poset JSON")->required();
  ff_cmd->add_option("--order", ff.order, "Order JSON (default: identity)");
  ff_cmd->add_option("--expect", ff.expect, "Expected number of chains");
  ff_cmd->add_flag("--validate", ff.validate, "Check the First-Fit partition property");
  ff_cmd->add_option("--out", ff.out, "Write the FF result JSON here ('-' for stdout)");

  ExtendOptions ext;
  auto* ext_cmd = app.add_subcommand("extend", "Build the interval order and path decomposition from blocks");
  ext_cmd->add_option("--poset", ext.poset, "Poset JSON")->required();
  ext_cmd->add_option("--k", ext.k, "Forbidden k+k size")->required()->check(CLI::Range(2, 1000));
  ext_cmd->add_option("--out-order", ext.out_order, "Interval order Q as poset JSON");
  ext_cmd->add_option("--out-intervals", ext.out_intervals, "Block intervals JSON");
  ext_cmd->add_option("--out-pd", ext.out_pd, "Path decomposition JSON");
  ext_cmd->add_option("--out-trace", ext.out_trace, "Block move trace JSON");
  ext_cmd->add_option("--witness-out", ext.witness_out, "Where to write a k+k witness");

  ImageOptions img;
  auto* img_cmd = app.add_subcommand("image", "Map an FF colouring onto an interval graph");
  auto* img_poset = img_cmd->add_option("--poset", img.poset, "Poset JSON (uses its incomparability graph)");
  auto* img_graph = img_cmd->add_option("--graph", img.graph, "Graph JSON");
  img_poset->excludes(img_graph);
  img_cmd->add_option("--pd", img.pd, "Path decomposition JSON (default: blocks with --k, else exact)");
  img_cmd->add_option("--k", img.k, "k for the block decomposition of --poset");
  auto* img_order = img_cmd->add_option("--order", img.order, "Order JSON for the FF colouring");
  img_cmd->add_flag("--grundy", img.grundy, "Use an FF colouring with the most colours")->excludes(img_order);
  img_cmd->add_option("--out", img.out, "Homomorphism JSON ('-' for stdout)");
  img_cmd->add_option("--out-graph", img.out_graph, "Image graph H as graph JSON");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check certificates against a poset");
  ver_cmd->add_option("--poset", ver.poset, "Poset JSON")->required();
  ver_cmd->add_option("--witness", ver.witness, "k+k witness JSON");
  ver_cmd->add_option("--ff", ver.ff, "FF result JSON");
  ver_cmd->add_option("--pd", ver.pd, "Path decomposition JSON of the incomparability graph");

  BenchConfig bench;
  std::string csv = "-";
  auto* bench_cmd = app.add_subcommand("bench", "Sweep First-Fit on k+k-free posets against 8(2k-3)w");
  bench_cmd->add_option("--k", bench.k, "Forbidden k+k size")->required()->check(CLI::Range(2, 1000));
  bench_cmd->add_option("--w", bench.w, "Width")->required()->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--trials", bench.trials, "Instances");
  bench_cmd->add_option("--orders", bench.orders, "Random presentation orders per instance");
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--n", bench.n, "Elements per instance (default 4w)");
  bench_cmd->add_option("--density", bench.density, "Cross-pair density for k >= 3")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--csv", csv, "CSV output ('-' for stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g_kier->parsed()) return cmd_gen_kierstead(gen, out);
    if (g_stack->parsed()) return cmd_gen_stacked(gen, out);
    if (g_int->parsed()) return cmd_gen_config(gen, GenKind::IntervalOrder, out);
    if (g_kk->parsed()) return cmd_gen_config(gen, GenKind::KkFreeRejection, out);
    if (g_graph->parsed()) return cmd_gen_config(gen, GenKind::RandomGraph, out);
    if (ff_cmd->parsed()) return cmd_ff(ff, out, err);
    if (ext_cmd->parsed()) return cmd_extend(ext, out, err);
    if (img_cmd->parsed()) {
      if (img.poset.empty() && img.graph.empty()) {
        err << "image: one of --poset or --graph is required\n";
        return kExitUsage;
      }
      return cmd_image(img, out, err);
    }
    if (ver_cmd->parsed()) return cmd_verify(ver, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, csv, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace posetff::cli
