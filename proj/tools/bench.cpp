#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <variant>

#include "posetff/first_fit.hpp"
#include "posetff/generators.hpp"
#include "posetff/interval_extension.hpp"

namespace posetff::cli {

std::size_t first_fit_bound(std::size_t k, std::size_t width) { return 8 * (2 * k - 3) * width; }

namespace {

RunReport run_instance(const BenchConfig& cfg, std::size_t n, std::uint64_t inst_seed) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  RunReport row;
  row.k = cfg.k;
  row.n = n;
  row.seed = inst_seed;
  Poset p;
  std::ostringstream params;
  params << "w=" << cfg.w << ";n=" << n;
  if (cfg.k == 2) {
    row.kind = "interval";
    p = gen_interval_order_of_width(inst_seed, n, cfg.w);
  } else {
    row.kind = "kkfree";
    KkFreeOptions opts;
    opts.target_width = cfg.w;
    opts.density = cfg.density;
    opts.budget = cfg.budget;
    p = gen_kk_free(inst_seed, n, cfg.k, opts).poset;
    params << ";density=" << cfg.density;
  }
  params << ";seed=" << inst_seed;
  row.params = params.str();
  row.width = width(p);
  row.bound = first_fit_bound(cfg.k, row.width);

  std::vector<Id> ids(n);
  std::iota(ids.begin(), ids.end(), Id{0});
  for (std::size_t r = 0; r < cfg.orders; ++r) {
    Rng rng(derive_seed(inst_seed, r + 1));
    rng.shuffle(ids);
    const auto ff = first_fit_chains(p, PresentationOrder(ids));
    row.ff_chains = std::max(row.ff_chains, ff.chains_used());
    if (!validate_ff_partition(p, ff.partition)) row.certified = false;
  }

  auto pd = path_decomposition_of(p, cfg.k);
  if (const auto* d = std::get_if<PathDecomposition>(&pd)) {
    row.pd_width = d->width();
    if (!validate_path_decomposition(incomparability_graph(p), *d) ||
        d->width() + 1 > static_cast<long long>((2 * cfg.k - 3) * row.width)) {
      row.certified = false;
    }
  } else {
    row.certified = false;  // a k+k-free instance produced a witness
  }
  row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return row;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.k < 2) throw ParamError("bench needs k >= 2");
  if (cfg.w < 1) throw ParamError("bench needs w >= 1");
  const std::size_t n = cfg.n == 0 ? 4 * cfg.w : cfg.n;
  if (n < cfg.w) throw ParamError("bench needs n >= w");

  BenchResult result;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    result.rows.push_back(run_instance(cfg, n, derive_seed(cfg.seed, t)));
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const RunReport& a, const RunReport& b) { return a.seed < b.seed; });
  for (const auto& row : result.rows) {
    if (row.ff_chains > row.bound || !row.certified) ++result.violations;
  }
  return result;
}

std::string report_csv(const std::vector<RunReport>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", r.seconds);
    std::ostringstream line;
    line << r.kind << ',' << r.params << ',' << r.n << ',' << r.width << ',' << r.k << ','
         << r.ff_chains << ',' << r.bound << ',' << r.pd_width << ',' << secs << '\n';
    out += line.str();
  }
  return out;
}

}  // namespace posetff::cli
