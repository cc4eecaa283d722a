#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "posetff/poset.hpp"

namespace posetff::cli {

/// One benchmarked instance: the most chains First-Fit used over all sampled
/// presentation orders, next to the 8(2k-3)w bound.
struct RunReport {
  std::string kind;    // "interval" (k = 2) or "kkfree"
  std::string params;  // "w=..;n=..;density=..;seed=.." (seed replays the instance)
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t k = 0;
  std::size_t ff_chains = 0;
  std::size_t bound = 0;
  long long pd_width = 0;
  double seconds = 0.0;
  std::uint64_t seed = 0;
  bool certified = true;  // FF partitions validated and path decomposition checked
};

struct BenchConfig {
  std::size_t k = 2;
  std::size_t w = 2;
  std::size_t trials = 20;
  std::size_t orders = 50;
  std::uint64_t seed = 1;
  std::size_t n = 0;  // 0 picks 4w
  double density = 0.5;
  std::uint64_t budget = kDefaultKkBudget;
};

struct BenchResult {
  std::vector<RunReport> rows;  // sorted by instance seed
  /// Rows with ff_chains > bound, or failed certificates.
  std::size_t violations = 0;
};

/// 8(2k-3)w.
std::size_t first_fit_bound(std::size_t k, std::size_t width);

/// Generates `trials` k+k-free posets of width w (interval orders when k = 2)
/// and runs First-Fit on each under `orders` random presentation orders.
BenchResult run_bench(const BenchConfig& config);

inline constexpr const char* kCsvHeader = "kind,params,n,width,k,ff_chains,bound,pd_width,seconds";

std::string report_csv(const std::vector<RunReport>& rows);

}  // namespace posetff::cli
