#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "parahess/nilpotent.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

/// Largest degree the exhaustive driver accepts.
inline constexpr int kMaxHarnessDegree = 8;

struct CheckFailure {
  Partition lambda;
  ParabolicData parabolic;
  std::optional<Permutation> witness;
  std::string detail;
};

struct CheckReport {
  std::string check_id;
  int n = 0;
  std::size_t cases_run = 0;
  std::vector<CheckFailure> failures;
  /// Outcomes recorded for partitions outside the three-row/two-column
  /// hypothesis; never counted as failures.
  std::vector<CheckFailure> out_of_hypothesis;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Known check ids, in execution order.
const std::vector<std::string>& check_ids();

/// Runs each check over every λ ⊢ n and every J ⊆ {1..n-1} for n = 1..n_max.
/// Returns one report per (check, n), ordered by check then n. An empty
/// `checks` list means all checks. `threads == 0` uses the hardware
/// concurrency. Throws std::invalid_argument for an unknown id or n_max
/// outside 1..kMaxHarnessDegree.
std::vector<CheckReport> run_checks(int n_max, const std::vector<std::string>& checks, unsigned threads = 0);

enum class CensusGranularity { cells, summaries };

struct CensusCellRow {
  Partition lambda;
  ParabolicData parabolic;
  Permutation w;
  Permutation v;
  Permutation y;
  int dim = 0;
  bool springer = false;      ///< w itself lies in the Springer fiber
  Permutation schubert_point; ///< v_T
};

struct CensusSummaryRow {
  Partition lambda;
  ParabolicData parabolic;
  Polynomial hessenberg_poly;
  Polynomial schubert_union_poly;
  bool equal = false;
  bool in_hypothesis = false;
};

struct Census {
  int n = 0;
  CensusGranularity granularity = CensusGranularity::summaries;
  std::vector<CensusCellRow> cells;
  std::vector<CensusSummaryRow> summaries;
};

/// Rows ordered by λ (as in partitions_of), then J by mask, then w.
/// Throws std::invalid_argument for n outside 1..kMaxHarnessDegree.
Census census(int n, CensusGranularity granularity, unsigned threads = 0);

} // namespace parahess
