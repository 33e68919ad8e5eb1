#include "parahess/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "parahess/hessvar.hpp"
#include "parahess/rootsys.hpp"
#include "parahess/schubert.hpp"

namespace parahess {

namespace {

struct Case {
  Partition lambda;
  ParabolicData parabolic;
};

struct CaseResult {
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;
  std::vector<CheckFailure> out_of_hypothesis;

  void fail(const Case& c, std::optional<Permutation> witness, std::string detail) {
    failures.push_back({c.lambda, c.parabolic, std::move(witness), std::move(detail)});
  }
  void note(const Case& c, std::optional<Permutation> witness, std::string detail) {
    out_of_hypothesis.push_back({c.lambda, c.parabolic, std::move(witness), std::move(detail)});
  }
  /// Failure when λ satisfies the three-row/two-column hypothesis, note otherwise.
  void hypothesis_fail(const Case& c, std::optional<Permutation> witness, std::string detail) {
    if (c.lambda.in_main_theorem_hypothesis()) fail(c, std::move(witness), std::move(detail));
    else note(c, std::move(witness), std::move(detail));
  }
};

enum class Scope { per_lambda, per_J, per_pair };

struct CheckDef {
  std::string id;
  Scope scope;
  std::function<void(const Case&, CaseResult&)> run;
};

// ---------------------------------------------------------------------------
// Individual checks. Each one exercises one statement over a single (λ, J).

void check_fixed_points(const Case& c, CaseResult& r) {
  const HessenbergVariety hv(c.lambda, h_from_J(c.parabolic));
  for_each_permutation(c.lambda.size(), [&](const Permutation& w) {
    ++r.cases;
    const auto v = coset_factor(w, c.parabolic).first;
    if (hv.contains(w) != springer_contains(v, c.lambda))
      r.fail(c, w, "Hessenberg membership of w differs from Springer membership of its W^J part " + v.to_string());
  });
}

void check_springer_membership(const Case& c, CaseResult& r) {
  for_each_permutation(c.lambda.size(), [&](const Permutation& w) {
    ++r.cases;
    if (springer_contains(w, c.lambda) != springer_contains_roots(w, c.lambda))
      r.fail(c, w, "row-strict tableau test disagrees with root positivity test");
  });
}

void check_parabolic_dimension(const Case& c, CaseResult& r) {
  const HessenbergVariety hv(c.lambda, h_from_J(c.parabolic));
  for_each_permutation(c.lambda.size(), [&](const Permutation& w) {
    if (!hv.contains(w)) return;
    ++r.cases;
    const int direct = hv.cell_dim(w);
    const int split = parabolic_cell_dim(w, c.lambda, c.parabolic);
    if (direct != split)
      r.fail(c, w, "cell dimension " + std::to_string(direct) + " but Springer dimension plus l(y) gives " +
                       std::to_string(split));
  });
}

void check_poincare_corollary(const Case& c, CaseResult& r) {
  ++r.cases;
  const auto direct = poincare_hessenberg(c.lambda, h_from_J(c.parabolic));
  const auto formula = poincare_parabolic_formula(c.lambda, c.parabolic);
  if (direct != formula)
    r.fail(c, std::nullopt, "cell sum " + direct.to_string() + " differs from coset formula " + formula.to_string());
}

void check_strings_coset(const Case& c, CaseResult& r) {
  for_each_permutation(c.parabolic.degree(), [&](const Permutation& w) {
    ++r.cases;
    if (is_min_coset_rep(w, c.parabolic) != is_min_coset_rep_strings(w, c.parabolic))
      r.fail(c, w, "descent test and string-length test for W^J disagree");
  });
}

void check_schubert_coset(const Case& c, CaseResult& r) {
  for_each_permutation(c.lambda.size(), [&](const Permutation& w) {
    if (!springer_contains(w, c.lambda)) return;
    ++r.cases;
    const auto sp = schubert_point(w, c.lambda);
    if (is_min_coset_rep(w, c.parabolic) != is_min_coset_rep(sp.point, c.parabolic))
      r.fail(c, w, "W^J membership not preserved by the Schubert point " + sp.point.to_string());
  });
}

bool is_lower_ideal_within(const std::vector<Permutation>& members, int n, const ParabolicData* restrict_to,
                           std::optional<Permutation>& witness) {
  const std::set<Permutation> set(members.begin(), members.end());
  for (const auto& u : bruhat_lower_ideal(members, n)) {
    if (restrict_to && !is_min_coset_rep(u, *restrict_to)) continue;
    if (!set.contains(u)) {
      witness = u;
      return false;
    }
  }
  return true;
}

void check_schubert_ideal(const Case& c, CaseResult& r) {
  const int n = c.lambda.size();
  if (c.parabolic.mask() == 0) {
    // Statements about the whole Springer fiber, checked once per λ.
    std::vector<Permutation> points;
    std::map<Permutation, Permutation> preimage;
    bool injective = true;
    for_each_permutation(n, [&](const Permutation& w) {
      if (!springer_contains(w, c.lambda)) return;
      ++r.cases;
      const auto sp = schubert_point(w, c.lambda);
      const int dim = springer_cell_dim(w, c.lambda);
      if (sp.point.length() != dim)
        r.fail(c, w, "Schubert point length " + std::to_string(sp.point.length()) + " differs from cell dimension " +
                         std::to_string(dim));
      auto [it, inserted] = preimage.emplace(sp.point, w);
      if (!inserted && injective) {
        injective = false;
        r.hypothesis_fail(c, w, "Schubert point " + sp.point.to_string() + " shared with " + it->second.to_string());
      }
      points.push_back(sp.point);
    });
    std::optional<Permutation> witness;
    if (!is_lower_ideal_within(points, n, nullptr, witness))
      r.hypothesis_fail(c, witness, "Schubert points of the Springer fiber are not a Bruhat lower ideal");
  }

  const Permutation w_J = longest_element(c.parabolic);
  std::vector<Permutation> points;
  for (const auto& v : W_X_J(c.lambda, c.parabolic)) {
    ++r.cases;
    const auto point = schubert_point(v, c.lambda).point;
    if ((point * w_J).length() != point.length() + w_J.length())
      r.fail(c, v, "v_T w_J is not reduced for v_T = " + point.to_string());
    points.push_back(point);
  }
  std::optional<Permutation> witness;
  if (!is_lower_ideal_within(points, n, &c.parabolic, witness))
    r.hypothesis_fail(c, witness, "{v_T : v in W(X,J)} is not a lower ideal within W^J");
}

void check_main_theorem(const Case& c, CaseResult& r) {
  ++r.cases;
  const auto report = verify_main_theorem(c.lambda, c.parabolic);
  if (!report.equal)
    r.hypothesis_fail(c, std::nullopt,
                      "Hessenberg " + report.hessenberg_poly.to_string() + " vs Schubert union " +
                          report.schubert_union_poly.to_string());
}

void check_phi_V_equivalence(const Case& c, CaseResult& r) {
  ++r.cases;
  const int n = c.lambda.size();
  const RootSet phi_X = highest_form_rootset(c.lambda);
  const RootSet by_filling = phi_V_filling(c.lambda);
  const RootSet by_closure = phi_V_closure(phi_X, n);
  if (by_filling != by_closure)
    r.fail(c, std::nullopt, "filling description " + by_filling.to_string() + " vs closure " + by_closure.to_string());
  if (!(phi_X & by_filling).empty()) r.fail(c, std::nullopt, "Phi_X meets Phi(V)");
  if (!is_highest_form(phi_X)) r.fail(c, std::nullopt, "base-filling representative is not in highest form");
}

void check_dim_formulas(const Case& c, CaseResult& r) {
  const HessenbergVariety springer(c.lambda, HessenbergFunction::identity(c.lambda.size()));
  for_each_permutation(c.lambda.size(), [&](const Permutation& w) {
    if (!springer.contains(w)) return;
    ++r.cases;
    const int rows = springer_cell_dim_rows(w, c.lambda);
    const int roots = springer_cell_dim_roots(w, c.lambda);
    const int general = springer.cell_dim(w);
    if (rows != roots || rows != general)
      r.fail(c, w, "row inversions " + std::to_string(rows) + ", root count " + std::to_string(roots) +
                       ", general formula " + std::to_string(general));
  });
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"fixed-points", Scope::per_pair, check_fixed_points},
      {"parabolic-dimension", Scope::per_pair, check_parabolic_dimension},
      {"poincare-corollary", Scope::per_pair, check_poincare_corollary},
      {"strings-coset", Scope::per_J, check_strings_coset},
      {"schubert-coset", Scope::per_pair, check_schubert_coset},
      {"schubert-ideal", Scope::per_pair, check_schubert_ideal},
      {"main-theorem", Scope::per_pair, check_main_theorem},
      {"phi-V-equivalence", Scope::per_lambda, check_phi_V_equivalence},
      {"dim-formulas-agree", Scope::per_lambda, check_dim_formulas},
      {"springer-membership", Scope::per_lambda, check_springer_membership},
  };
  return defs;
}

std::vector<Case> cases_for(Scope scope, int n) {
  std::vector<Case> out;
  const unsigned subsets = 1U << (n - 1);
  switch (scope) {
  case Scope::per_lambda:
    for (const auto& lambda : partitions_of(n)) out.push_back({lambda, ParabolicData(n, {})});
    break;
  case Scope::per_J:
    for (unsigned mask = 0; mask < subsets; ++mask) out.push_back({Partition({n}), ParabolicData::from_mask(n, mask)});
    break;
  case Scope::per_pair:
    for (const auto& lambda : partitions_of(n))
      for (unsigned mask = 0; mask < subsets; ++mask) out.push_back({lambda, ParabolicData::from_mask(n, mask)});
    break;
  }
  return out;
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  return threads;
}

/// Runs task(k) for k in [0, count) on a pool; results are indexed by k so
/// the merged output does not depend on scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, const std::function<Result(std::size_t)>& task) {
  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k].emplace(task(k));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned pool = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<Result> results;
  results.reserve(count);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

void require_degree_in_range(int n, const char* what) {
  if (n < 1 || n > kMaxHarnessDegree)
    throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxHarnessDegree));
}

} // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& def : registry()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

std::vector<CheckReport> run_checks(int n_max, const std::vector<std::string>& checks, unsigned threads) {
  require_degree_in_range(n_max, "run_checks");
  for (const auto& id : checks)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw std::invalid_argument("run_checks: unknown check id '" + id + "'");

  std::vector<CheckReport> reports;
  for (const auto& def : registry()) {
    if (!checks.empty() && std::find(checks.begin(), checks.end(), def.id) == checks.end()) continue;
    for (int n = 1; n <= n_max; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const auto cases = cases_for(def.scope, n);
      const auto results = parallel_map<CaseResult>(cases.size(), threads, [&](std::size_t k) {
        CaseResult r;
        def.run(cases[k], r);
        return r;
      });
      CheckReport report;
      report.check_id = def.id;
      report.n = n;
      for (const auto& r : results) {
        report.cases_run += r.cases;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        report.out_of_hypothesis.insert(report.out_of_hypothesis.end(), r.out_of_hypothesis.begin(),
                                        r.out_of_hypothesis.end());
      }
      report.elapsed = std::chrono::steady_clock::now() - start;
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

Census census(int n, CensusGranularity granularity, unsigned threads) {
  require_degree_in_range(n, "census");
  Census out;
  out.n = n;
  out.granularity = granularity;
  const auto cases = cases_for(Scope::per_pair, n);

  if (granularity == CensusGranularity::summaries) {
    out.summaries = parallel_map<CensusSummaryRow>(cases.size(), threads, [&](std::size_t k) {
      const auto report = verify_main_theorem(cases[k].lambda, cases[k].parabolic);
      return CensusSummaryRow{report.lambda,          report.parabolic, report.hessenberg_poly,
                              report.schubert_union_poly, report.equal,     report.in_hypothesis};
    });
    return out;
  }

  const auto per_case = parallel_map<std::vector<CensusCellRow>>(cases.size(), threads, [&](std::size_t k) {
    const auto& c = cases[k];
    std::vector<CensusCellRow> rows;
    std::map<Permutation, Permutation> points;
    for (const auto& cell : HessenbergVariety(c.lambda, h_from_J(c.parabolic)).cells()) {
      auto it = points.find(cell.v);
      if (it == points.end()) it = points.emplace(cell.v, schubert_point(cell.v, c.lambda).point).first;
      rows.push_back({c.lambda, c.parabolic, cell.w, cell.v, cell.y, cell.dim, springer_contains(cell.w, c.lambda),
                      it->second});
    }
    return rows;
  });
  for (const auto& rows : per_case) out.cells.insert(out.cells.end(), rows.begin(), rows.end());
  return out;
}

} // namespace parahess
