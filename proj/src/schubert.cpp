#include "parahess/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "parahess/hessvar.hpp"

namespace parahess {

SchubertPoint schubert_point(const Permutation& w, const Partition& lambda) {
  Tableau T = springer_tableau(w, lambda);
  if (!T.is_row_strict())
    throw std::domain_error("permutation " + w.to_string() + " is not in the Springer fiber of type " +
                            lambda.to_string() + " (tableau " + T.to_string() + " is not row-strict)");
  auto lengths = row_inversion_profile(T);
  Permutation point = StringDecomposition::from_lengths(lengths).product();
  return {w, std::move(T), std::move(point), std::move(lengths)};
}

std::vector<Permutation> bruhat_maximal(const std::vector<Permutation>& elements) {
  std::vector<Permutation> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Longest first: anything strictly above an element is strictly longer.
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
  std::vector<Permutation> maximal;
  for (const auto& e : sorted) {
    const bool dominated =
        std::any_of(maximal.begin(), maximal.end(), [&](const Permutation& m) { return bruhat_leq(e, m); });
    if (!dominated) maximal.push_back(e);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<Permutation> bruhat_lower_ideal(const std::vector<Permutation>& tops, int n) {
  for (const auto& t : tops)
    if (t.degree() != n)
      throw std::invalid_argument("bruhat_lower_ideal: top " + t.to_string() + " does not have degree " +
                                  std::to_string(n));
  std::vector<Permutation> out;
  if (tops.empty()) return out;
  const auto maximal = bruhat_maximal(tops);
  for_each_permutation(n, [&](const Permutation& u) {
    if (std::any_of(maximal.begin(), maximal.end(), [&](const Permutation& m) { return bruhat_leq(u, m); }))
      out.push_back(u);
  });
  return out;
}

Polynomial poincare_schubert_union(const std::vector<Permutation>& tops, int n) {
  Polynomial p;
  for (const auto& u : bruhat_lower_ideal(tops, n)) p.add_term(u.length());
  return p;
}

std::vector<Permutation> schubert_union_for(const Partition& lambda, const ParabolicData& P) {
  const Permutation w_J = longest_element(P);
  std::vector<Permutation> tops;
  for (const auto& v : W_X_J(lambda, P)) tops.push_back(schubert_point(v, lambda).point * w_J);
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  return tops;
}

MainTheoremReport verify_main_theorem(const Partition& lambda, const ParabolicData& P) {
  MainTheoremReport report{lambda, P, {}, {}, false, lambda.in_main_theorem_hypothesis(), {}};
  report.hessenberg_poly = poincare_hessenberg(lambda, h_from_J(P));
  report.tops = schubert_union_for(lambda, P);
  report.schubert_union_poly = poincare_schubert_union(report.tops, lambda.size());
  report.equal = report.hessenberg_poly == report.schubert_union_poly;
  return report;
}

bool schubert_point_coset_check(const Partition& lambda, const ParabolicData& P) {
  if (P.degree() != lambda.size()) throw std::invalid_argument("schubert_point_coset_check: degree mismatch");
  bool ok = true;
  for_each_permutation(lambda.size(), [&](const Permutation& w) {
    if (!ok || !springer_contains(w, lambda)) return;
    const auto sp = schubert_point(w, lambda);
    if (is_min_coset_rep(w, P) != is_min_coset_rep(sp.point, P)) ok = false;
  });
  return ok;
}

} // namespace parahess
