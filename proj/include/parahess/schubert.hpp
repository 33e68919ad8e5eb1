#pragma once

#include <vector>

#include "parahess/nilpotent.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

/// The Schubert point v_T of a permutation flag in the Springer fiber.
struct SchubertPoint {
  Permutation source;
  Tableau tableau;
  Permutation point;
  /// (ℓ_1, ..., ℓ_{n-1}); ℓ_{q-1} is the length of the (q-1)-th string of point.
  std::vector<int> string_lengths;
};

/// Throws std::domain_error if w is not in the Springer fiber of λ.
SchubertPoint schubert_point(const Permutation& w, const Partition& lambda);

/// {u in S_n : u <= top for some top}, lexicographic order.
std::vector<Permutation> bruhat_lower_ideal(const std::vector<Permutation>& tops, int n);
/// Elements of `elements` not strictly below another element (duplicates collapsed).
std::vector<Permutation> bruhat_maximal(const std::vector<Permutation>& elements);
Polynomial poincare_schubert_union(const std::vector<Permutation>& tops, int n);

/// {v_T * w_J : v in W(X,J)}, deduplicated and sorted.
std::vector<Permutation> schubert_union_for(const Partition& lambda, const ParabolicData& P);

struct MainTheoremReport {
  Partition lambda;
  ParabolicData parabolic;
  Polynomial hessenberg_poly;
  Polynomial schubert_union_poly;
  bool equal = false;
  bool in_hypothesis = false;
  std::vector<Permutation> tops;
};

MainTheoremReport verify_main_theorem(const Partition& lambda, const ParabolicData& P);

/// For every Springer-fiber w: w in W^J iff its Schubert point is in W^J.
bool schubert_point_coset_check(const Partition& lambda, const ParabolicData& P);

} // namespace parahess
