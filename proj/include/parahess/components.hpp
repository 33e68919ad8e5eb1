#pragma once

#include <vector>

#include "parahess/nilpotent.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

/// Evidence for one v in W(X,J) indexing an irreducible component of the
/// parabolic Hessenberg variety. `heuristic_maximal` records whether v_T w_J
/// is Bruhat-maximal among all v_T w_J; it is a conjectural criterion only.
struct ComponentCandidate {
  Permutation v;
  Permutation top_cell;     ///< v * w_J
  Permutation schubert_top; ///< v_T * w_J
  int cell_dim = 0;         ///< dim(C_{v w_J} ∩ B(X, p_J))
  bool full_cell = false;   ///< cell_dim == ℓ(v w_J)
  bool heuristic_maximal = false;
};

/// One candidate per v in W(X,J), sorted by cell_dim descending then v.
std::vector<ComponentCandidate> component_candidates(const Partition& lambda, const ParabolicData& P);

} // namespace parahess
