#pragma once

#include <string>
#include <vector>

#include "parahess/nilpotent.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/rootsys.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

/// h : {1..n} -> {1..n} with h(i) >= i and h nondecreasing.
class HessenbergFunction {
public:
  HessenbergFunction() = default;
  /// Throws std::invalid_argument if the values are not a Hessenberg function.
  explicit HessenbergFunction(std::vector<int> values);

  static HessenbergFunction identity(int n);

  int degree() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  /// "2,2,4,4"
  std::string to_string() const;

  bool operator==(const HessenbergFunction&) const = default;

private:
  std::vector<int> values_;
};

/// h(i) = last position of the block containing i.
HessenbergFunction h_from_J(const ParabolicData& P);
/// image(h) = {i : h(i) = i}.
bool is_parabolic_function(const HessenbergFunction& h);
/// Inverse of h_from_J. Throws std::domain_error naming the failed
/// is_parabolic_function predicate.
ParabolicData parabolic_from_h(const HessenbergFunction& h);

struct HessCell {
  Permutation w;
  int dim = 0;
  Permutation v; ///< W^J part, for the parabolic case; equals w otherwise.
  Permutation y; ///< W_J part; identity otherwise.
};

/// The nilpotent Hessenberg variety B(X, H) for X of Jordan type λ in
/// highest form and H given by h. Caches Φ_X, Φ(𝒱) and Φ_H^- so cell
/// queries over all of S_n stay cheap.
class HessenbergVariety {
public:
  HessenbergVariety(Partition lambda, HessenbergFunction h);

  const Partition& partition() const { return lambda_; }
  const HessenbergFunction& hessenberg() const { return h_; }
  int degree() const { return lambda_.size(); }

  /// C_w ∩ B(X,H) nonempty: w^{-1}(γ) in Φ_H for all γ in Φ_X.
  bool contains(const Permutation& w) const;
  /// |N(w^{-1}) ∩ Φ(𝒱)^c| + |N(w^{-1}) ∩ Φ(𝒱) ∩ w(Φ_H^-)|.
  /// Throws std::domain_error for an empty cell.
  int cell_dim(const Permutation& w) const;

  /// Nonempty cells in lexicographic order of w.
  std::vector<HessCell> cells() const;
  Polynomial poincare() const;

private:
  Partition lambda_;
  HessenbergFunction h_;
  std::vector<Root> phi_X_;
  RootSet phi_V_;
  RootSet phi_V_complement_;
  std::vector<Root> phi_H_negative_;
  RootSet phi_H_;
};

bool hess_contains(const Permutation& w, const Partition& lambda, const HessenbergFunction& h);
int cell_dim(const Permutation& w, const Partition& lambda, const HessenbergFunction& h);

/// springer_cell_dim(v) + ℓ(y) for (v, y) = coset_factor(w, P).
/// Throws std::domain_error if the cell is empty.
int parabolic_cell_dim(const Permutation& w, const Partition& lambda, const ParabolicData& P);

/// W(X,J) = {v in W^J : v in the Springer fiber}, lexicographic order.
std::vector<Permutation> W_X_J(const Partition& lambda, const ParabolicData& P);

Polynomial poincare_hessenberg(const Partition& lambda, const HessenbergFunction& h);
/// Σ_{v in W(X,J)} t^{dim(C_v ∩ B^X)} · P(B_J, t).
Polynomial poincare_parabolic_formula(const Partition& lambda, const ParabolicData& P);

/// Springer fiber cells (h = identity).
std::vector<HessCell> springer_cells(const Partition& lambda);

} // namespace parahess
