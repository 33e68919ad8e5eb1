#include "parahess/hessvar.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>

namespace parahess {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("HessenbergFunction: degree must be at least 1");
  for (int i = 1; i <= n; ++i) {
    const int v = values_[i - 1];
    if (v < i || v > n)
      throw std::invalid_argument("HessenbergFunction: h(" + std::to_string(i) + ") = " + std::to_string(v) +
                                  " violates i <= h(i) <= n");
    if (i > 1 && v < values_[i - 2])
      throw std::invalid_argument("HessenbergFunction: h is not nondecreasing at " + std::to_string(i));
  }
}

HessenbergFunction HessenbergFunction::identity(int n) {
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return HessenbergFunction(std::move(values));
}

std::string HessenbergFunction::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values_[k]);
  }
  return out;
}

HessenbergFunction h_from_J(const ParabolicData& P) {
  std::vector<int> values(P.degree());
  for (int i = 1; i <= P.degree(); ++i) values[i - 1] = P.blocks()[P.block_index(i)].last;
  return HessenbergFunction(std::move(values));
}

bool is_parabolic_function(const HessenbergFunction& h) {
  const int n = h.degree();
  std::vector<bool> in_image(n + 1, false);
  for (int i = 1; i <= n; ++i) in_image[h(i)] = true;
  for (int i = 1; i <= n; ++i)
    if (in_image[i] != (h(i) == i)) return false;
  return true;
}

ParabolicData parabolic_from_h(const HessenbergFunction& h) {
  if (!is_parabolic_function(h))
    throw std::domain_error("Hessenberg function " + h.to_string() +
                            " fails is_parabolic_function: its image is not its fixed-point set");
  std::vector<int> J;
  for (int i = 1; i < h.degree(); ++i)
    if (h(i) != i) J.push_back(i);
  return ParabolicData(h.degree(), std::move(J));
}

// ---------------------------------------------------------------------------

HessenbergVariety::HessenbergVariety(Partition lambda, HessenbergFunction h)
    : lambda_(std::move(lambda)), h_(std::move(h)) {
  if (lambda_.size() != h_.degree())
    throw std::invalid_argument("HessenbergVariety: |lambda| = " + std::to_string(lambda_.size()) +
                                " but h has degree " + std::to_string(h_.degree()));
  phi_X_ = highest_form_rootset(lambda_).members();
  phi_V_ = phi_V_filling(lambda_);
  phi_V_complement_ = phi_V_.positive_complement();
  phi_H_ = phi_H_from_h(h_);
  phi_H_negative_ = phi_H_.negative_part().members();
}

bool HessenbergVariety::contains(const Permutation& w) const {
  if (w.degree() != degree()) throw std::invalid_argument("HessenbergVariety: permutation degree mismatch");
  const Permutation inv = w.inverse();
  for (const auto& g : phi_X_)
    if (!phi_H_.contains(root_act(inv, g))) return false;
  return true;
}

int HessenbergVariety::cell_dim(const Permutation& w) const {
  if (!contains(w))
    throw std::domain_error("cell C_w is empty for w = " + w.to_string() + ", lambda = " + lambda_.to_string() +
                            ", h = " + h_.to_string());
  const RootSet inversions = inversion_set(w.inverse());
  RootSet moved_negatives(degree());
  for (const auto& r : phi_H_negative_) moved_negatives.insert(root_act(w, r));
  return (inversions & phi_V_complement_).size() + (inversions & phi_V_ & moved_negatives).size();
}

std::vector<HessCell> HessenbergVariety::cells() const {
  const bool parabolic = is_parabolic_function(h_);
  const std::optional<ParabolicData> P =
      parabolic ? std::optional<ParabolicData>(parabolic_from_h(h_)) : std::nullopt;
  std::vector<HessCell> out;
  for_each_permutation(degree(), [&](const Permutation& w) {
    if (!contains(w)) return;
    HessCell cell{w, cell_dim(w), w, Permutation::identity(degree())};
    if (P) std::tie(cell.v, cell.y) = coset_factor(w, *P);
    out.push_back(std::move(cell));
  });
  return out;
}

Polynomial HessenbergVariety::poincare() const {
  Polynomial p;
  for_each_permutation(degree(), [&](const Permutation& w) {
    if (contains(w)) p.add_term(cell_dim(w));
  });
  return p;
}

// ---------------------------------------------------------------------------

bool hess_contains(const Permutation& w, const Partition& lambda, const HessenbergFunction& h) {
  return HessenbergVariety(lambda, h).contains(w);
}

int cell_dim(const Permutation& w, const Partition& lambda, const HessenbergFunction& h) {
  return HessenbergVariety(lambda, h).cell_dim(w);
}

int parabolic_cell_dim(const Permutation& w, const Partition& lambda, const ParabolicData& P) {
  if (w.degree() != lambda.size() || P.degree() != lambda.size())
    throw std::invalid_argument("parabolic_cell_dim: degree mismatch");
  const auto [v, y] = coset_factor(w, P);
  if (!springer_contains(v, lambda))
    throw std::domain_error("cell C_w is empty for w = " + w.to_string() + ": coset representative " + v.to_string() +
                            " is not in the Springer fiber");
  return springer_cell_dim(v, lambda) + y.length();
}

std::vector<Permutation> W_X_J(const Partition& lambda, const ParabolicData& P) {
  if (P.degree() != lambda.size()) throw std::invalid_argument("W_X_J: degree mismatch");
  std::vector<Permutation> out;
  for_each_permutation(lambda.size(), [&](const Permutation& v) {
    if (is_min_coset_rep(v, P) && springer_contains(v, lambda)) out.push_back(v);
  });
  return out;
}

Polynomial poincare_hessenberg(const Partition& lambda, const HessenbergFunction& h) {
  return HessenbergVariety(lambda, h).poincare();
}

Polynomial poincare_parabolic_formula(const Partition& lambda, const ParabolicData& P) {
  Polynomial shifts;
  for (const auto& v : W_X_J(lambda, P)) shifts.add_term(springer_cell_dim(v, lambda));
  return shifts * poincare_WJ(P);
}

std::vector<HessCell> springer_cells(const Partition& lambda) {
  return HessenbergVariety(lambda, HessenbergFunction::identity(lambda.size())).cells();
}

} // namespace parahess
