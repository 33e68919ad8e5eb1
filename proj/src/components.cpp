#include "parahess/components.hpp"

#include <algorithm>
#include <stdexcept>

#include "parahess/hessvar.hpp"
#include "parahess/schubert.hpp"

namespace parahess {

std::vector<ComponentCandidate> component_candidates(const Partition& lambda, const ParabolicData& P) {
  const Permutation w_J = longest_element(P);
  const int top_length = w_J.length();

  std::vector<ComponentCandidate> out;
  for (const auto& v : W_X_J(lambda, P)) {
    ComponentCandidate c;
    c.v = v;
    c.top_cell = v * w_J;
    c.schubert_top = schubert_point(v, lambda).point * w_J;
    c.cell_dim = springer_cell_dim(v, lambda) + top_length;
    c.full_cell = c.cell_dim == c.top_cell.length();
    out.push_back(std::move(c));
  }

  for (auto& c : out) {
    c.heuristic_maximal = std::none_of(out.begin(), out.end(), [&](const ComponentCandidate& other) {
      return other.schubert_top != c.schubert_top && bruhat_leq(c.schubert_top, other.schubert_top);
    });
  }

  std::sort(out.begin(), out.end(), [](const ComponentCandidate& a, const ComponentCandidate& b) {
    if (a.cell_dim != b.cell_dim) return a.cell_dim > b.cell_dim;
    return a.v < b.v;
  });
  return out;
}

} // namespace parahess
