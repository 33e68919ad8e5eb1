#pragma once

// Test-only reference implementations. None of these call into the library
// code path they are used to check.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "parahess/nilpotent.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/symgroup.hpp"

namespace oracle {

using parahess::Permutation;

inline std::vector<int> one_line(const Permutation& w) { return {w.images().begin(), w.images().end()}; }

/// Word evaluation by right multiplication: w * s_g swaps positions g, g+1.
inline Permutation from_word(const std::vector<int>& word, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int g : word) std::swap(images[g - 1], images[g]);
  return Permutation(images);
}

inline int inversions(const Permutation& w) {
  int count = 0;
  const auto v = one_line(w);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) count += v[i] > v[j];
  return count;
}

/// Bruhat order by recursive descent (lifting property): if s is a right
/// descent of w, then u <= w iff min(u, us) <= ws.
inline bool subword_leq(Permutation u, Permutation w) {
  const int n = w.degree();
  while (true) {
    auto wv = one_line(w);
    int s = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (wv[i] > wv[i + 1]) {
        s = i;
        break;
      }
    if (s < 0) return inversions(u) == 0;
    auto uv = one_line(u);
    if (uv[s] > uv[s + 1]) std::swap(uv[s], uv[s + 1]);
    std::swap(wv[s], wv[s + 1]);
    u = Permutation(uv);
    w = Permutation(wv);
  }
}

/// Lower ideal grown downward along Bruhat covers w -> w t with ℓ dropping by one.
inline std::set<Permutation> bfs_lower_ideal(const std::vector<Permutation>& tops) {
  std::set<Permutation> seen(tops.begin(), tops.end());
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      const auto v = one_line(w);
      const int len = inversions(w);
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) {
          if (v[a] < v[b]) continue;
          auto u = v;
          std::swap(u[a], u[b]);
          Permutation p(u);
          if (inversions(p) == len - 1 && seen.insert(p).second) next.push_back(p);
        }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Highest-form nilpotent as a 0/1 matrix built directly from the base filling.
inline std::vector<std::vector<int>> nilpotent_matrix(const parahess::Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::vector<int>> X(n, std::vector<int>(n, 0));
  const parahess::BaseFilling filling(lambda);
  for (const auto& row : filling.rows())
    for (std::size_t c = 1; c < row.size(); ++c) X[row[c - 1] - 1][row[c] - 1] = 1;
  return X;
}

/// w^{-1} X w computed as a matrix product with permutation matrices.
inline std::vector<std::vector<int>> conjugate(const Permutation& w, const std::vector<std::vector<int>>& X) {
  const int n = w.degree();
  std::vector<std::vector<int>> P(n, std::vector<int>(n, 0)), Pinv(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    P[w(i) - 1][i - 1] = 1;
    Pinv[i - 1][w(i) - 1] = 1;
  }
  auto mul = [n](const auto& A, const auto& B) {
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (A[i][k])
          for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
  };
  return mul(mul(Pinv, X), P);
}

/// w^{-1} X w vanishes outside the staircase of h.
inline bool matrix_in_hessenberg(const Permutation& w, const parahess::Partition& lambda, const std::vector<int>& h) {
  const auto M = conjugate(w, nilpotent_matrix(lambda));
  const int n = w.degree();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (M[a - 1][b - 1] != 0 && a > h[b - 1]) return false;
  return true;
}

/// d_w = |N(w^{-1})| - |{γ in Φ(𝒱) : w^{-1}(γ) not in Φ_H}|, with Φ(𝒱)
/// computed by brute-force dominance over the matrix pivots.
inline int cell_dim_unsimplified(const Permutation& w, const parahess::Partition& lambda, const std::vector<int>& h) {
  const int n = w.degree();
  const auto X = nilpotent_matrix(lambda);
  const Permutation inv = w.inverse();
  int bad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool in_V = false;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (X[a - 1][b - 1] && i <= a && b <= j && !(i == a && j == b)) in_V = true;
      if (!in_V) continue;
      const int a = inv(i), b = inv(j);
      if (!(a < b || a <= h[b - 1])) ++bad;
    }
  return inversions(inv) - bad;
}

/// Σ t^ℓ over block-preserving permutations, by filtering all of S_n.
inline parahess::Polynomial poincare_WJ_filter(const parahess::ParabolicData& P) {
  parahess::Polynomial p;
  parahess::for_each_permutation(P.degree(), [&](const Permutation& w) {
    for (int i = 1; i <= w.degree(); ++i)
      if (!P.same_block(i, w(i))) return;
    p.add_term(inversions(w));
  });
  return p;
}

} // namespace oracle
