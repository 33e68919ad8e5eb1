#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "parahess/hessvar.hpp"

using namespace parahess;

namespace {

Partition L(std::vector<int> p) { return Partition(std::move(p)); }
Permutation word(std::vector<int> w, int n = 4) { return perm_from_word(w, n); }
const ParabolicData J13(4, {1, 3});

} // namespace

TEST_CASE("hessenberg function validation") {
  CHECK_THROWS_AS(HessenbergFunction({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction({3, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction({2, 3, 4}), std::invalid_argument);
  CHECK(HessenbergFunction({2, 2, 4, 4}).to_string() == "2,2,4,4");
}

TEST_CASE("h_from_J and the parabolic predicate") {
  CHECK(h_from_J(ParabolicData(4, {})) == HessenbergFunction::identity(4));
  CHECK(h_from_J(J13) == HessenbergFunction({2, 2, 4, 4}));
  CHECK(h_from_J(ParabolicData::full(5)) == HessenbergFunction({5, 5, 5, 5, 5}));

  CHECK(is_parabolic_function(HessenbergFunction::identity(3)));
  CHECK(is_parabolic_function(HessenbergFunction({2, 2, 4, 4})));
  CHECK_FALSE(is_parabolic_function(HessenbergFunction({2, 2, 4, 5, 5})));
  CHECK_THROWS_AS(parabolic_from_h(HessenbergFunction({2, 2, 4, 5, 5})), std::domain_error);

  for (int n = 1; n <= 7; ++n)
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
      const auto P = ParabolicData::from_mask(n, mask);
      REQUIRE(is_parabolic_function(h_from_J(P)));
      REQUIRE(parabolic_from_h(h_from_J(P)) == P);
    }
}

TEST_CASE("hessenberg membership") {
  const auto h = h_from_J(J13);
  CHECK(hess_contains(Permutation::identity(4), L({2, 2}), h));
  CHECK(hess_contains(word({2}), L({2, 2}), h));
  CHECK_FALSE(hess_contains(word({1, 2}), L({2, 2}), h));
}

TEST_CASE("hessenberg membership matches matrix conjugation, n <= 5, all h") {
  for (int n = 1; n <= 5; ++n) {
    // Every Hessenberg function of degree n.
    std::vector<std::vector<int>> hs;
    std::vector<int> h(n);
    std::function<void(int, int)> rec = [&](int i, int lo) {
      if (i == n) {
        hs.push_back(h);
        return;
      }
      for (int v = std::max(lo, i + 1); v <= n; ++v) {
        h[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 1);
    for (const auto& hv : hs) {
      const HessenbergFunction hf(hv);
      for (const auto& lambda : partitions_of(n)) {
        const HessenbergVariety var(lambda, hf);
        for_each_permutation(n, [&](const Permutation& w) {
          const bool in = var.contains(w);
          REQUIRE(in == oracle::matrix_in_hessenberg(w, lambda, hv));
          if (in) REQUIRE(var.cell_dim(w) == oracle::cell_dim_unsimplified(w, lambda, hv));
        });
      }
    }
  }
}

TEST_CASE("cell dimensions") {
  const auto h = h_from_J(J13);
  CHECK(cell_dim(Permutation::identity(4), L({2, 2}), h) == 0);
  CHECK(cell_dim(word({1, 3, 2}), L({2, 2}), h) == 2);
  CHECK(cell_dim(word({2, 1, 3}), L({2, 2}), h) == 3);
  CHECK(word({2, 1, 3}) == Permutation({3, 1, 4, 2}));
  CHECK_THROWS_AS(cell_dim(word({1, 2}), L({2, 2}), h), std::domain_error);

  CHECK(parabolic_cell_dim(Permutation::identity(4), L({2, 2}), J13) == 0);
  CHECK(parabolic_cell_dim(word({2}), L({2, 2}), J13) == 1);
  CHECK(parabolic_cell_dim(word({1, 3, 2, 1, 3}), L({2, 2}), J13) == 4);
  CHECK(word({1, 3, 2, 1, 3}) == Permutation({4, 2, 3, 1}));
  CHECK_THROWS_AS(parabolic_cell_dim(word({1, 2}), L({2, 2}), J13), std::domain_error);
}

TEST_CASE("fixed points and parabolic dimension agree exhaustively, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        const auto P = ParabolicData::from_mask(n, mask);
        const HessenbergVariety var(lambda, h_from_J(P));
        for_each_permutation(n, [&](const Permutation& w) {
          const auto [v, y] = coset_factor(w, P);
          const bool in = var.contains(w);
          REQUIRE(in == springer_contains(v, lambda));
          if (in) REQUIRE(var.cell_dim(w) == parabolic_cell_dim(w, lambda, P));
        });
      }
}

TEST_CASE("W_X_J") {
  const std::vector<Permutation> expected22{word({}), word({2}), word({1, 3, 2})};
  auto got22 = W_X_J(L({2, 2}), J13);
  auto sorted22 = expected22;
  std::sort(sorted22.begin(), sorted22.end());
  CHECK(got22 == sorted22);

  std::vector<Permutation> expected211{word({}), word({2}), word({1, 2}), word({2, 1, 3, 2})};
  std::sort(expected211.begin(), expected211.end());
  CHECK(W_X_J(L({2, 1, 1}), J13) == expected211);

  // X = 0: every minimal coset representative.
  for (unsigned mask = 0; mask < 8; ++mask) {
    const auto P = ParabolicData::from_mask(4, mask);
    CHECK(W_X_J(L({1, 1, 1, 1}), P).size() == 24 / poincare_WJ(P).at_one());
  }
}

TEST_CASE("poincare polynomials") {
  CHECK(poincare_hessenberg(L({4}), HessenbergFunction::identity(4)) == Polynomial{1});
  CHECK(poincare_hessenberg(L({2, 2}), h_from_J(J13)) == Polynomial{1, 3, 4, 3, 1});
  CHECK(poincare_hessenberg(L({1, 1, 1, 1}), HessenbergFunction::identity(4)) == Polynomial{1, 3, 5, 6, 5, 3, 1});
  CHECK(poincare_hessenberg(L({2, 1, 1}), h_from_J(J13)) == Polynomial{1, 3, 5, 5, 2});

  CHECK(poincare_parabolic_formula(L({1}), ParabolicData(1, {})) == Polynomial{1});
  CHECK(poincare_parabolic_formula(L({2, 2}), J13) == Polynomial{1, 1, 1} * Polynomial{1, 2, 1});
  CHECK(poincare_parabolic_formula(L({2, 1, 1}), J13) == Polynomial{1, 1, 2} * Polynomial{1, 2, 1});

  // A non-parabolic h is accepted by the general routine.
  const auto p = poincare_hessenberg(L({3, 2}), HessenbergFunction({2, 2, 4, 5, 5}));
  CHECK(p.at_one() > 0);
}

TEST_CASE("poincare corollary and cell counts, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        const auto P = ParabolicData::from_mask(n, mask);
        const HessenbergVariety var(lambda, h_from_J(P));
        const auto poly = var.poincare();
        REQUIRE(poly == poincare_parabolic_formula(lambda, P));
        REQUIRE(poly.at_one() == var.cells().size());
      }
      Polynomial springer;
      for (const auto& c : springer_cells(lambda)) springer.add_term(c.dim);
      REQUIRE(springer == poincare_hessenberg(lambda, HessenbergFunction::identity(n)));
    }
}

TEST_CASE("HessenbergVariety cells carry their coset factorization") {
  const HessenbergVariety var(L({2, 2}), h_from_J(J13));
  const auto cells = var.cells();
  CHECK(cells.size() == 12);
  CHECK(std::is_sorted(cells.begin(), cells.end(), [](const HessCell& a, const HessCell& b) { return a.w < b.w; }));
  for (const auto& c : cells) {
    CHECK(c.v * c.y == c.w);
    CHECK(c.dim == springer_cell_dim(c.v, L({2, 2})) + c.y.length());
  }
  CHECK_THROWS(HessenbergVariety(L({2, 2}), HessenbergFunction::identity(3)));
}
