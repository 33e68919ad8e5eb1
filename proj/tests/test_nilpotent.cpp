#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "parahess/nilpotent.hpp"
#include "parahess/rootsys.hpp"

using namespace parahess;

namespace {

Partition L(std::vector<int> p) { return Partition(std::move(p)); }
Permutation word(std::vector<int> w, int n = 4) { return perm_from_word(w, n); }

} // namespace

TEST_CASE("partition validation and shape") {
  CHECK_THROWS_AS(L({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(L({2, 0}), std::invalid_argument);
  const auto p = L({3, 2});
  CHECK(p.size() == 5);
  CHECK(p.rows() == 2);
  CHECK(p.columns() == 3);
  CHECK(p.column_height(2) == 2);
  CHECK(p.column_height(3) == 1);
  CHECK(p.to_string() == "3,2");
  CHECK(L({3, 1, 1, 1}).in_main_theorem_hypothesis() == false);
  CHECK(L({1, 1, 1, 1}).in_main_theorem_hypothesis());
  CHECK(L({2, 2, 2, 2}).in_main_theorem_hypothesis());
}

TEST_CASE("partitions_of") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[n]);
  const auto p4 = partitions_of(4);
  CHECK(p4.front() == L({4}));
  CHECK(p4[1] == L({3, 1}));
  CHECK(p4.back() == L({1, 1, 1, 1}));
}

TEST_CASE("base filling") {
  CHECK(BaseFilling(L({1})).rows() == std::vector<std::vector<int>>{{1}});
  CHECK(BaseFilling(L({3, 2})).rows() == std::vector<std::vector<int>>{{2, 4, 5}, {1, 3}});
  CHECK(BaseFilling(L({2, 1, 1})).rows() == std::vector<std::vector<int>>{{3, 4}, {2}, {1}});
  const BaseFilling f(L({3, 2}));
  CHECK(f.right_neighbor(1) == 3);
  CHECK(f.right_neighbor(5) == 0);
  CHECK(f.box_of(4).row == 1);
  CHECK(f.box_of(4).col == 2);
  CHECK(f.label_at(2, 2) == 3);
}

TEST_CASE("highest form root sets") {
  CHECK(highest_form_rootset(L({1, 1, 1, 1})).empty());
  CHECK(highest_form_rootset(L({3, 2})) == RootSet(5, {{1, 3}, {2, 4}, {4, 5}}));
  CHECK(highest_form_rootset(L({2, 2})) == RootSet(4, {{1, 3}, {2, 4}}));
  CHECK(highest_form_rootset(L({2, 1, 1})) == RootSet(4, {{3, 4}}));
}

TEST_CASE("is_highest_form") {
  CHECK(is_highest_form(RootSet(4)));
  CHECK(is_highest_form(RootSet(5, {{1, 3}, {2, 4}, {4, 5}})));
  CHECK_FALSE(is_highest_form(RootSet(4, {{1, 2}, {3, 4}})));
  CHECK(is_highest_form(RootSet(4, {{1, 3}, {2, 4}})));
  CHECK_THROWS_AS(is_highest_form(RootSet(4, {{1, 3}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(is_highest_form(RootSet(4, {{3, 1}})), std::invalid_argument);
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) REQUIRE(is_highest_form(highest_form_rootset(lambda)));
}

TEST_CASE("phi_V by closure and by filling") {
  CHECK(phi_V_closure(RootSet(4), 4).empty());
  CHECK(phi_V_closure(highest_form_rootset(L({2, 2})), 4) == RootSet(4, {{1, 4}}));
  CHECK(phi_V_closure(highest_form_rootset(L({2, 1, 1})), 4) == RootSet(4, {{1, 4}, {2, 4}}));
  CHECK(phi_V_filling(L({1, 1, 1})).empty());
  CHECK(phi_V_filling(L({2, 2})) == RootSet(4, {{1, 4}}));

  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const RootSet phiX = highest_form_rootset(lambda);
      const RootSet filling = phi_V_filling(lambda);
      REQUIRE(filling == phi_V_closure(phiX, n));
      REQUIRE((filling & phiX).empty());
    }
}

TEST_CASE("springer tableaux") {
  const auto lam = L({2, 1, 1});
  CHECK(springer_tableau(Permutation::identity(4), lam).rows() == BaseFilling(lam).rows());
  const auto T1 = springer_tableau(word({2, 1, 3, 2}), lam);
  CHECK(T1.rows() == std::vector<std::vector<int>>{{1, 2}, {4}, {3}});
  CHECK(T1.to_string() == "12/4/3");
  const auto T2 = springer_tableau(word({1, 2}), lam);
  CHECK(T2.rows() == std::vector<std::vector<int>>{{2, 4}, {1}, {3}});
  CHECK_THROWS(springer_tableau(Permutation::identity(3), lam));
}

TEST_CASE("tableau validation and rendering") {
  CHECK_THROWS_AS(Tableau(L({2, 1}), {{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau(L({2, 1}), {{1, 2, 3}}), std::invalid_argument);
  const Tableau T(L({2, 1}), {{3, 1}, {2}});
  CHECK_FALSE(T.is_row_strict());
  CHECK(T.row_of(2) == 2);
  std::vector<int> row(10);
  for (int k = 0; k < 10; ++k) row[k] = k + 1;
  CHECK(Tableau(L({10}), {row}).to_string() == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("springer membership") {
  const auto lam = L({2, 2});
  CHECK(springer_contains(Permutation::identity(4), lam));
  CHECK(springer_contains(word({2}), lam));
  CHECK_FALSE(springer_contains(word({1, 2}), lam));

  const std::vector<int> identity_h[] = {{}, {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}};
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for_each_permutation(n, [&](const Permutation& w) {
        const bool tab = springer_contains(w, lambda);
        REQUIRE(tab == springer_contains_roots(w, lambda));
        REQUIRE(tab == oracle::matrix_in_hessenberg(w, lambda, identity_h[n]));
      });
}

TEST_CASE("row inversions") {
  const auto lam = L({2, 1, 1});
  const Tableau base(lam, BaseFilling(lam).rows());
  for (int q = 2; q <= 4; ++q) CHECK(row_inversions(base, q) == 0);

  const Tableau T1(lam, {{1, 2}, {4}, {3}});
  CHECK(row_inversion_profile(T1) == std::vector<int>{0, 1, 1});
  const Tableau T2(lam, {{2, 4}, {1}, {3}});
  CHECK(row_inversion_profile(T2) == std::vector<int>{0, 2, 0});

  CHECK_THROWS_AS(row_inversions(T1, 1), std::invalid_argument);
  CHECK_THROWS_AS(row_inversions(T1, 5), std::invalid_argument);
  CHECK_THROWS_AS(row_inversions(Tableau(L({2}), {{2, 1}}), 2), std::invalid_argument);
}

TEST_CASE("springer cell dimensions") {
  const auto lam = L({2, 2});
  CHECK(springer_cell_dim(Permutation::identity(4), lam) == 0);
  CHECK(springer_cell_dim(word({2}), lam) == 1);
  CHECK(springer_cell_dim(word({1, 3, 2}), lam) == 2);
  CHECK_THROWS_AS(springer_cell_dim(word({1, 2}), lam), std::domain_error);

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    for (const auto& lambda : partitions_of(n)) {
      Polynomial poly;
      for_each_permutation(n, [&](const Permutation& w) {
        if (!springer_contains(w, lambda)) return;
        const int rows = springer_cell_dim_rows(w, lambda);
        REQUIRE(rows == springer_cell_dim_roots(w, lambda));
        REQUIRE(rows == oracle::cell_dim_unsimplified(w, lambda, id));
        for (int q = 2; q <= n; ++q) {
          const int l = row_inversions(springer_tableau(w, lambda), q);
          REQUIRE(l >= 0);
          REQUIRE(l <= q - 1);
        }
        poly.add_term(rows);
      });
      if (lambda.rows() == n) REQUIRE(poly == Polynomial::t_factorial(n));
      if (lambda.rows() == 1) REQUIRE(poly == Polynomial{1});
    }
  }
}
