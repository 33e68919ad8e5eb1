#pragma once

#include <string>
#include <vector>

#include "parahess/rootsys.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

/// Jordan type of a nilpotent matrix: a weakly decreasing sequence of
/// positive parts. Row 1 (the longest) is drawn on top.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int columns() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Height of column c (1-based): the number of parts >= c.
  int column_height(int c) const;

  /// At most three rows or at most two columns.
  bool in_main_theorem_hypothesis() const { return rows() <= 3 || columns() <= 2; }

  /// "3,2"
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

struct Box {
  int row = 0; ///< 1-based, top to bottom
  int col = 0; ///< 1-based, left to right
};

/// The canonical numbering of the boxes of λ: columns left to right, each
/// column numbered from its bottom box upwards.
class BaseFilling {
public:
  explicit BaseFilling(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  Box box_of(int label) const { return boxes_[label - 1]; }
  int label_at(int row, int col) const { return rows_[row - 1][col - 1]; }
  /// Label rows top to bottom.
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// r_k: the label directly right of k, or 0 if none.
  int right_neighbor(int label) const;

private:
  Partition shape_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> rows_;
};

/// A bijective filling of a Young diagram with 1..n.
class Tableau {
public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  /// Row (1-based) containing the value.
  int row_of(int value) const { return row_of_[value - 1]; }
  bool is_row_strict() const;

  /// "245/13" (rows top to bottom). Entries are comma-separated within a
  /// row once n >= 10.
  std::string to_string() const;

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

/// Φ_X = {(k, r_k) : r_k != 0} for the highest-form representative of type λ.
RootSet highest_form_rootset(const Partition& lambda);

/// Pivot test: piv(c) is the row of the entry in column c (0 if none);
/// the sequence piv(1), ..., piv(n) must be weakly increasing with distinct
/// nonzero values. Throws std::invalid_argument if a column holds two roots
/// or a root is not positive.
bool is_highest_form(const RootSet& phiX);

/// {γ positive : γ strictly dominates some α in phiX}.
RootSet phi_V_closure(const RootSet& phiX, int n);
/// Φ(𝒱) read off the base filling: (i,j) with j in a column right of i's
/// column and j > r_i.
RootSet phi_V_filling(const Partition& lambda);

/// Tableau whose box labelled i in the base filling holds w^{-1}(i).
Tableau springer_tableau(const Permutation& w, const Partition& lambda);
/// Row-strictness of springer_tableau(w, λ).
bool springer_contains(const Permutation& w, const Partition& lambda);
/// w^{-1}(γ) positive for every γ in Φ_X.
bool springer_contains_roots(const Permutation& w, const Partition& lambda);

/// Number of q-row inversions ℓ_{q-1} of a row-strict tableau:
/// rows of T[q] above q's row with the same length, plus all rows of T[q]
/// strictly longer than q's row.
int row_inversions(const Tableau& T, int q);
/// (ℓ_1, ..., ℓ_{n-1}).
std::vector<int> row_inversion_profile(const Tableau& T);

/// Σ_q ℓ_{q-1}. Throws std::domain_error if w is not in the Springer fiber.
int springer_cell_dim_rows(const Permutation& w, const Partition& lambda);
/// |N(w^{-1}) ∩ Φ(𝒱)^c|. Throws std::domain_error if w is not in the Springer fiber.
int springer_cell_dim_roots(const Permutation& w, const Partition& lambda);
/// Both formulas above; throws std::logic_error if they disagree.
int springer_cell_dim(const Permutation& w, const Partition& lambda);

} // namespace parahess
