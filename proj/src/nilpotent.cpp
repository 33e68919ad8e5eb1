#include "parahess/nilpotent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parahess {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("Partition: parts must be nonincreasing");
    n_ += parts_[k];
  }
}

int Partition::column_height(int c) const {
  int h = 0;
  for (int p : parts_)
    if (p >= c) ++h;
  return h;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------
// Base filling and tableaux

BaseFilling::BaseFilling(const Partition& shape) : shape_(shape) {
  boxes_.resize(shape.size());
  for (int len : shape.parts()) rows_.emplace_back(len, 0);
  int label = 1;
  for (int c = 1; c <= shape.columns(); ++c) {
    for (int r = shape.column_height(c); r >= 1; --r) {
      rows_[r - 1][c - 1] = label;
      boxes_[label - 1] = {r, c};
      ++label;
    }
  }
}

int BaseFilling::right_neighbor(int label) const {
  const Box b = box_of(label);
  if (b.col < shape_.parts()[b.row - 1]) return label_at(b.row, b.col + 1);
  return 0;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)), row_of_(shape_.size(), 0) {
  if (static_cast<int>(rows_.size()) != shape_.rows()) throw std::invalid_argument("Tableau: row count mismatch");
  for (int r = 1; r <= shape_.rows(); ++r) {
    const auto& row = rows_[r - 1];
    if (static_cast<int>(row.size()) != shape_.parts()[r - 1])
      throw std::invalid_argument("Tableau: row length mismatch");
    for (int v : row) {
      if (v < 1 || v > shape_.size() || row_of_[v - 1] != 0)
        throw std::invalid_argument("Tableau: entries must be a bijection onto 1..n");
      row_of_[v - 1] = r;
    }
  }
}

bool Tableau::is_row_strict() const {
  for (const auto& row : rows_)
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return false;
  return true;
}

std::string Tableau::to_string() const {
  const bool wide = shape_.size() >= 10;
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (wide && c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Highest form and Φ(𝒱)

RootSet highest_form_rootset(const Partition& lambda) {
  const BaseFilling filling(lambda);
  RootSet out(lambda.size());
  for (int k = 1; k <= lambda.size(); ++k) {
    const int r = filling.right_neighbor(k);
    if (r != 0) out.insert({k, r});
  }
  return out;
}

bool is_highest_form(const RootSet& phiX) {
  const int n = phiX.degree();
  std::vector<int> piv(n + 1, 0);
  for (const auto& root : phiX.members()) {
    if (!root.positive()) throw std::invalid_argument("is_highest_form: root " + root.to_string() + " is not positive");
    if (piv[root.j] != 0)
      throw std::invalid_argument("is_highest_form: column " + std::to_string(root.j) + " holds more than one pivot");
    piv[root.j] = root.i;
  }
  int prev = 0;
  for (int c = 1; c <= n; ++c) {
    if (piv[c] == 0) {
      if (prev != 0) return false;
    } else {
      if (piv[c] <= prev) return false;
      prev = piv[c];
    }
  }
  return true;
}

RootSet phi_V_closure(const RootSet& phiX, int n) {
  if (phiX.degree() != n) throw std::invalid_argument("phi_V_closure: degree mismatch");
  const auto generators = phiX.members();
  for (const auto& a : generators)
    if (!a.positive()) throw std::invalid_argument("phi_V_closure: root " + a.to_string() + " is not positive");
  RootSet out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (const auto& a : generators)
        if (root_dominates({i, j}, a)) {
          out.insert({i, j});
          break;
        }
  return out;
}

RootSet phi_V_filling(const Partition& lambda) {
  const BaseFilling filling(lambda);
  const int n = lambda.size();
  RootSet out(n);
  for (int i = 1; i <= n; ++i) {
    const int col_i = filling.box_of(i).col;
    const int r_i = filling.right_neighbor(i);
    for (int j = i + 1; j <= n; ++j)
      if (filling.box_of(j).col > col_i && j > r_i) out.insert({i, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Springer fibers

Tableau springer_tableau(const Permutation& w, const Partition& lambda) {
  if (w.degree() != lambda.size())
    throw std::invalid_argument("springer_tableau: permutation degree " + std::to_string(w.degree()) +
                                " does not match |lambda| = " + std::to_string(lambda.size()));
  const BaseFilling filling(lambda);
  const Permutation inv = w.inverse();
  auto rows = filling.rows();
  for (auto& row : rows)
    for (int& label : row) label = inv(label);
  return Tableau(lambda, std::move(rows));
}

bool springer_contains(const Permutation& w, const Partition& lambda) {
  return springer_tableau(w, lambda).is_row_strict();
}

bool springer_contains_roots(const Permutation& w, const Partition& lambda) {
  if (w.degree() != lambda.size()) throw std::invalid_argument("springer_contains_roots: degree mismatch");
  const Permutation inv = w.inverse();
  for (const auto& g : highest_form_rootset(lambda).members())
    if (!root_act(inv, g).positive()) return false;
  return true;
}

int row_inversions(const Tableau& T, int q) {
  const int n = T.shape().size();
  if (q < 2 || q > n) throw std::invalid_argument("row_inversions: q = " + std::to_string(q) + " outside 2.." + std::to_string(n));
  if (!T.is_row_strict()) throw std::invalid_argument("row_inversions: tableau " + T.to_string() + " is not row-strict");
  // Row-strictness makes each row of T[q] a prefix, so its length is an entry count.
  std::vector<int> len(T.rows().size(), 0);
  for (std::size_t r = 0; r < T.rows().size(); ++r)
    for (int v : T.rows()[r])
      if (v <= q) ++len[r];
  const int row_q = T.row_of(q) - 1;
  const int L = len[row_q];
  int count = 0;
  for (int r = 0; r < static_cast<int>(len.size()); ++r) {
    if (len[r] > L) ++count;
    else if (r < row_q && len[r] == L) ++count;
  }
  return count;
}

std::vector<int> row_inversion_profile(const Tableau& T) {
  std::vector<int> out;
  for (int q = 2; q <= T.shape().size(); ++q) out.push_back(row_inversions(T, q));
  return out;
}

int springer_cell_dim_rows(const Permutation& w, const Partition& lambda) {
  const Tableau T = springer_tableau(w, lambda);
  if (!T.is_row_strict())
    throw std::domain_error("permutation " + w.to_string() + " is not in the Springer fiber of type " + lambda.to_string());
  int total = 0;
  for (int l : row_inversion_profile(T)) total += l;
  return total;
}

int springer_cell_dim_roots(const Permutation& w, const Partition& lambda) {
  if (!springer_contains_roots(w, lambda))
    throw std::domain_error("permutation " + w.to_string() + " is not in the Springer fiber of type " + lambda.to_string());
  const RootSet phi_V = phi_V_filling(lambda);
  return (inversion_set(w.inverse()) - phi_V).size();
}

int springer_cell_dim(const Permutation& w, const Partition& lambda) {
  const int by_rows = springer_cell_dim_rows(w, lambda);
  const int by_roots = springer_cell_dim_roots(w, lambda);
  if (by_rows != by_roots)
    throw std::logic_error("springer_cell_dim: row count " + std::to_string(by_rows) + " disagrees with root count " +
                           std::to_string(by_roots) + " for w = " + w.to_string());
  return by_rows;
}

} // namespace parahess
