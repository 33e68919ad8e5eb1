#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parahess/polynomial.hpp"

namespace parahess {

class RootSet;

/// An element of the symmetric group S_n in one-line notation.
///
/// Values and positions are 1-based: `w(i)` is the image of i. Composition
/// follows (u * v)(x) = u(v(x)), so a word s_a s_b s_c applies s_c first.
/// Ordering (`<=>`) is lexicographic on the one-line form.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple transposition s_i exchanging i and i+1.
  static Permutation simple(int i, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  /// Number of inversions, which is the Coxeter length.
  int length() const;
  bool is_identity() const;

  /// Composition (*this)(other(x)). Throws on degree mismatch.
  Permutation operator*(const Permutation& other) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  /// "3,4,1,2"
  std::string to_string() const;

private:
  std::vector<int> images_;
};

/// A subset J of the simple reflections {1..n-1} together with the block
/// composition it induces on {1..n}: i and i+1 share a block iff i is in J.
class ParabolicData {
public:
  struct Block {
    int first;
    int last;
    int size() const { return last - first + 1; }
  };

  /// Throws std::invalid_argument if n < 1 or an index is outside 1..n-1.
  ParabolicData(int n, std::vector<int> J);
  /// Bit i-1 of `mask` set iff i is in J.
  static ParabolicData from_mask(int n, unsigned mask);
  /// J = {1..n-1}.
  static ParabolicData full(int n);

  int degree() const { return n_; }
  const std::vector<int>& J() const { return J_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Block sizes mu, in position order.
  std::vector<int> composition() const;
  unsigned mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1U) != 0; }
  /// Index into blocks() of the block holding position p.
  int block_index(int p) const { return block_of_[p - 1]; }
  bool same_block(int p, int q) const { return block_of_[p - 1] == block_of_[q - 1]; }

  /// "1,3"; empty string for the empty set.
  std::string to_string() const;

  bool operator==(const ParabolicData& other) const { return n_ == other.n_ && mask_ == other.mask_; }

private:
  int n_ = 0;
  unsigned mask_ = 0;
  std::vector<int> J_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

/// Canonical factorization w = w_{n-1} ... w_2 w_1 where the i-th string is
/// either empty or s_{k_i} s_{k_i+1} ... s_i.
struct StringDecomposition {
  int n = 0;
  /// starts[i-1] = k_i, or 0 when the i-th string is empty.
  std::vector<int> starts;

  int string_length(int i) const;
  /// ℓ(w_i) for i = 1..n-1.
  std::vector<int> lengths() const;
  /// Generator word of w_{n-1} ... w_1, leftmost letter first.
  std::vector<int> word() const;
  Permutation product() const;
  /// String decomposition with prescribed string lengths (ℓ_1, ..., ℓ_{n-1});
  /// requires 0 <= ℓ_i <= i.
  static StringDecomposition from_lengths(std::span<const int> lengths);
};

/// Product of simple transpositions. Throws if an index is outside 1..n-1.
Permutation perm_from_word(std::span<const int> word, int n);
/// Generator word of the canonical string factorization of w (a reduced word).
std::vector<int> reduced_word(const Permutation& w);
/// "s3 s2"; "e" for the identity.
std::string word_to_string(std::span<const int> word);

/// N(w) = {(i,j) : i < j, w(i) > w(j)}.
RootSet inversion_set(const Permutation& w);

/// Bruhat order by the rank-matrix dominance criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// w = v * y with v in W^J and y in W_J, lengths adding.
std::pair<Permutation, Permutation> coset_factor(const Permutation& w, const ParabolicData& P);
bool is_min_coset_rep(const Permutation& w, const ParabolicData& P);
/// True iff w preserves every block of P (w lies in W_J).
bool in_parabolic_subgroup(const Permutation& w, const ParabolicData& P);
/// w_J, reversing every block.
Permutation longest_element(const ParabolicData& P);

StringDecomposition string_decompose(const Permutation& w);
/// W^J membership via string lengths: ℓ(w_i) <= ℓ(w_{i-1}) for all i in J, ℓ(w_0) = 0.
bool is_min_coset_rep_strings(const Permutation& w, const ParabolicData& P);

/// Σ_{y in W_J} t^{ℓ(y)}, by enumerating W_J.
Polynomial poincare_WJ(const ParabolicData& P);
/// Product of [m_b]_t! over the blocks of P.
Polynomial poincare_WJ_product(const ParabolicData& P);

/// Calls `fn` on every permutation of S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_sn(int n);
/// Elements of W_J in lexicographic order.
std::vector<Permutation> enumerate_WJ(const ParabolicData& P);

} // namespace parahess
