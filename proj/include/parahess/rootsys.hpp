#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace parahess {

class Permutation;
class ParabolicData;
class HessenbergFunction;

/// The type A root ε_i - ε_j, stored as the index pair (i, j) with i != j.
/// Positive roots (i < j) correspond to α_i + ... + α_{j-1} and to E_{ij}.
struct Root {
  int i = 0;
  int j = 0;

  bool positive() const { return i < j; }
  Root negated() const { return {j, i}; }

  auto operator<=>(const Root&) const = default;

  /// "(1,3)"
  std::string to_string() const;
};

/// A set of roots of a fixed degree n, backed by an n*n bitset.
///
/// Iteration via members() is in lexicographic (i, j) order.
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(int n);
  RootSet(int n, const std::vector<Root>& roots);

  static RootSet positive_roots(int n);
  static RootSet all_roots(int n);

  int degree() const { return n_; }

  /// Throws std::invalid_argument for roots not valid in degree n.
  void insert(Root r);
  void erase(Root r);
  bool contains(Root r) const;
  int size() const;
  bool empty() const;

  std::vector<Root> members() const;

  RootSet operator&(const RootSet& other) const;
  RootSet operator|(const RootSet& other) const;
  /// Set difference.
  RootSet operator-(const RootSet& other) const;
  RootSet& operator&=(const RootSet& other);
  RootSet& operator|=(const RootSet& other);

  RootSet positive_part() const;
  RootSet negative_part() const;
  /// Positive roots not in this set.
  RootSet positive_complement() const;

  bool operator==(const RootSet& other) const = default;

  /// "{(1,3),(2,4)}"
  std::string to_string() const;

private:
  void check_compatible(const RootSet& other) const;
  int bit(Root r) const { return (r.i - 1) * n_ + (r.j - 1); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// (w(i), w(j)).
Root root_act(const Permutation& w, Root r);
/// {root_act(w, r) : r in roots}.
RootSet root_act(const Permutation& w, const RootSet& roots);

/// Roots whose endpoints share a block of P.
RootSet phi_J(const ParabolicData& P);

/// Strict dominance g > h on positive roots: g - h is a nonzero sum of
/// positive roots. Throws std::invalid_argument on non-positive input.
bool root_dominates(Root g, Root h);

/// {(i,j) : i != j, i <= h(j)}.
RootSet phi_H_from_h(const HessenbergFunction& h);

} // namespace parahess
