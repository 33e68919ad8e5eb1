#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace parahess {

/// Polynomial in one variable t with nonnegative integer coefficients.
///
/// Used for Poincaré polynomials graded by complex cell dimension: the
/// coefficient of t^k counts the k-dimensional cells of an affine paving.
/// Coefficients are stored in ascending order with trailing zeros trimmed,
/// so equal polynomials have equal representations.
class Polynomial {
public:
  using Coefficient = std::uint64_t;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coefficient> coeffs);
  explicit Polynomial(std::vector<Coefficient> coeffs);

  static Polynomial monomial(int degree, Coefficient coeff = 1);
  /// [m]_t = 1 + t + ... + t^{m-1}
  static Polynomial t_integer(int m);
  /// [m]_t! = [1]_t [2]_t ... [m]_t
  static Polynomial t_factorial(int m);

  const std::vector<Coefficient>& coefficients() const { return coeffs_; }
  Coefficient coefficient(int k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Value at t = 1, i.e. the total number of cells.
  Coefficient at_one() const;

  void add_term(int degree, Coefficient coeff = 1);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  /// Multiplication by t^shift.
  Polynomial shifted(int shift) const;

  bool operator==(const Polynomial&) const = default;

  /// "1 + 3t + 4t^2 + 3t^3 + t^4"; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void trim();

  std::vector<Coefficient> coeffs_;
};

} // namespace parahess
