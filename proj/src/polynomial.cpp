#include "parahess/polynomial.hpp"

#include <stdexcept>

namespace parahess {

Polynomial::Polynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Coefficient coeff) {
  Polynomial p;
  p.add_term(degree, coeff);
  return p;
}

Polynomial Polynomial::t_integer(int m) {
  if (m < 0) throw std::invalid_argument("t_integer: negative argument");
  return Polynomial(std::vector<Coefficient>(static_cast<std::size_t>(m), 1));
}

Polynomial Polynomial::t_factorial(int m) {
  if (m < 0) throw std::invalid_argument("t_factorial: negative argument");
  Polynomial result{1};
  for (int k = 2; k <= m; ++k) result = result * t_integer(k);
  return result;
}

Polynomial::Coefficient Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Polynomial::Coefficient Polynomial::at_one() const {
  Coefficient total = 0;
  for (auto c : coeffs_) total += c;
  return total;
}

void Polynomial::add_term(int degree, Coefficient coeff) {
  if (degree < 0) throw std::invalid_argument("Polynomial: negative degree");
  if (coeff == 0) return;
  if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += coeff;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial result = *this;
  result += other;
  return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Coefficient> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int shift) const {
  if (shift < 0) throw std::invalid_argument("Polynomial: negative shift");
  if (is_zero()) return {};
  std::vector<Coefficient> out(static_cast<std::size_t>(shift), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 't';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace parahess
