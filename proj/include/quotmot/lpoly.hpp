#ifndef QUOTMOT_LPOLY_HPP
#define QUOTMOT_LPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quotmot/errors.hpp"

namespace quotmot {

using Int = boost::multiprecision::cpp_int;

/// Integer polynomial in the Lefschetz class L, stored densely:
/// coefficient of L^k sits at index k. The highest stored coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class LPolynomial {
 public:
  LPolynomial() = default;

  LPolynomial(Int constant) {  // NOLINT: implicit by design, mirrors Z -> Z[L]
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }

  LPolynomial(int constant) : LPolynomial(Int(constant)) {}

  explicit LPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static LPolynomial monomial(Int c, int k) {
    if (k < 0) throw InvalidArgument("negative exponent in monomial");
    if (c == 0) return LPolynomial{};
    std::vector<Int> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return LPolynomial(std::move(v));
  }

  /// The class L itself.
  static LPolynomial lefschetz() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree in L; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Int coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  friend LPolynomial operator+(const LPolynomial& a, const LPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return LPolynomial(std::move(out));
  }

  friend LPolynomial operator-(const LPolynomial& a, const LPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return LPolynomial(std::move(out));
  }

  LPolynomial operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -coeffs_[k];
    return LPolynomial(std::move(out));
  }

  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return LPolynomial{};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LPolynomial(std::move(out));
  }

  LPolynomial& operator+=(const LPolynomial& o) { return *this = *this + o; }
  LPolynomial& operator-=(const LPolynomial& o) { return *this = *this - o; }
  LPolynomial& operator*=(const LPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Exact quotient; throws InexactDivision when the remainder is nonzero.
  LPolynomial divide_exact(const LPolynomial& divisor) const {
    if (divisor.is_zero()) throw InexactDivision("division by zero polynomial");
    if (is_zero()) return LPolynomial{};
    if (degree() < divisor.degree())
      throw InexactDivision("degree of dividend below degree of divisor");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
    const Int& lead = divisor.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      Int top = rem[static_cast<std::size_t>(k) + divisor.coeffs_.size() - 1];
      if (top % lead != 0)
        throw InexactDivision("leading coefficient does not divide exactly");
      Int q = top / lead;
      if (q != 0) {
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
          rem[static_cast<std::size_t>(k) + j] -= q * divisor.coeffs_[j];
      }
      quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const Int& c : rem)
      if (c != 0) throw InexactDivision("nonzero remainder in exact division");
    return LPolynomial(std::move(quot));
  }

  /// True iff L^k divides the polynomial (coefficients of L^0..L^{k-1} vanish).
  /// The zero polynomial is divisible by every power.
  bool divisible_by_power(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i)
      if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  Int eval(const Int& q) const {
    Int acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + coeffs_[k];
    return acc;
  }

  /// Degree dilation: the coefficient of L^k moves to degree k*image_degree.
  /// Realises specialisations such as L -> z^2.
  LPolynomial substitute(int image_degree) const {
    if (image_degree < 1) throw InvalidArgument("image_degree must be positive");
    if (is_zero()) return LPolynomial{};
    std::vector<Int> out(static_cast<std::size_t>(degree()) * image_degree + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      out[k * static_cast<std::size_t>(image_degree)] = coeffs_[k];
    return LPolynomial(std::move(out));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

/// Canonical text rendering: terms in increasing degree joined by " + ",
/// coefficients rendered as c*var^k, negatives with a binary minus.
inline std::string to_string(const LPolynomial& p, std::string_view var = "L") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace quotmot

#endif
