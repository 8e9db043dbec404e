#ifndef QUOTMOT_LSERIES_HPP
#define QUOTMOT_LSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/lpoly.hpp"

namespace quotmot {

/// Element of Z[[L]] known modulo L^N. Arithmetic on operands of different
/// orders projects to the minimum order, mirroring the maps of the inverse
/// limit defining the L-adic completion.
class TruncatedLSeries {
 public:
  explicit TruncatedLSeries(int order)
      : order_(order), coeffs_(checked_size(order)) {}

  TruncatedLSeries(const LPolynomial& p, int order)
      : order_(order), coeffs_(checked_size(order)) {
    for (int k = 0; k < order_; ++k) coeffs_[static_cast<std::size_t>(k)] = p.coeff(k);
  }

  static TruncatedLSeries one(int order) {
    return TruncatedLSeries(LPolynomial(1), order);
  }

  int order() const { return order_; }

  Int coeff(int k) const {
    return (k >= 0 && k < order_) ? coeffs_[static_cast<std::size_t>(k)] : Int(0);
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  TruncatedLSeries reduce(int order) const {
    TruncatedLSeries out(std::min(order, order_));
    for (int k = 0; k < out.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeff(k);
    return out;
  }

  friend TruncatedLSeries operator+(const TruncatedLSeries& a, const TruncatedLSeries& b) {
    TruncatedLSeries out(std::min(a.order_, b.order_));
    for (int k = 0; k < out.order_; ++k)
      out.coeffs_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return out;
  }

  friend TruncatedLSeries operator-(const TruncatedLSeries& a, const TruncatedLSeries& b) {
    TruncatedLSeries out(std::min(a.order_, b.order_));
    for (int k = 0; k < out.order_; ++k)
      out.coeffs_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return out;
  }

  friend TruncatedLSeries operator*(const TruncatedLSeries& a, const TruncatedLSeries& b) {
    TruncatedLSeries out(std::min(a.order_, b.order_));
    for (int i = 0; i < std::min(a.order_, out.order_); ++i) {
      const Int& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; i + j < out.order_ && j < b.order_; ++j)
        out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
  }

  TruncatedLSeries& operator*=(const TruncatedLSeries& o) { return *this = *this * o; }
  TruncatedLSeries& operator+=(const TruncatedLSeries& o) { return *this = *this + o; }
  TruncatedLSeries& operator*=(const LPolynomial& p) { return *this = *this * p; }

  friend TruncatedLSeries operator*(const TruncatedLSeries& a, const LPolynomial& p) {
    return a * TruncatedLSeries(p, a.order_);
  }

  /// Equality as elements of Z[[L]]/L^min(N1,N2).
  bool congruent(const TruncatedLSeries& o) const {
    int n = std::min(order_, o.order_);
    for (int k = 0; k < n; ++k)
      if (coeff(k) != o.coeff(k)) return false;
    return true;
  }

  friend bool operator==(const TruncatedLSeries& a, const TruncatedLSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
  }

  /// Degree dilation, cf. LPolynomial::substitute. A series known modulo
  /// L^N determines its image modulo the target variable to the power
  /// N*image_degree (the skipped degrees are identically zero).
  TruncatedLSeries substitute(int image_degree) const {
    if (image_degree < 1) throw InvalidArgument("image_degree must be positive");
    TruncatedLSeries out(order_ * image_degree);
    for (int k = 0; k < order_; ++k)
      out.coeffs_[static_cast<std::size_t>(k) * static_cast<std::size_t>(image_degree)] =
          coeffs_[static_cast<std::size_t>(k)];
    return out;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw InvalidArgument("series order must be nonnegative");
    return static_cast<std::size_t>(order);
  }

  int order_;
  std::vector<Int> coeffs_;
};

/// Inverse of a polynomial with unit constant term, modulo L^order.
/// Throws NotInvertible when the constant term is not +-1.
inline TruncatedLSeries geometric_inverse(const LPolynomial& c, int order) {
  Int c0 = c.coeff(0);
  if (c0 != 1 && c0 != -1)
    throw NotInvertible("constant term is not a unit of Z: " + c0.str());
  TruncatedLSeries out(order);
  std::vector<Int> s(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    Int acc = (k == 0) ? Int(1) : Int(0);
    for (int j = 1; j <= k; ++j) acc -= c.coeff(j) * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * c0;  // c0 is its own inverse
  }
  return TruncatedLSeries(LPolynomial(std::move(s)), order);
}

inline std::string to_string(const TruncatedLSeries& s, std::string_view var = "L") {
  LPolynomial head{std::vector<Int>(s.coeffs())};
  std::ostringstream os;
  if (!head.is_zero()) os << to_string(head, var) << " + ";
  os << "O(" << var << "^" << s.order() << ")";
  return os.str();
}

}  // namespace quotmot

#endif
