#ifndef QUOTMOT_QUOT_HPP
#define QUOTMOT_QUOT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/hilbert_samuel.hpp"
#include "quotmot/lpoly.hpp"
#include "quotmot/lseries.hpp"
#include "quotmot/motives.hpp"
#include "quotmot/report.hpp"

namespace quotmot {

/// All Hilbert-Samuel functions of size d and length < 2 whose stratum in
/// Quot^d(O^r on A^n)_0 is nonempty: h = (i, d-i) with i <= min(d,r) and
/// d-i <= i*n.
inline std::vector<HilbertSamuelFunction> enumerate_linear_hs(int d, int r, int n) {
  if (d < 1 || r < 1 || n < 1) throw InvalidArgument("d, r, n must be positive");
  std::vector<HilbertSamuelFunction> out;
  for (int i = 1; i <= d; ++i) {
    if (i > r) continue;             // Gr(i,r) empty
    if (d - i > i * n) continue;     // Gr(d-i, i*n) empty
    out.emplace_back(std::vector<int>{i, d - i});
  }
  return out;
}

/// Motive of one linear Hilbert-Samuel stratum:
/// [Gr(h(0),r)] * [Gr(h(1),h(0)n)] * L^{h(1)(r-h(0))}.
inline LPolynomial stratum_motive(const HilbertSamuelFunction& h, int r, int n) {
  if (h.length() >= 2)
    throw LengthTooLarge("no closed stratum formula for length >= 2");
  if (h.empty()) return LPolynomial(1);
  int h0 = h.value(0), h1 = h.value(1);
  if (h0 > r || h1 > h0 * n) return LPolynomial{};  // empty stratum
  return gaussian_binomial(h0, r) * gaussian_binomial(h1, h0 * n) *
         LPolynomial::monomial(1, h1 * (r - h0));
}

/// Motive of the linear locus of the punctual Quot scheme:
/// sum_{i=1}^{d} [Gr(i,r)] [Gr(d-i,in)] L^{(d-i)(r-i)}.
inline LPolynomial lquot_motive(int d, int r, int n) {
  if (d < 1 || r < 1 || n < 1) throw InvalidArgument("d, r, n must be positive");
  LPolynomial sum;
  for (int i = 1; i <= d; ++i) {
    if (i > r || d - i > i * n) continue;  // empty Grassmannian factor
    sum += gaussian_binomial(i, r) * gaussian_binomial(d - i, i * n) *
           LPolynomial::monomial(1, (d - i) * (r - i));
  }
  return sum;
}

/// Left side R(r,d) of the preliminary identity:
/// sum_{i=1}^{d} (prod_{k=d-i+1}^{d-1}(1-L^k)) [Gr(i,r)] L^{(d-i)(r-i)}.
/// The empty product at i=1 is 1.
inline LPolynomial prelim_lhs(int r, int d) {
  if (r < 1 || d < 1) throw InvalidArgument("r, d must be positive");
  LPolynomial sum;
  for (int i = 1; i <= d; ++i) {
    if (i > r) continue;  // [Gr(i,r)] = 0
    LPolynomial p(1);
    for (int k = d - i + 1; k <= d - 1; ++k)
      p *= LPolynomial(1) - LPolynomial::monomial(1, k);
    sum += p * gaussian_binomial(i, r) * LPolynomial::monomial(1, (d - i) * (r - i));
  }
  return sum;
}

/// Checks R(r,d) = sum_{k=0}^{r-1} L^{dk} plus the step identity
/// R(r+1,d) - R(r,d) = L^{dr} over the full sweep.
inline VerifyReport verify_prelim(int r_max, int d_max) {
  VerifyReport report;
  report.identity = "R(r,d) = sum_{k=0}^{r-1} L^{dk}";
  {
    std::ostringstream os;
    os << "1 <= r <= " << r_max << ", 1 <= d <= " << d_max;
    report.range = os.str();
  }
  for (int d = 1; d <= d_max; ++d) {
    for (int r = 1; r <= r_max; ++r) {
      LPolynomial rhs;
      for (int k = 0; k < r; ++k) rhs += LPolynomial::monomial(1, d * k);
      LPolynomial lhs = prelim_lhs(r, d);
      std::ostringstream witness;
      witness << "(r,d)=(" << r << "," << d << ")";
      if (!(lhs == rhs)) report.fail("IdentityViolation", witness.str());
      LPolynomial step = prelim_lhs(r + 1, d) - lhs;
      if (!(step == LPolynomial::monomial(1, d * r)))
        report.fail("IdentityViolation(step)", witness.str());
    }
  }
  return report;
}

/// Stabilised punctual Quot motive: [Gr(d-1,infinity)] * sum_{i=0}^{r-1} L^{di}.
inline TruncatedLSeries quot_infinity_motive(int d, int r, int order) {
  if (d < 1 || r < 1) throw InvalidArgument("d, r must be positive");
  LPolynomial finite_sum;
  for (int i = 0; i < r; ++i) finite_sum += LPolynomial::monomial(1, d * i);
  return grassmannian_infinite(d - 1, order) * finite_sum;
}

/// Compares the termwise limit sum_i [Gr(i,r)][Gr(d-i,infinity)]L^{(d-i)(r-i)}
/// against the closed form, modulo L^order.
inline VerifyReport verify_theorem_A(int d_max, int r_max, int order) {
  VerifyReport report;
  report.identity =
      "sum_i [Gr(i,r)][Gr(d-i,inf)]L^{(d-i)(r-i)} = [Gr(d-1,inf)]*sum_i L^{di}";
  {
    std::ostringstream os;
    os << "d <= " << d_max << ", r <= " << r_max << ", mod L^" << order;
    report.range = os.str();
  }
  for (int d = 1; d <= d_max; ++d) {
    for (int r = 1; r <= r_max; ++r) {
      TruncatedLSeries lhs(order);
      for (int i = 1; i <= d; ++i) {
        if (i > r) continue;  // [Gr(i,r)] = 0
        lhs += grassmannian_infinite(d - i, order) * (gaussian_binomial(i, r) *
               LPolynomial::monomial(1, (d - i) * (r - i)));
      }
      if (!lhs.congruent(quot_infinity_motive(d, r, order))) {
        std::ostringstream os;
        os << "(d,r)=(" << d << "," << r << ")";
        report.fail("IdentityViolation", os.str());
      }
    }
  }
  return report;
}

/// Exponent of L dividing the motive of a nonlinear stratum:
/// (r - h(0) + h(0)n - h(1)) * h(t), valid for length >= 2.
inline int nonlinear_divisibility_exponent(const HilbertSamuelFunction& h, int r, int n) {
  if (h.length() < 2)
    throw LengthTooSmall("divisibility exponent applies to length >= 2 only");
  return (r - h.value(0) + h.value(0) * n - h.value(1)) * h.value(h.length());
}

}  // namespace quotmot

#endif
