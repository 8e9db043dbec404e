#ifndef QUOTMOT_NESTED_HPP
#define QUOTMOT_NESTED_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/lseries.hpp"
#include "quotmot/motives.hpp"
#include "quotmot/mseries.hpp"
#include "quotmot/oracle.hpp"
#include "quotmot/report.hpp"

namespace quotmot {

/// Exponent of the congruence modulus: the punctual nested Hilbert scheme
/// motive agrees with the flag motive modulo L^{n - d_l + 1}.
inline int nested_congruence_modulus(const FlagDimensions& f, int n) {
  if (f.top() > n) throw InvalidArgument("top flag step exceeds ambient dimension");
  return n - f.top() + 1;
}

/// Generating function of stable nested punctual Hilbert motives:
/// prod_{j=0}^{l-1} prod_{i>=0} 1/(1 - L^i t_{j+1}...t_l), truncated in total
/// t-degree and L-order. Factors with i >= order are 1 at working precision.
inline MultiTruncatedSeries nested_generating_function(int num_steps, int t_bound, int order) {
  if (num_steps < 1) throw InvalidArgument("number of steps must be positive");
  MultiTruncatedSeries result = MultiTruncatedSeries::one(num_steps, t_bound, order);
  for (int j = 0; j < num_steps; ++j) {
    int q_degree = num_steps - j;  // total t-degree of q_j = t_{j+1}...t_l
    for (int i = 0; i < order; ++i) {
      // 1/(1 - L^i q_j) = sum_m L^{im} q_j^m within both truncations
      MultiTruncatedSeries factor(num_steps, t_bound, order);
      for (int m = 0; m * q_degree < t_bound; ++m) {
        if (i > 0 && static_cast<long long>(i) * m >= order) break;
        std::vector<int> expo(static_cast<std::size_t>(num_steps), 0);
        for (int v = j; v < num_steps; ++v) expo[static_cast<std::size_t>(v)] = m;
        factor.add_term(expo, TruncatedLSeries(LPolynomial::monomial(1, i * m), order));
      }
      result *= factor;
    }
  }
  return result;
}

/// Expands sum over weakly increasing dimension tuples of the stable flag
/// motive times the matching t-monomial, and compares against the closed
/// product form coefficient by coefficient.
inline VerifyReport verify_nested_gf(int num_steps, int t_bound, int order) {
  VerifyReport report;
  report.identity =
      "sum [Fl(d_1..d_l,inf)] t^d = prod_j prod_i 1/(1 - L^i t_{j+1}..t_l)";
  {
    std::ostringstream os;
    os << "l=" << num_steps << ", total t-degree < " << t_bound << ", mod L^" << order;
    report.range = os.str();
  }

  MultiTruncatedSeries expected(num_steps, t_bound, order);
  std::vector<int> dims(static_cast<std::size_t>(num_steps), 0);
  std::function<void(int, int, int)> sweep = [&](int idx, int lo, int used) {
    if (idx == num_steps) {
      TruncatedLSeries motive =
          flag_motive_infinite(FlagDimensions::stable(dims), order);
      expected.add_term(dims, motive);
      return;
    }
    for (int d = lo; used + d * (num_steps - idx) < t_bound; ++d) {
      dims[static_cast<std::size_t>(idx)] = d;
      sweep(idx + 1, d, used + d);
    }
  };
  sweep(0, 0, 0);

  MultiTruncatedSeries product = nested_generating_function(num_steps, t_bound, order);
  if (!(expected == product)) {
    // locate a witness exponent for the report
    for (const auto& [e, c] : expected.terms()) {
      if (product.coefficient(e) == c) continue;
      std::ostringstream os;
      os << "exponent (";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << ")";
      report.fail("IdentityViolation", os.str());
      return report;
    }
    for (const auto& [e, c] : product.terms()) {
      if (expected.coefficient(e) == c) continue;
      std::ostringstream os;
      os << "exponent (";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << ")";
      report.fail("IdentityViolation", os.str());
      return report;
    }
    report.fail("IdentityViolation", "series metadata mismatch");
  }
  return report;
}

/// Oracle check of the nested congruence: the chain count over F_q must
/// agree with the evaluated flag motive modulo q^{n - d_l + 1}.
inline VerifyReport verify_nested_congruence(const std::vector<int>& dims, int n, int q) {
  FlagDimensions f = FlagDimensions::finite(dims, n);
  VerifyReport report;
  report.identity = "#Hilb^{d+1}(A^n)_0(F_q) = #Fl(d,n)(F_q) mod q^{n-d_l+1}";
  {
    std::ostringstream os;
    os << "dims=(";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << "), n=" << n << ", q=" << q;
    report.range = os.str();
  }
  long long count = oracle::count_punctual_nested(dims, n, q);
  Int flag = flag_motive(f).eval(q);
  Int modulus = 1;
  for (int i = 0; i < nested_congruence_modulus(f, n); ++i) modulus *= q;
  Int diff = (Int(count) - flag) % modulus;
  if (diff != 0) {
    std::ostringstream os;
    os << "count " << count << " vs motive " << flag.str() << " mod q^"
       << nested_congruence_modulus(f, n);
    report.fail("CongruenceViolation", os.str());
  }
  return report;
}

}  // namespace quotmot

#endif
