#ifndef QUOTMOT_MOTIVES_HPP
#define QUOTMOT_MOTIVES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/lpoly.hpp"
#include "quotmot/lseries.hpp"
#include "quotmot/report.hpp"
#include "quotmot/testhook.hpp"

namespace quotmot {

/// Dimension vector of a flag, finite level (ambient set) or stable level
/// (ambient empty). Conventions d_0 = 0 and, at finite level, d_{l+1} = n.
struct FlagDimensions {
  std::vector<int> dims;
  std::optional<int> ambient;

  static FlagDimensions finite(std::vector<int> d, int n) {
    FlagDimensions f{std::move(d), n};
    f.validate();
    return f;
  }

  static FlagDimensions stable(std::vector<int> d) {
    FlagDimensions f{std::move(d), std::nullopt};
    f.validate();
    return f;
  }

  int steps() const { return static_cast<int>(dims.size()); }
  int top() const { return dims.empty() ? 0 : dims.back(); }

  /// Gaps m_j = d_{j+1} - d_j for j = 0..l-1 (the ambient gap excluded).
  std::vector<int> gaps() const {
    std::vector<int> m;
    int prev = 0;
    for (int d : dims) {
      m.push_back(d - prev);
      prev = d;
    }
    return m;
  }

  void validate() const {
    if (dims.empty()) throw InvalidArgument("flag needs at least one step");
    int prev = 0;
    for (int d : dims) {
      if (d < prev) throw InvalidArgument("flag dimensions must be weakly increasing");
      prev = d;
    }
    if (dims.front() < 0) throw InvalidArgument("flag dimensions must be nonnegative");
    if (ambient && *ambient < top())
      throw InvalidArgument("ambient dimension below top flag step");
  }
};

namespace detail {

/// Pascal-type recursion [Gr(d+1,n+1)] = [Gr(d,n)] + L^{d+1}[Gr(d+1,n)],
/// memoised; the memo is guarded for concurrent callers.
inline LPolynomial gaussian_binomial_memo(int d, int n) {
  if (d < 0 || d > n) return LPolynomial{};
  if (d == 0 || d == n) return LPolynomial(1);
  static std::map<std::pair<int, int>, LPolynomial> memo;
  static std::mutex memo_mutex;
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find({d, n});
    if (it != memo.end()) return it->second;
  }
  LPolynomial value = gaussian_binomial_memo(d - 1, n - 1) +
                      LPolynomial::monomial(1, d) * gaussian_binomial_memo(d, n - 1);
  std::scoped_lock lock(memo_mutex);
  return memo.emplace(std::pair{d, n}, std::move(value)).first->second;
}

inline LPolynomial product_of_cyclotomic_factors(int lo, int hi) {
  // prod_{k=lo}^{hi} (L^k - 1)
  LPolynomial p(1);
  for (int k = lo; k <= hi; ++k)
    p *= LPolynomial::monomial(1, k) - LPolynomial(1);
  return p;
}

}  // namespace detail

/// The Grassmannian motive [Gr(d,n)] as a polynomial in L; zero when d > n.
inline LPolynomial gaussian_binomial(int d, int n) {
  LPolynomial value = detail::gaussian_binomial_memo(d, n);
  if (testhook::on_gaussian_binomial) testhook::on_gaussian_binomial(d, n, value);
  return value;
}

/// Independent route: prod_{k=n-d+1}^{n}(L^k-1) / prod_{k=1}^{d}(L^k-1).
/// Kept free of the recursion (and of the test hooks) so the two can
/// cross-check each other.
inline LPolynomial gaussian_binomial_product(int d, int n) {
  if (d < 0 || d > n) return LPolynomial{};
  return detail::product_of_cyclotomic_factors(n - d + 1, n)
      .divide_exact(detail::product_of_cyclotomic_factors(1, d));
}

/// [Gr(d,infinity)] = prod_{k=1}^{d} 1/(1-L^k), truncated at L^order.
inline TruncatedLSeries grassmannian_infinite(int d, int order) {
  if (d < 0) throw InvalidArgument("d must be nonnegative");
  TruncatedLSeries s = TruncatedLSeries::one(order);
  for (int k = 1; k <= d; ++k)
    s *= geometric_inverse(LPolynomial(1) - LPolynomial::monomial(1, k), order);
  if (testhook::on_grassmannian_infinite) testhook::on_grassmannian_infinite(d, s);
  return s;
}

/// Finite flag motive: prod_{k=1}^{n}(L^k-1) over the product of the same
/// factors for each gap (ambient gap included). The division is exact by
/// construction; an inexact division here would mean a misapplied formula.
inline LPolynomial flag_motive(const FlagDimensions& f) {
  if (!f.ambient) throw InvalidArgument("flag_motive needs a finite level");
  int n = *f.ambient;
  LPolynomial denom(1);
  int prev = 0;
  for (int j = 0; j <= f.steps(); ++j) {
    int next = (j == f.steps()) ? n : f.dims[static_cast<std::size_t>(j)];
    denom *= detail::product_of_cyclotomic_factors(1, next - prev);
    prev = next;
  }
  LPolynomial value =
      detail::product_of_cyclotomic_factors(1, n).divide_exact(denom);
  if (testhook::on_flag_motive) testhook::on_flag_motive(value);
  return value;
}

/// Stable flag motive: prod over gaps of [Gr(m_j,infinity)].
inline TruncatedLSeries flag_motive_infinite(const FlagDimensions& f, int order) {
  TruncatedLSeries s = TruncatedLSeries::one(order);
  for (int m : f.gaps()) s *= grassmannian_infinite(m, order);
  return s;
}

/// Sweeps the L-binomial identity, computing the left side by the Pascal
/// recursion and the right side by the product/division route.
inline VerifyReport verify_lbinomial(int d_max, int n_max) {
  VerifyReport report;
  report.identity = "[Gr(d+1,n+1)] = [Gr(d,n)] + L^{d+1}*[Gr(d+1,n)]";
  {
    std::ostringstream os;
    os << "d <= " << d_max << ", n <= " << n_max;
    report.range = os.str();
  }
  for (int d = 0; d <= d_max; ++d) {
    for (int n = 0; n <= n_max; ++n) {
      LPolynomial lhs = gaussian_binomial(d + 1, n + 1);
      LPolynomial rhs = gaussian_binomial_product(d, n) +
                        LPolynomial::monomial(1, d + 1) * gaussian_binomial_product(d + 1, n);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "(d,n)=(" << d << "," << n << ")";
        report.fail("IdentityViolation", os.str());
      }
    }
  }
  return report;
}

}  // namespace quotmot

#endif
