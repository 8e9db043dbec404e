#ifndef QUOTMOT_MSERIES_HPP
#define QUOTMOT_MSERIES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/lseries.hpp"

namespace quotmot {

/// Multivariate series in t_1..t_l with TruncatedLSeries coefficients,
/// truncated in total t-degree: only exponent tuples with sum < bound are
/// stored, and no stored coefficient is identically zero.
class MultiTruncatedSeries {
 public:
  using Exponents = std::vector<int>;

  MultiTruncatedSeries(int num_vars, int total_degree_bound, int l_order)
      : num_vars_(num_vars), bound_(total_degree_bound), l_order_(l_order) {
    if (num_vars < 1) throw InvalidArgument("num_vars must be at least 1");
    if (total_degree_bound < 0 || l_order < 0)
      throw InvalidArgument("bounds must be nonnegative");
  }

  static MultiTruncatedSeries one(int num_vars, int total_degree_bound, int l_order) {
    MultiTruncatedSeries s(num_vars, total_degree_bound, l_order);
    s.add_term(Exponents(static_cast<std::size_t>(num_vars), 0),
               TruncatedLSeries::one(l_order));
    return s;
  }

  int num_vars() const { return num_vars_; }
  int total_degree_bound() const { return bound_; }
  int l_order() const { return l_order_; }
  const std::map<Exponents, TruncatedLSeries>& terms() const { return terms_; }

  TruncatedLSeries coefficient(const Exponents& e) const {
    check_exponents(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? TruncatedLSeries(l_order_) : it->second;
  }

  /// Accumulates c*t^e, dropping terms at or beyond the degree bound.
  void add_term(const Exponents& e, const TruncatedLSeries& c) {
    check_exponents(e);
    if (std::accumulate(e.begin(), e.end(), 0) >= bound_) return;
    TruncatedLSeries v = c.reduce(l_order_);
    auto it = terms_.find(e);
    if (it != terms_.end()) v = v + it->second;
    if (v.is_zero())
      terms_.erase(e);
    else
      terms_.insert_or_assign(e, std::move(v));
  }

  friend MultiTruncatedSeries operator+(const MultiTruncatedSeries& a,
                                        const MultiTruncatedSeries& b) {
    check_compatible(a, b);
    MultiTruncatedSeries out(a.num_vars_, std::min(a.bound_, b.bound_),
                             std::min(a.l_order_, b.l_order_));
    for (const auto& [e, c] : a.terms_) out.add_term(e, c);
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend MultiTruncatedSeries operator*(const MultiTruncatedSeries& a,
                                        const MultiTruncatedSeries& b) {
    check_compatible(a, b);
    MultiTruncatedSeries out(a.num_vars_, std::min(a.bound_, b.bound_),
                             std::min(a.l_order_, b.l_order_));
    Exponents e(static_cast<std::size_t>(a.num_vars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (std::accumulate(e.begin(), e.end(), 0) >= out.bound_) continue;
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MultiTruncatedSeries& operator*=(const MultiTruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const MultiTruncatedSeries& a, const MultiTruncatedSeries& b) {
    return a.num_vars_ == b.num_vars_ && a.bound_ == b.bound_ &&
           a.l_order_ == b.l_order_ && a.terms_ == b.terms_;
  }

 private:
  void check_exponents(const Exponents& e) const {
    if (static_cast<int>(e.size()) != num_vars_)
      throw VariableCountMismatch("exponent tuple has wrong arity");
    for (int v : e)
      if (v < 0) throw InvalidArgument("negative exponent");
  }

  static void check_compatible(const MultiTruncatedSeries& a, const MultiTruncatedSeries& b) {
    if (a.num_vars_ != b.num_vars_)
      throw VariableCountMismatch("operands have different variable counts");
  }

  int num_vars_;
  int bound_;
  int l_order_;
  std::map<Exponents, TruncatedLSeries> terms_;
};

inline std::string to_string(const MultiTruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms()) {
    os << "(" << to_string(c) << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*t" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
    os << "\n";
  }
  os << "+ O(t^" << s.total_degree_bound() << ")";
  return os.str();
}

}  // namespace quotmot

#endif
