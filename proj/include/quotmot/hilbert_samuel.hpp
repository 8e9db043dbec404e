#ifndef QUOTMOT_HILBERT_SAMUEL_HPP
#define QUOTMOT_HILBERT_SAMUEL_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quotmot/errors.hpp"

namespace quotmot {

/// Finite string (h(0),...,h(t)) of dimensions of the associated graded
/// module of a finite-length module. Trailing zeros are stripped on
/// construction, so (d) and (d,0) denote the same function. The empty
/// string is the function of the zero module.
class HilbertSamuelFunction {
 public:
  HilbertSamuelFunction() = default;

  explicit HilbertSamuelFunction(std::vector<int> values) : values_(std::move(values)) {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
    for (int v : values_)
      if (v < 0) throw InvalidArgument("Hilbert-Samuel values must be nonnegative");
    if (!values_.empty() && values_.front() < 1)
      throw InvalidArgument("h(0) must be positive for a nonzero module");
  }

  bool empty() const { return values_.empty(); }

  /// The length l(h): largest index with h(t) != 0; -1 for the empty string.
  int length() const { return static_cast<int>(values_.size()) - 1; }

  /// The size |h| = sum of all values.
  int size() const { return std::accumulate(values_.begin(), values_.end(), 0); }

  int value(int i) const {
    return (i >= 0 && i < static_cast<int>(values_.size()))
               ? values_[static_cast<std::size_t>(i)]
               : 0;
  }

  const std::vector<int>& values() const { return values_; }

  /// Constructive admissibility against an ambient (R/m^k)^r with n
  /// variables: h(i) may not exceed r times the dimension of the degree-i
  /// part of R.
  bool admissible(int n, int r) const {
    for (int i = 0; i <= length(); ++i) {
      long long dim_ri = 1;  // binomial(n-1+i, i)
      for (int j = 1; j <= i; ++j) dim_ri = dim_ri * (n - 1 + j) / j;
      if (value(i) > static_cast<long long>(r) * dim_ri) return false;
    }
    return true;
  }

  friend bool operator==(const HilbertSamuelFunction& a, const HilbertSamuelFunction& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const HilbertSamuelFunction& a, const HilbertSamuelFunction& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<int> values_;
};

inline std::string to_string(const HilbertSamuelFunction& h) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i <= h.length(); ++i) {
    if (i) os << ",";
    os << h.value(i);
  }
  os << ")";
  return os.str();
}

}  // namespace quotmot

#endif
