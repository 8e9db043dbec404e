#ifndef QUOTMOT_TESTHOOK_HPP
#define QUOTMOT_TESTHOOK_HPP

#include <functional>

#include "quotmot/lpoly.hpp"
#include "quotmot/lseries.hpp"

namespace quotmot::testhook {

// Fault-injection points for negative-control tests. When set, each hook may
// rewrite the value a formula is about to return. They are never touched by
// the CLI's documented surface and default to no-ops.

inline std::function<void(int d, int n, LPolynomial&)> on_gaussian_binomial;
inline std::function<void(int d, TruncatedLSeries&)> on_grassmannian_infinite;
inline std::function<void(LPolynomial&)> on_flag_motive;
inline std::function<void(TruncatedLSeries&)> on_hilbert_series;

inline void clear_all() {
  on_gaussian_binomial = nullptr;
  on_grassmannian_infinite = nullptr;
  on_flag_motive = nullptr;
  on_hilbert_series = nullptr;
}

/// Flip one coefficient everywhere; used as the canonical corrupted build.
inline void inject_global_perturbation() {
  on_gaussian_binomial = [](int, int, LPolynomial& p) {
    p += LPolynomial::lefschetz();
  };
  on_grassmannian_infinite = [](int, TruncatedLSeries& s) {
    s += TruncatedLSeries(LPolynomial::lefschetz(), s.order());
  };
  on_flag_motive = [](LPolynomial& p) { p += LPolynomial::lefschetz(); };
  on_hilbert_series = [](TruncatedLSeries& s) {
    s += TruncatedLSeries(LPolynomial::lefschetz(), s.order());
  };
}

}  // namespace quotmot::testhook

#endif
