#ifndef QUOTMOT_ORACLE_HPP
#define QUOTMOT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quotmot/errors.hpp"
#include "quotmot/hilbert_samuel.hpp"
#include "quotmot/motives.hpp"
#include "quotmot/quot.hpp"
#include "quotmot/report.hpp"

namespace quotmot::oracle {

/// Prime field F_q; only q in {2,3,5} is supported.
struct PrimeField {
  int q;
  explicit PrimeField(int q_in) : q(q_in) {
    if (q != 2 && q != 3 && q != 5)
      throw InvalidArgument("unsupported field size (must be 2, 3, or 5)");
  }
};

using Row = std::vector<int>;
using Matrix = std::vector<Row>;

namespace detail {

inline int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw InvalidArgument("not invertible mod q");
}

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// removed, so the surviving rows are the canonical basis of the row space.
inline int rref(Matrix& m, int q) {
  int rank = 0;
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int row = rank; row < static_cast<int>(m.size()); ++row)
      if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    int inv = inv_mod(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], q);
    for (int& x : m[static_cast<std::size_t>(rank)]) x = x * inv % q;
    for (int row = 0; row < static_cast<int>(m.size()); ++row) {
      if (row == rank) continue;
      int f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
            (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] +
             (q - f) * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % q;
    }
    ++rank;
  }
  m.resize(static_cast<std::size_t>(rank));
  return rank;
}

/// Reduces v against an RREF basis; the residual is zero iff v lies in the span.
inline Row reduce_against(const Matrix& basis, Row v, int q) {
  for (const Row& b : basis) {
    std::size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size()) continue;
    int f = v[p] % q;
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (q - f) * b[j]) % q;
  }
  return v;
}

inline bool is_zero_row(const Row& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

inline bool contains_subspace(const Matrix& big, const Matrix& small, int q) {
  for (const Row& row : small)
    if (!is_zero_row(reduce_against(big, row, q))) return false;
  return true;
}

inline Row apply_operator(const Matrix& op, const Row& v, int q) {
  Row out(v.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += op[i][j] * v[j];
    out[i] = acc % q;
  }
  return out;
}

/// Solution space of basis * v = 0, returned as an RREF matrix.
inline Matrix nullspace(Matrix basis, int cols, int q) {
  int rank = rref(basis, q);
  std::vector<int> pivot_of_col(static_cast<std::size_t>(cols), -1);
  for (int i = 0; i < rank; ++i) {
    std::size_t p = 0;
    while (basis[static_cast<std::size_t>(i)][p] == 0) ++p;
    pivot_of_col[p] = i;
  }
  Matrix out;
  for (int f = 0; f < cols; ++f) {
    if (pivot_of_col[static_cast<std::size_t>(f)] >= 0) continue;
    Row v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (int c = 0; c < cols; ++c) {
      int i = pivot_of_col[static_cast<std::size_t>(c)];
      if (i < 0) continue;
      int coeff = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
      v[static_cast<std::size_t>(c)] = (q - coeff) % q;
    }
    out.push_back(std::move(v));
  }
  rref(out, q);
  return out;
}

/// Enumerates every d x n matrix in reduced row echelon form over F_q.
/// Visits matrices in a fixed order: pivot-column sets lexicographically,
/// then free entries as a base-q odometer.
template <class Fn>
void for_each_rref(int d, int n, int q, Fn&& fn) {
  if (d < 0 || d > n) return;
  if (d == 0) {
    fn(Matrix{});
    return;
  }
  std::vector<int> pivots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pivots[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    for (int i = 0; i < d; ++i)
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          free_cells.emplace_back(i, j);

    Matrix m(static_cast<std::size_t>(d), Row(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < d; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < free_cells.size(); ++c)
        m[static_cast<std::size_t>(free_cells[c].first)]
         [static_cast<std::size_t>(free_cells[c].second)] = digits[c];
      fn(m);
      std::size_t c = 0;
      while (c < digits.size() && ++digits[c] == q) digits[c++] = 0;
      if (c == digits.size() && !digits.empty()) break;
      if (digits.empty()) break;
    }

    // next pivot combination
    int i = d - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline long long count_rref(int d, int n, int q) {
  // feasibility estimate before enumerating
  long long total = 0;
  std::vector<int> pivots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pivots[static_cast<std::size_t>(i)] = i;
  if (d == 0) return 1;
  if (d > n) return 0;
  while (true) {
    long long free_cells = 0;
    for (int i = 0; i < d; ++i)
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) ++free_cells;
    long long fill = 1;
    for (long long c = 0; c < free_cells; ++c) {
      fill *= q;
      if (fill > 100000000LL) throw InfeasibleSize("echelon fill-in count too large");
    }
    total += fill;
    if (total > 100000000LL) throw InfeasibleSize("subspace count too large");
    int i = d - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

}  // namespace detail

/// Number of d-dimensional subspaces of F_q^n, by explicit enumeration of
/// reduced echelon representatives.
inline long long count_grassmannian_points(int d, int n, int q) {
  PrimeField field(q);
  if (d < 0 || n < 0) throw InvalidArgument("d, n must be nonnegative");
  if (d > n) return 0;
  detail::count_rref(d, n, q);  // feasibility gate
  long long count = 0;
  detail::for_each_rref(d, n, field.q, [&](const Matrix&) { ++count; });
  return count;
}

/// Number of flags with the given dimension vector, by nested enumeration:
/// the top subspace is enumerated in the ambient space, then flags of the
/// remaining dimensions are enumerated inside it (in its basis coordinates).
inline long long count_flag_points(const std::vector<int>& dims, int n, int q) {
  PrimeField field(q);
  FlagDimensions::finite(dims, n);  // validates shape
  std::vector<int> rest(dims.begin(), dims.end() - 1);
  int top = dims.back();
  detail::count_rref(top, n, q);  // feasibility gate
  long long count = 0;
  detail::for_each_rref(top, n, field.q, [&](const Matrix&) {
    count += rest.empty() ? 1 : count_flag_points(rest, top, q);
  });
  return count;
}

/// The ambient module (R/m^k)^r over F_q with its n multiplication
/// operators. Basis: monomials of degree < k ordered by total degree then
/// lexicographic exponents, times the r copies.
struct FiniteModulePresentation {
  int q = 2;
  int dimension = 0;
  int num_vars = 0;
  int rank = 0;
  int truncation = 0;
  std::vector<Matrix> operators;
  std::vector<int> basis_degrees;
};

/// Basis vector of a codimension-d submodule, as canonical RREF rows.
struct SubmoduleWitness {
  Matrix basis;
  int codim = 0;
};

inline FiniteModulePresentation build_ambient(int n, int r, int k, int q) {
  PrimeField field(q);
  if (n < 1 || r < 1 || k < 1) throw InvalidArgument("n, r, k must be positive");

  // monomials of degree < k, ordered by total degree then lex exponents
  std::vector<std::vector<int>> monomials;
  std::vector<int> expo(static_cast<std::size_t>(n), 0);
  for (int deg = 0; deg < k; ++deg) {
    std::vector<std::vector<int>> level;
    std::function<void(int, int)> gen = [&](int var, int remaining) {
      if (var == n - 1) {
        expo[static_cast<std::size_t>(var)] = remaining;
        level.push_back(expo);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        expo[static_cast<std::size_t>(var)] = e;
        gen(var + 1, remaining - e);
      }
    };
    gen(0, deg);
    std::sort(level.begin(), level.end());
    monomials.insert(monomials.end(), level.begin(), level.end());
  }

  int num_monomials = static_cast<int>(monomials.size());
  long long dim = static_cast<long long>(num_monomials) * r;
  if (dim > 24) throw InfeasibleSize("ambient dimension too large for enumeration");

  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < num_monomials; ++i) index_of[monomials[static_cast<std::size_t>(i)]] = i;

  FiniteModulePresentation M;
  M.q = field.q;
  M.dimension = static_cast<int>(dim);
  M.num_vars = n;
  M.rank = r;
  M.truncation = k;
  M.basis_degrees.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < num_monomials; ++i) {
    int deg = 0;
    for (int e : monomials[static_cast<std::size_t>(i)]) deg += e;
    for (int s = 0; s < r; ++s)
      M.basis_degrees[static_cast<std::size_t>(i * r + s)] = deg;
  }

  for (int a = 0; a < n; ++a) {
    Matrix op(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < num_monomials; ++i) {
      std::vector<int> image = monomials[static_cast<std::size_t>(i)];
      ++image[static_cast<std::size_t>(a)];
      auto it = index_of.find(image);
      if (it == index_of.end()) continue;  // degree reached k: truncated away
      for (int s = 0; s < r; ++s)
        op[static_cast<std::size_t>(it->second * r + s)][static_cast<std::size_t>(i * r + s)] = 1;
    }
    M.operators.push_back(std::move(op));
  }
  return M;
}

namespace detail {

/// Adds v (and its closure under the given operators) to an RREF basis.
/// Returns false as soon as the closure exceeds max_dim rows.
inline bool grow_closure(Matrix& basis, const Row& v, const std::vector<Matrix>& ops,
                         int q, int max_dim) {
  std::deque<Row> pending{v};
  while (!pending.empty()) {
    Row u = detail::reduce_against(basis, pending.front(), q);
    pending.pop_front();
    if (detail::is_zero_row(u)) continue;
    if (static_cast<int>(basis.size()) + 1 > max_dim) return false;
    basis.push_back(u);
    rref(basis, q);
    for (const Matrix& op : ops) pending.push_back(apply_operator(op, u, q));
  }
  return true;
}

}  // namespace detail

/// All codimension-d submodules (operator-stable subspaces) of M, as
/// canonical RREF witnesses in deterministic order. Works through the dual:
/// codimension-d submodules of M correspond to d-dimensional subspaces of
/// the dual space stable under the transposed operators, and those are
/// reached by closing generating vectors one at a time.
inline std::vector<SubmoduleWitness> enumerate_submodules(const FiniteModulePresentation& M,
                                                          int codim) {
  if (codim < 0 || codim > M.dimension)
    throw InvalidArgument("codimension out of range");
  long long vectors = 1;
  for (int i = 0; i < M.dimension; ++i) {
    vectors *= M.q;
    if (vectors > 4000000LL) throw InfeasibleSize("dual vector sweep too large");
  }

  std::vector<Matrix> transposed;
  for (const Matrix& op : M.operators) {
    Matrix t(static_cast<std::size_t>(M.dimension), Row(static_cast<std::size_t>(M.dimension), 0));
    for (int i = 0; i < M.dimension; ++i)
      for (int j = 0; j < M.dimension; ++j)
        t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            op[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    transposed.push_back(std::move(t));
  }

  std::set<Matrix> visited;
  std::deque<Matrix> queue;
  visited.insert(Matrix{});
  queue.push_back(Matrix{});

  std::vector<Matrix> found;
  Row v(static_cast<std::size_t>(M.dimension), 0);
  while (!queue.empty()) {
    Matrix w = queue.front();
    queue.pop_front();
    if (static_cast<int>(w.size()) == codim) {
      found.push_back(w);
      continue;
    }
    // extend by every vector of the dual space
    std::fill(v.begin(), v.end(), 0);
    while (true) {
      std::size_t c = 0;
      while (c < v.size() && ++v[c] == M.q) v[c++] = 0;
      if (c == v.size()) break;
      if (detail::is_zero_row(detail::reduce_against(w, v, M.q))) continue;
      Matrix grown = w;
      if (!detail::grow_closure(grown, v, transposed, M.q, codim)) continue;
      if (visited.insert(grown).second) queue.push_back(grown);
    }
  }

  std::vector<SubmoduleWitness> out;
  for (const Matrix& w : found) {
    Matrix basis = w.empty() ? [&] {
      Matrix id(static_cast<std::size_t>(M.dimension),
                Row(static_cast<std::size_t>(M.dimension), 0));
      for (int i = 0; i < M.dimension; ++i)
        id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      return id;
    }() : detail::nullspace(w, M.dimension, M.q);
    out.push_back({std::move(basis), codim});
  }
  std::sort(out.begin(), out.end(),
            [](const SubmoduleWitness& a, const SubmoduleWitness& b) { return a.basis < b.basis; });
  return out;
}

/// Reference enumerator: sweeps every reduced-echelon subspace of the given
/// codimension and keeps the operator-stable ones. Exponentially slower than
/// enumerate_submodules; retained as an independent cross-check.
inline std::vector<SubmoduleWitness> enumerate_submodules_bruteforce(
    const FiniteModulePresentation& M, int codim) {
  int dim = M.dimension - codim;
  detail::count_rref(dim, M.dimension, M.q);
  std::vector<SubmoduleWitness> out;
  detail::for_each_rref(dim, M.dimension, M.q, [&](const Matrix& basis) {
    for (const Matrix& op : M.operators)
      for (const Row& row : basis)
        if (!detail::is_zero_row(
                detail::reduce_against(basis, detail::apply_operator(op, row, M.q), M.q)))
          return;
    out.push_back({basis, codim});
  });
  std::sort(out.begin(), out.end(),
            [](const SubmoduleWitness& a, const SubmoduleWitness& b) { return a.basis < b.basis; });
  return out;
}

/// Hilbert-Samuel function of the quotient T = M/K: difference sequence of
/// the dimensions of the images of m^i in T.
inline HilbertSamuelFunction hs_function_of(const SubmoduleWitness& w,
                                            const FiniteModulePresentation& M) {
  std::vector<int> filtration;  // dim of m^i T for i = 0..k
  for (int i = 0; i <= M.truncation; ++i) {
    Matrix stacked = w.basis;
    for (int b = 0; b < M.dimension; ++b) {
      if (M.basis_degrees[static_cast<std::size_t>(b)] < i) continue;
      Row unit(static_cast<std::size_t>(M.dimension), 0);
      unit[static_cast<std::size_t>(b)] = 1;
      stacked.push_back(std::move(unit));
    }
    int rank = detail::rref(stacked, M.q);
    filtration.push_back(rank - (M.dimension - w.codim));
  }
  std::vector<int> h;
  for (std::size_t i = 0; i + 1 < filtration.size(); ++i)
    h.push_back(filtration[i] - filtration[i + 1]);
  if (!filtration.empty()) h.push_back(filtration.back());
  return HilbertSamuelFunction(std::move(h));
}

/// Points of the punctual Quot scheme over F_q: codimension-d submodules of
/// (R/m^d)^r.
inline long long count_punctual_quot(int d, int r, int n, int q) {
  if (d < 1) throw InvalidArgument("d must be positive");
  FiniteModulePresentation M = build_ambient(n, r, d, q);
  return static_cast<long long>(enumerate_submodules(M, d).size());
}

/// Points of one Hilbert-Samuel stratum over F_q.
inline long long count_stratum(const HilbertSamuelFunction& h, int r, int n, int q) {
  if (h.empty()) throw InvalidArgument("empty Hilbert-Samuel function");
  FiniteModulePresentation M = build_ambient(n, r, h.length() + 1, q);
  long long count = 0;
  for (const SubmoduleWitness& w : enumerate_submodules(M, h.size()))
    if (hs_function_of(w, M) == h) ++count;
  return count;
}

/// Full stratum battery at (d,r,n,q): linear strata match their evaluated
/// motives exactly, nonlinear strata satisfy the divisibility bound, and the
/// strata counts add up to the punctual Quot count.
inline VerifyReport verify_stratum_motives(int d, int r, int n, int q) {
  VerifyReport report;
  report.identity = "stratum counts vs evaluated motives and divisibility";
  {
    std::ostringstream os;
    os << "(d,r,n,q)=(" << d << "," << r << "," << n << "," << q << ")";
    report.range = os.str();
  }
  FiniteModulePresentation M = build_ambient(n, r, d, q);
  std::map<HilbertSamuelFunction, long long> counts;
  for (const SubmoduleWitness& w : enumerate_submodules(M, d)) ++counts[hs_function_of(w, M)];

  long long total = 0;
  for (const auto& [h, count] : counts) {
    total += count;
    if (h.length() < 2) {
      Int expected = stratum_motive(h, r, n).eval(q);
      if (expected != count)
        report.fail("OracleMismatch",
                    "linear stratum h=" + to_string(h) + ": count " + std::to_string(count) +
                        " vs motive " + expected.str());
    } else {
      Int modulus = 1;
      int e = nonlinear_divisibility_exponent(h, r, n);
      for (int i = 0; i < e; ++i) modulus *= q;
      if (Int(count) % modulus != 0)
        report.fail("OracleMismatch",
                    "nonlinear stratum h=" + to_string(h) + ": count " + std::to_string(count) +
                        " not divisible by q^" + std::to_string(e));
    }
  }
  for (const HilbertSamuelFunction& h : enumerate_linear_hs(d, r, n)) {
    if (counts.count(h)) continue;
    Int expected = stratum_motive(h, r, n).eval(q);
    if (expected != 0)
      report.fail("OracleMismatch", "linear stratum h=" + to_string(h) + " missing from oracle");
  }
  long long quot = count_punctual_quot(d, r, n, q);
  if (total != quot)
    report.fail("OracleMismatch", "strata total " + std::to_string(total) +
                                      " vs punctual Quot count " + std::to_string(quot));
  return report;
}

/// Chains of punctual subschemes Z_1 c ... c Z_l with colengths d_i + 1,
/// counted as chains of stable subspaces K_l c ... c K_1 of the rank-1
/// ambient at truncation d_l + 1.
inline long long count_punctual_nested(const std::vector<int>& dims, int n, int q) {
  if (dims.empty()) throw InvalidArgument("dims must be nonempty");
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] < dims[i - 1]) throw InvalidArgument("dims must be weakly increasing");
  if (dims.front() < 0) throw InvalidArgument("dims must be nonnegative");

  FiniteModulePresentation M = build_ambient(n, 1, dims.back() + 1, q);
  std::map<int, std::vector<SubmoduleWitness>> by_codim;
  for (int d : dims)
    if (!by_codim.count(d + 1)) by_codim[d + 1] = enumerate_submodules(M, d + 1);

  std::function<long long(std::size_t, const Matrix*)> chains =
      [&](std::size_t idx, const Matrix* parent) -> long long {
    if (idx == dims.size()) return 1;
    long long total = 0;
    for (const SubmoduleWitness& w : by_codim[dims[idx] + 1]) {
      if (parent && !detail::contains_subspace(*parent, w.basis, q)) continue;
      total += chains(idx + 1, &w.basis);
    }
    return total;
  };
  return chains(0, nullptr);
}

}  // namespace quotmot::oracle

#endif
