#include <catch2/catch_amalgamated.hpp>

#include <quotmot/motives.hpp>
#include <quotmot/testhook.hpp>

using namespace quotmot;

namespace {

struct HookGuard {
  ~HookGuard() { testhook::clear_all(); }
};

LPolynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Int> v;
  for (int x : coeffs) v.emplace_back(x);
  return LPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("small Grassmannian motives") {
  CHECK(gaussian_binomial(0, 0) == LPolynomial(1));
  CHECK(gaussian_binomial(0, 5) == LPolynomial(1));
  CHECK(gaussian_binomial(5, 5) == LPolynomial(1));
  CHECK(gaussian_binomial(3, 2) == LPolynomial{});
  CHECK(gaussian_binomial(1, 3) == poly({1, 1, 1}));
  CHECK(gaussian_binomial(2, 4) == poly({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(-1, 4) == LPolynomial{});
}

TEST_CASE("recursion and product routes agree on a sweep") {
  for (int n = 0; n <= 12; ++n)
    for (int d = 0; d <= n; ++d)
      CHECK(gaussian_binomial(d, n) == gaussian_binomial_product(d, n));
}

TEST_CASE("Grassmannian motives are symmetric, positive, of degree d(n-d)") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 0; d <= n; ++d) {
      LPolynomial g = gaussian_binomial(d, n);
      int top = d * (n - d);
      CHECK(g.degree() == top);
      for (int k = 0; k <= top; ++k) {
        CHECK(g.coeff(k) > 0);
        CHECK(g.coeff(k) == g.coeff(top - k));  // Poincare duality
      }
    }
  }
}

TEST_CASE("column symmetry [Gr(d,n)] = [Gr(n-d,n)]") {
  for (int n = 0; n <= 10; ++n)
    for (int d = 0; d <= n; ++d)
      CHECK(gaussian_binomial(d, n) == gaussian_binomial(n - d, n));
}

TEST_CASE("finite Grassmannians stabilise to the infinite motive") {
  for (int d = 0; d <= 5; ++d) {
    TruncatedLSeries stable = grassmannian_infinite(d, 10);
    for (int n = d + 10; n <= d + 12; ++n)
      CHECK(TruncatedLSeries(gaussian_binomial(d, n), 10).congruent(stable));
  }
}

TEST_CASE("infinite Grassmannian base cases") {
  CHECK(grassmannian_infinite(0, 6) == TruncatedLSeries::one(6));
  // d=1: 1/(1-L)
  TruncatedLSeries g1 = grassmannian_infinite(1, 6);
  for (int k = 0; k < 6; ++k) CHECK(g1.coeff(k) == 1);
  // d=2 coefficients count partitions into parts of size <= 2
  TruncatedLSeries g2 = grassmannian_infinite(2, 7);
  CHECK(g2.coeff(4) == 3);
  CHECK(g2.coeff(5) == 3);
  CHECK(g2.coeff(6) == 4);
}

TEST_CASE("flag motives via iterated Grassmannian fibrations") {
  // [Fl(d_1,d_2,n)] = [Gr(d_2,n)] * [Gr(d_1,d_2)]
  for (int n = 1; n <= 6; ++n)
    for (int d2 = 0; d2 <= n; ++d2)
      for (int d1 = 0; d1 <= d2; ++d1)
        CHECK(flag_motive(FlagDimensions::finite({d1, d2}, n)) ==
              gaussian_binomial(d2, n) * gaussian_binomial(d1, d2));
}

TEST_CASE("one-step flags are Grassmannians") {
  for (int n = 0; n <= 8; ++n)
    for (int d = 0; d <= n; ++d)
      CHECK(flag_motive(FlagDimensions::finite({d}, n)) == gaussian_binomial(d, n));
}

TEST_CASE("full flag motive evaluates to the q-factorial") {
  LPolynomial full = flag_motive(FlagDimensions::finite({1, 2}, 3));
  CHECK(full.eval(2) == 21);
  // [Fl(1,2,3,4)](q=2) = (1+2)(1+2+4)(1+2+4+8) = 315
  CHECK(flag_motive(FlagDimensions::finite({1, 2, 3}, 4)).eval(2) == 315);
}

TEST_CASE("stable flag motive is the product over gaps") {
  FlagDimensions f = FlagDimensions::stable({1, 3});
  TruncatedLSeries expected = grassmannian_infinite(1, 8) * grassmannian_infinite(2, 8);
  CHECK(flag_motive_infinite(f, 8).congruent(expected));
  CHECK(f.gaps() == std::vector<int>{1, 2});
  CHECK(FlagDimensions::finite({1, 3}, 5).gaps() == std::vector<int>{1, 2});
}

TEST_CASE("flag dimension validation") {
  CHECK_THROWS_AS(FlagDimensions::finite({2, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(FlagDimensions::finite({1, 4}, 3), InvalidArgument);
  CHECK_THROWS_AS(FlagDimensions::stable({}), InvalidArgument);
  CHECK_THROWS_AS(flag_motive(FlagDimensions::stable({1, 2})), InvalidArgument);
}

TEST_CASE("binomial recursion sweep passes clean and fails perturbed") {
  CHECK(verify_lbinomial(8, 8).passed());
  HookGuard guard;
  testhook::inject_global_perturbation();
  VerifyReport bad = verify_lbinomial(8, 8);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.failures.empty());
  CHECK(bad.failures.front().check == "IdentityViolation");
}
