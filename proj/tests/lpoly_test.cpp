#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <quotmot/lpoly.hpp>
#include <quotmot/lseries.hpp>

using namespace quotmot;

namespace {

LPolynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Int> v;
  for (int c : coeffs) v.emplace_back(c);
  return LPolynomial(std::move(v));
}

LPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  std::vector<Int> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (Int& c : v) c = coeff(rng);
  return LPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic on known products") {
  CHECK(poly({1, 1}) * poly({1, 1, 1}) == poly({1, 2, 2, 1}));
  CHECK(poly({1, 2, 3}) * LPolynomial{} == LPolynomial{});
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
}

TEST_CASE("degree is additive for nonzero factors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LPolynomial a = random_poly(rng), b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    LPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == LPolynomial{});
  }
}

TEST_CASE("evaluation commutes with ring operations") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> point(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    LPolynomial a = random_poly(rng), b = random_poly(rng);
    Int v = point(rng);
    CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
    CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
  }
}

TEST_CASE("exact division recovers known quotients") {
  CHECK(poly({1, 0, -1}).divide_exact(poly({1, -1})) == poly({1, 1}));
  LPolynomial numerator = (LPolynomial::monomial(1, 4) - 1) * (LPolynomial::monomial(1, 3) - 1);
  LPolynomial denominator = (LPolynomial::monomial(1, 2) - 1) * (LPolynomial::monomial(1, 1) - 1);
  LPolynomial quotient = numerator.divide_exact(denominator);
  CHECK(quotient == poly({1, 1, 2, 1, 1}));
  CHECK(quotient.eval(2) == 35);  // subspace count over F_2
}

TEST_CASE("inexact division is reported") {
  CHECK_THROWS_AS(poly({1, 1}).divide_exact(poly({1, 0, 1})), InexactDivision);
  CHECK_THROWS_AS(poly({1, 1, 1}).divide_exact(poly({2, 2})), InexactDivision);
  CHECK_THROWS_AS(poly({1}).divide_exact(LPolynomial{}), InexactDivision);
}

TEST_CASE("division round-trips random products") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    LPolynomial a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("divisibility by powers of L") {
  CHECK(poly({0, 0, 1, 1}).divisible_by_power(2));
  CHECK_FALSE(poly({1, 1}).divisible_by_power(1));
  CHECK(poly({0, 1, 1}).divisible_by_power(1));
  CHECK_FALSE(poly({0, 1, 1}).divisible_by_power(2));
  CHECK(LPolynomial{}.divisible_by_power(10));
}

TEST_CASE("geometric inverse against known expansions") {
  CHECK(geometric_inverse(poly({1, -1}), 4) == TruncatedLSeries(poly({1, 1, 1, 1}), 4));
  CHECK(geometric_inverse(poly({1}), 5) == TruncatedLSeries(poly({1}), 5));
  CHECK(geometric_inverse(poly({1, 0, -1}), 5) == TruncatedLSeries(poly({1, 0, 1, 0, 1}), 5));
  CHECK_THROWS_AS(geometric_inverse(poly({2, 1}), 4), NotInvertible);
  CHECK_THROWS_AS(geometric_inverse(LPolynomial{}, 4), NotInvertible);
}

TEST_CASE("geometric inverse multiplies back to one") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    LPolynomial c = random_poly(rng) * LPolynomial::lefschetz() + LPolynomial(1);
    int order = 1 + trial % 16;
    TruncatedLSeries s = geometric_inverse(c, order);
    CHECK((s * c).congruent(TruncatedLSeries::one(order)));
  }
}

TEST_CASE("truncation is a ring homomorphism") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    LPolynomial a = random_poly(rng), b = random_poly(rng);
    int order = 1 + trial % 8;
    TruncatedLSeries lhs(a * b, order);
    TruncatedLSeries rhs = TruncatedLSeries(a, order) * TruncatedLSeries(b, order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("operands of different orders combine at the minimum") {
  TruncatedLSeries a(poly({1, 1, 1, 1}), 4);
  TruncatedLSeries b(poly({1, 2}), 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a * b).coeff(1) == 3);
}

TEST_CASE("degree dilation") {
  CHECK(poly({1, 1}).substitute(2) == poly({1, 0, 1}));
  CHECK(LPolynomial{}.substitute(3) == LPolynomial{});
  CHECK(poly({1, 1, 2, 1, 1}).substitute(2) == poly({1, 0, 1, 0, 2, 0, 1, 0, 1}));
}

TEST_CASE("canonical rendering") {
  CHECK(to_string(poly({1, 1, 2, 1, 1})) == "1 + L + 2*L^2 + L^3 + L^4");
  CHECK(to_string(poly({1, 0, -1})) == "1 - L^2");
  CHECK(to_string(LPolynomial{}) == "0");
  CHECK(to_string(poly({-2, 3})) == "-2 + 3*L");
  CHECK(to_string(poly({1, 0, 1}), "z") == "1 + z^2");
  CHECK(to_string(TruncatedLSeries(poly({1, 1, 1, 1}), 4)) == "1 + L + L^2 + L^3 + O(L^4)");
  CHECK(to_string(TruncatedLSeries(4)) == "O(L^4)");
}
