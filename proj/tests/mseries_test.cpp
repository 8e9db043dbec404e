#include <catch2/catch_amalgamated.hpp>

#include <quotmot/lpoly.hpp>
#include <quotmot/lseries.hpp>
#include <quotmot/mseries.hpp>

using namespace quotmot;

namespace {

TruncatedLSeries c(std::initializer_list<int> coeffs, int order) {
  std::vector<Int> v;
  for (int x : coeffs) v.emplace_back(x);
  return TruncatedLSeries(LPolynomial(std::move(v)), order);
}

}  // namespace

TEST_CASE("multivariate identity element") {
  MultiTruncatedSeries one = MultiTruncatedSeries::one(2, 5, 8);
  MultiTruncatedSeries s(2, 5, 8);
  s.add_term({1, 0}, c({1, 2}, 8));
  s.add_term({0, 3}, c({0, 1}, 8));
  CHECK(one * s == s);
  CHECK(s * one == s);
}

TEST_CASE("zero coefficients are not stored") {
  MultiTruncatedSeries s(2, 5, 8);
  s.add_term({1, 1}, c({3}, 8));
  s.add_term({1, 1}, c({-3}, 8));
  CHECK(s.terms().empty());
  CHECK(s.coefficient({1, 1}).is_zero());
}

TEST_CASE("total-degree truncation drops high terms") {
  MultiTruncatedSeries s(2, 3, 8);
  s.add_term({2, 1}, c({1}, 8));  // total degree 3 >= bound
  CHECK(s.terms().empty());
  s.add_term({2, 0}, c({1}, 8));
  CHECK(s.terms().size() == 1);
}

TEST_CASE("multivariate product on a known expansion") {
  // (1 + t1)(1 + L t2) = 1 + t1 + L t2 + L t1 t2, bound 3
  MultiTruncatedSeries a(2, 3, 4), b(2, 3, 4);
  a.add_term({0, 0}, c({1}, 4));
  a.add_term({1, 0}, c({1}, 4));
  b.add_term({0, 0}, c({1}, 4));
  b.add_term({0, 1}, c({0, 1}, 4));
  MultiTruncatedSeries p = a * b;
  CHECK(p.coefficient({0, 0}) == c({1}, 4));
  CHECK(p.coefficient({1, 0}) == c({1}, 4));
  CHECK(p.coefficient({0, 1}) == c({0, 1}, 4));
  CHECK(p.coefficient({1, 1}) == c({0, 1}, 4));
  CHECK(p.terms().size() == 4);
}

TEST_CASE("product respects the geometric series identity") {
  // (1 - t)^-1 * (1 - t) = 1 within the degree bound
  MultiTruncatedSeries geom(1, 6, 4), factor(1, 6, 4);
  for (int m = 0; m < 6; ++m) geom.add_term({m}, c({1}, 4));
  factor.add_term({0}, c({1}, 4));
  factor.add_term({1}, c({-1}, 4));
  CHECK(geom * factor == MultiTruncatedSeries::one(1, 6, 4));
}

TEST_CASE("arity mismatches are rejected") {
  MultiTruncatedSeries a(2, 5, 8);
  MultiTruncatedSeries b(3, 5, 8);
  CHECK_THROWS_AS(a.add_term({1}, c({1}, 8)), VariableCountMismatch);
  CHECK_THROWS_AS(a.coefficient({1, 2, 3}), VariableCountMismatch);
  CHECK_THROWS_AS(a * b, VariableCountMismatch);
  CHECK_THROWS_AS(a + b, VariableCountMismatch);
}

TEST_CASE("mixed truncations combine at the minimum") {
  MultiTruncatedSeries a(1, 6, 8), b(1, 4, 5);
  a.add_term({0}, c({1}, 8));
  b.add_term({0}, c({1}, 5));
  MultiTruncatedSeries p = a * b;
  CHECK(p.total_degree_bound() == 4);
  CHECK(p.l_order() == 5);
}
