#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace jaccube;
using testing_support::F13;
using testing_support::e13;
using testing_support::poly13;

TEST_CASE("division examples") {
  auto dm = poly_divmod(poly13({0, 12, 0, 0, 0, 1}), poly13({12, 0, 1}));
  CHECK(dm.quotient == poly13({0, 1, 0, 1}));
  CHECK(dm.remainder.is_zero());
  auto d2 = poly_divmod(poly13({1, 0, 1}), poly13({0, 1}));
  CHECK(d2.quotient == poly13({0, 1}));
  CHECK(d2.remainder == poly13({1}));
  CHECK_THROWS_AS(poly_divmod(poly13({1, 1}), UniPoly(F13())), ArithmeticError);
}

TEST_CASE("evaluation") {
  UniPoly f = poly13({0, 12, 0, 0, 0, 1});
  CHECK(poly_eval(f, e13(0)).is_zero());
  CHECK(poly_eval(f, e13(1)).is_zero());
  CHECK(poly_eval(f, e13(2)) == e13(4));
  CHECK_THROWS_AS(poly_eval(f, FieldElement(Field::prime(17), 1L)), std::invalid_argument);
}

TEST_CASE("degree and normalization") {
  CHECK_FALSE(UniPoly(F13()).degree().has_value());
  CHECK(poly13({1, 2, 0, 0}).degree() == 1u);
  CHECK(poly13({3, 0, 2}).monic() == poly13({8, 0, 1}));
  CHECK(poly13({0, 12, 0, 0, 0, 1}).coeff_list() == "[0,12,0,0,0,1]");
}

TEST_CASE("property: divmod reconstructs and xgcd is a Bezout identity") {
  std::mt19937_64 rng(3);
  auto random_poly = [&](int deg) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_element(F13(), rng));
    return UniPoly(F13(), c);
  };
  for (int n = 0; n < 300; ++n) {
    UniPoly a = random_poly(static_cast<int>(rng() % 7)), b = random_poly(static_cast<int>(rng() % 5));
    if (b.is_zero()) continue;
    auto dm = poly_divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK((dm.remainder.is_zero() || *dm.remainder.degree() < *b.degree()));
    auto x = poly_xgcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
    CHECK((a % x.g).is_zero());
    CHECK((b % x.g).is_zero());
    CHECK(x.g == poly_gcd(a, b));
  }
}

TEST_CASE("roots by scan") {
  auto r = roots_by_scan(poly13({0, 12, 0, 0, 0, 1}));
  std::vector<FieldElement> want{e13(0), e13(1), e13(5), e13(8), e13(12)};
  CHECK(r == want);
}
