#include "helpers.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace jaccube;
using testing_support::F13;
using testing_support::curve13;
using testing_support::e13;

TEST_CASE("curve construction and validation") {
  auto c = curve13();
  CHECK(c.f()(e13(2)) == e13(4));
  CHECK(c.marked_root(3) == e13(12));
  CHECK_THROWS_AS(c.marked_root(4), std::out_of_range);
  Coeffs5 zero{e13(0), e13(0), e13(0), e13(0), e13(0)};
  CHECK_THROWS_AS(Genus2Curve::create(F13(), zero, {e13(0), e13(1), e13(12)}), CurveError);
  Coeffs5 a = c.a();
  CHECK_THROWS_AS(Genus2Curve::create(F13(), a, {e13(0), e13(1), e13(2)}), CurveError);
  CHECK_THROWS_AS(Genus2Curve::create(F13(), a, {e13(0), e13(1), e13(1)}), CurveError);
  Field F17 = Field::prime(17);
  CHECK_THROWS_AS(Genus2Curve::create(F17, a, {e13(0), e13(1), e13(12)}), CurveError);
}

TEST_CASE("weierstrass points") {
  std::vector<FieldElement> want{e13(0), e13(1), e13(5), e13(8), e13(12)};
  CHECK(weierstrass_points(curve13()) == want);
  Field Q = Field::rationals();
  auto q = [&](long v) { return FieldElement(Q, v); };
  auto c = Genus2Curve::create(Q, {q(0), q(-1), q(0), q(0), q(0)}, {q(0), q(1), q(-1)});
  std::vector<FieldElement> wq{q(-1), q(0), q(1)};
  CHECK(weierstrass_points(c) == wq);
}

TEST_CASE("recentering") {
  auto c = curve13();
  CHECK(recenter(c, e13(0)).aprime == c.a());
  auto r1 = recenter(c, e13(1));
  CHECK(r1.aprime[0].is_zero());
  CHECK(r1.aprime[1] == e13(4));
  CHECK(recenter_coeffs(r1.aprime, e13(-1)) == c.a());

  auto t = transform_matrices(e13(1));
  // Row j of A holds the binomials C(j, i) when rho = 1.
  long binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) CHECK(t.A[j][i] == e13(binom[j][i]));
}

TEST_CASE("property: matrix form and Taylor shift agree, shifts compose") {
  std::mt19937_64 rng(5);
  Field F = Field::prime(101);
  for (int n = 0; n < 100; ++n) {
    Coeffs5 a;
    for (auto& x : a) x = random_element(F, rng);
    FieldElement r = random_element(F, rng), s = random_element(F, rng);
    CHECK(apply_transform(transform_matrices(r), a) == recenter_coeffs(a, r));
    CHECK(recenter_coeffs(recenter_coeffs(a, r), s) == recenter_coeffs(a, r + s));
    CHECK(recenter_coeffs(recenter_coeffs(a, r), -r) == a);
  }
}

TEST_CASE("a recentered marked root gives a'0 = 0 and a'1 != 0") {
  auto c = curve13();
  for (int l = 1; l <= 3; ++l) {
    auto ap = recenter(c, c.marked_root(l)).aprime;
    CHECK(ap[0].is_zero());
    CHECK_FALSE(ap[1].is_zero());
  }
}

TEST_CASE("config parsing") {
  auto c = parse_curve_config("# comment\nfield = Fp:13\na = 0 12 0 0 0\nroots = 0 1 12\n");
  CHECK(c.a() == curve13().a());
  CHECK(parse_curve_config(c.to_config()).a() == c.a());
  CHECK_THROWS_AS(parse_curve_config("field = Fp:13\na = 0 12 0 0\nroots = 0 1 12\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field = Fp:13\na = 0 12 0 0 0\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field = Fp:13\nfield = Q\na = 0 12 0 0 0\nroots = 0 1 12\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field = Fp:13\nb = 1\na = 0 12 0 0 0\nroots = 0 1 12\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field = F13\na = 0 12 0 0 0\nroots = 0 1 12\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field Fp:13\n"), CurveError);
  CHECK_THROWS_AS(parse_curve_config("field = Fp:13\na = 0 12 0 0 0\nroots = 0 1 2\n"), CurveError);
  CHECK_THROWS_AS(load_curve_config("/nonexistent/curve.cfg"), CurveError);
}

TEST_CASE("shipped configs load") {
  for (const char* name : {"F13-x5-x.cfg", "Q-x5-x.cfg", "F17-split.cfg", "Q-five-roots.cfg"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_curve_config(std::string(JACCUBE_DATA_DIR) + "/" + name));
  }
}

TEST_CASE("split curve search") {
  auto c = find_split_curve(Field::prime(17));
  CHECK(weierstrass_points(c).size() == 5);
  CHECK_THROWS_AS(find_split_curve(Field::prime(3)), CurveError);
}
