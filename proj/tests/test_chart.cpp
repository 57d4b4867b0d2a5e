#include "helpers.hpp"

#include "jaccube/chart.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

using namespace jaccube;
using testing_support::F13;
using testing_support::curve13;
using testing_support::e13;
using testing_support::sample_class;

namespace {

Coords5<FieldElement> c5(long a, long b, long c, long d, long z) { return {e13(a), e13(b), e13(c), e13(d), e13(z)}; }

}  // namespace

TEST_CASE("embedding") {
  auto s = embed(sample_class());
  CHECK(s == AffineChartPoint{e13(12), e13(5), e13(8), e13(10)});
  auto [e0, e1] = eval_e(curve13().a(), s);
  CHECK(e0.is_zero());
  CHECK(e1.is_zero());
  CHECK(divisor_from_chart(curve13(), s) == sample_class());
  CHECK_THROWS_AS(embed(MumfordDivisor::zero(curve13())), std::invalid_argument);
  CHECK_THROWS_AS(embed(marked_two_torsion(curve13(), 1)), std::invalid_argument);
}

TEST_CASE("e at the origin is (a0, a1)") {
  auto [e0, e1] = eval_e(curve13().a(), {e13(0), e13(0), e13(0), e13(0)});
  CHECK(e0 == e13(0));
  CHECK(e1 == e13(-1));
}

TEST_CASE("chart solutions are exactly the classes off Theta") {
  auto c = curve13();
  auto sols = affine_chart_solutions(c.a());
  std::vector<AffineChartPoint> want;
  for (const auto& D : enumerate_classes(c))
    if (!is_on_theta(D)) want.push_back(embed(D));
  std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) {
    return std::tie(x.u0, x.u1, x.v0, x.v1) < std::tie(y.u0, y.u1, y.v0, y.v1);
  });
  CHECK(sols == want);
}

TEST_CASE("homogenized equations") {
  const auto& a = curve13().a();
  std::mt19937_64 rng(9);
  for (int n = 0; n < 200; ++n) {
    Coords5<FieldElement> S{random_element(F13(), rng), random_element(F13(), rng), random_element(F13(), rng),
                            random_element(F13(), rng), FieldElement::one(F13())};
    auto [e0, e1] = eval_e(a, {S.u0, S.u1, S.v0, S.v1});
    auto [E0, E1] = eval_E(a, S);
    CHECK(e0 == E0);
    CHECK(e1 == E1);
    FieldElement l = random_element(F13(), rng);
    Coords5<FieldElement> T{l * S.u0, l * S.u1, l * S.v0, l * S.v1, l * S.z};
    auto [F0, F1] = eval_E(a, T);
    CHECK(F0 == l.pow(4) * E0);
    CHECK(F1 == l.pow(4) * E1);
    ChartSystem sys(a);
    CHECK(sys.closure(T) == l.pow(4) * sys.closure(S));
  }
}

TEST_CASE("the class-0 chart point lies on the closure") {
  ChartSystem sys(curve13().a());
  auto O = c5(1, 0, 0, 0, 0);
  auto [E0, E1] = sys(O);
  CHECK(E0.is_zero());
  CHECK(E1.is_zero());
  CHECK(sys.closure(O).is_zero());
  CHECK(sys.contains(O));
  CHECK(sys.contains(c5(0, 0, 5, 1, 0)));
  // On E0 = E1 = 0 at infinity but not in the closure: u0 v1 != 0.
  CHECK_FALSE(sys.contains(c5(1, 0, 0, 1, 0)));
  auto [G0, G1] = sys(c5(1, 0, 0, 1, 0));
  CHECK(G0.is_zero());
  CHECK(G1.is_zero());
}

TEST_CASE("closure relation is in the ideal of the affine equations") {
  auto [e0, e1] = symbolic_e();
  Field Q = Field::rationals();
  MPoly u0 = MPoly::var(Q, Var::u0), u1 = MPoly::var(Q, Var::u1);
  CHECK(symbolic_k() == (u0 - u1 * u1) * e0 + u0 * u1 * e1);
  CHECK(symbolic_K().substitute({{Var::z, MPoly(Q, 1)}}) == symbolic_k());
}

TEST_CASE("closure points at infinity form two lines") {
  for (long p : {13L, 17L}) {
    CAPTURE(p);
    Field F = Field::prime(static_cast<std::uint64_t>(p));
    auto c = p == 13 ? curve13() : find_split_curve(F);
    ChartSystem sys(c.a());
    std::size_t n = 0;
    for (const auto& u0 : all_elements(F))
      for (const auto& u1 : all_elements(F))
        for (const auto& v0 : all_elements(F))
          for (const auto& v1 : all_elements(F)) {
            Coords5<FieldElement> S{u0, u1, v0, v1, FieldElement::zero(F)};
            if (u0.is_zero() && u1.is_zero() && v0.is_zero() && v1.is_zero()) continue;
            if (ProjChartPoint(S).coords() != S) continue;
            if (sys.contains(S)) {
              ++n;
              CHECK(u1.is_zero());
              CHECK((u0 * v1).is_zero());
            }
          }
    CHECK(n == static_cast<std::size_t>(2 * p + 1));
  }
}

TEST_CASE("projective normalization") {
  ProjChartPoint P(c5(0, 2, 4, 6, 8));
  CHECK(P.coords() == c5(0, 1, 2, 3, 4));
  CHECK(P.affine() == AffineChartPoint{e13(0), e13(10), e13(7), e13(4)});
  CHECK_THROWS_AS(ProjChartPoint(c5(0, 0, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ProjChartPoint(c5(1, 0, 0, 0, 0)).affine(), std::invalid_argument);
}
