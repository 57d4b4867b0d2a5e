#include "helpers.hpp"

#include "jaccube/segre.hpp"

#include <doctest.h>

#include <random>

using namespace jaccube;
using testing_support::F13;
using testing_support::curve13;
using testing_support::e13;
using testing_support::sample_class;

namespace {

Coords5<FieldElement> random_coords(Field F, std::mt19937_64& rng) {
  for (;;) {
    Coords5<FieldElement> S{random_element(F, rng), random_element(F, rng), random_element(F, rng),
                            random_element(F, rng), random_element(F, rng)};
    if (!(S.u0.is_zero() && S.u1.is_zero() && S.v0.is_zero() && S.v1.is_zero() && S.z.is_zero())) return S;
  }
}

std::map<Var, FieldElement> assignment(const Coords5<FieldElement>& P, const Coords5<FieldElement>& Q) {
  std::array<FieldElement, 5> p{P.u0, P.u1, P.v0, P.v1, P.z}, q{Q.u0, Q.u1, Q.v0, Q.v1, Q.z};
  std::map<Var, FieldElement> m;
  for (int i = 0; i < 5; ++i) {
    m[x_vars()[i]] = p[i];
    m[y_vars()[i]] = q[i];
  }
  return m;
}

FieldElement eval_monomial(Field F, const Monomial& m, const std::map<Var, FieldElement>& at) {
  FieldElement r = FieldElement::one(F);
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (m[i]) r *= at.at(static_cast<Var>(i)).pow(m[i]);
  return r;
}

}  // namespace

TEST_CASE("quadric counts") {
  CHECK(quadric_count(1, 1) == 1);
  CHECK(quadric_count(2, 1) == 3);
  CHECK(quadric_count(4, 4) == 100);
  CHECK_THROWS_AS(quadric_count(0, 3), std::invalid_argument);
}

TEST_CASE("pairwise Segre images satisfy every quadric") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 100; ++n) {
    ProjChartPoint P(random_coords(F13(), rng)), Q(random_coords(F13(), rng));
    auto z = segre_pair(P, Q);
    auto r = check_quadrics_exhaustive(z);
    CHECK(r.ok());
    CHECK(r.checked == 100);
    for (std::uint8_t i = 0; i < 5; ++i)
      for (std::uint8_t j = 0; j < 5; ++j) CHECK(z.at({i, j}) == P[i] * Q[j]);
  }
}

TEST_CASE("rescaling a factor leaves the canonical point unchanged") {
  std::vector<FieldElement> x{e13(0), e13(2), e13(3)}, y{e13(5), e13(1)};
  std::vector<FieldElement> x3{e13(0), e13(6), e13(9)};
  CHECK(SegrePoint::from_factors({x, y}) == SegrePoint::from_factors({x3, y}));
  CHECK_THROWS_AS(SegrePoint::from_factors({x, {e13(0), e13(0)}}), std::invalid_argument);
}

TEST_CASE("sparse export") {
  std::vector<FieldElement> x{e13(1), e13(1)}, y{e13(1), e13(1)};
  auto z = SegrePoint::from_factors({x, y});
  auto text = z.export_text();
  CHECK(text.find("0 0 : 1") != std::string::npos);
  CHECK(z.nonzero_count() == 4);
}

TEST_CASE("multi Segre of a lifted class") {
  auto m = build_model(curve13());
  auto p = lift(m, sample_class());
  auto z = segre_multi(p);
  CHECK(z.factors() == 8);
  std::mt19937_64 rng(3);
  CHECK(check_quadrics_sampled(z, 2000, rng).ok());
  auto zero = segre_multi(lift(m, MumfordDivisor::zero(curve13())));
  CHECK(zero.nonzero_count() < z.nonzero_count());
  std::mt19937_64 rng2(4);
  CHECK(check_quadrics_sampled(zero, 2000, rng2).ok());
}

TEST_CASE("promotion of balanced and unbalanced glue") {
  auto c = curve13();
  auto ap = recenter(c, c.marked_root(1)).aprime;
  auto G = numeric_G(ap);
  Monomial none{};

  auto p1 = promote_bihomogeneous(G[0], none);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].degree() == 1);

  auto slacks = slack_monomials(y_vars(), 2);
  CHECK(slacks.size() == 15);
  std::mt19937_64 rng(6);
  for (const auto& s : slacks) {
    auto polys = promote_bihomogeneous(G[7], s);
    REQUIRE_FALSE(polys.empty());
    for (int n = 0; n < 20; ++n) {
      auto P = random_coords(F13(), rng), Q = random_coords(F13(), rng);
      auto at = assignment(P, Q);
      FieldElement want = eval_monomial(F13(), s, at) * G[7].evaluate(at);
      for (const auto& poly : polys) {
        CHECK(poly.degree() == 3);
        CHECK(poly.evaluate_on(P, Q) == want);
      }
    }
  }
  CHECK_THROWS_AS(promote_bihomogeneous(G[7], slack_monomials(y_vars(), 1)[0]), std::invalid_argument);
  CHECK_THROWS_AS(promote_bihomogeneous(G[7], none), std::invalid_argument);
}

TEST_CASE("promoted glue vanishes on lifted edges") {
  auto c = curve13();
  auto m = build_model(c);
  auto p = lift(m, sample_class());
  for (const auto& e : m.edges()) {
    auto G = numeric_G(m.recentered(e.direction));
    auto S = edge_coords(m, e.direction, p.charts[e.from]);
    auto T = edge_coords(m, e.direction, p.charts[e.to]);
    auto z = segre_pair(ProjChartPoint(S), ProjChartPoint(T));
    for (const auto& F : G) {
      auto bd = F.bidegrees(x_vars(), y_vars());
      REQUIRE(bd.size() == 1);
      auto [a, b] = *bd.begin();
      const auto& side = a < b ? x_vars() : y_vars();
      for (const auto& s : slack_monomials(side, a > b ? a - b : b - a))
        for (const auto& poly : promote_bihomogeneous(F, s)) CHECK(poly.evaluate(z).is_zero());
    }
  }
}
