#include "helpers.hpp"

#include "jaccube/cube_model.hpp"

#include <doctest.h>

using namespace jaccube;
using testing_support::curve13;
using testing_support::e13;
using testing_support::sample_class;

namespace {

const CubeModel& model13() {
  static const CubeModel m = build_model(curve13());
  return m;
}

}  // namespace

TEST_CASE("cube indexing") {
  CHECK(CubeIndex::of(1, 0, 1).bits == 5);
  CHECK(CubeIndex::of(0, 1, 1).to_string() == "011");
  CHECK(direction_mask(1) == 1);
  CHECK(direction_mask(3) == 4);
  const auto& m = model13();
  CHECK(m.corners().size() == 8);
  CHECK(m.edges().size() == 12);
  CHECK(m.corner_equation_count() == 16);
  CHECK(m.edge_equation_count() == 108);
  for (const auto& e : m.edges())
    CHECK((m.corners()[e.from].bits ^ m.corners()[e.to].bits) == direction_mask(e.direction));
  auto q = build_quad_model(curve13());
  CHECK(q.corners().size() == 4);
  CHECK(q.edges().size() == 4);
}

TEST_CASE("lift of the class 0") {
  auto c = curve13();
  auto p = lift(model13(), MumfordDivisor::zero(c));
  CHECK(p.charts[0].coords() == Coords5<FieldElement>{e13(1), e13(0), e13(0), e13(0), e13(0)});
  for (int l = 1; l <= 3; ++l) {
    auto pos = direction_mask(l);
    CHECK(p.charts[pos] == ProjChartPoint(Coords5<FieldElement>{e13(0), e13(0), -c.marked_root(l), e13(1), e13(0)}));
  }
  CHECK(verify_point(model13(), p).ok());
  auto t = infinity_type(p);
  CHECK(t.to_string() == "00010111");
  CHECK(classify_type(t) == TypeClass{TypeClass::Tag::SubgroupBall, CubeIndex::of(0, 0, 0)});
}

TEST_CASE("lift of a generic class") {
  auto p = lift(model13(), sample_class());
  CHECK(verify_point(model13(), p).ok());
  CHECK(infinity_type(p).to_string() == "11111111");
  CHECK(classify_type(infinity_type(p)).tag == TypeClass::Tag::Generic);
  CHECK(p.charts[0] == ProjChartPoint::from_affine(embed(sample_class())));
}

TEST_CASE("single Theta and antipodal types") {
  auto c = curve13();
  auto X4 = MumfordDivisor::weierstrass(c, e13(5));
  auto p = lift(model13(), X4);
  CHECK(verify_point(model13(), p).ok());
  CHECK(infinity_type(p).to_string() == "01111110");
  CHECK(classify_type(infinity_type(p)) == TypeClass{TypeClass::Tag::AntipodalPair, CubeIndex::of(0, 0, 0)});

  auto P = lift(model13(), MumfordDivisor::point(c, e13(2), e13(2)));
  CHECK(verify_point(model13(), P).ok());
  CHECK(infinity_type(P).to_string() == "01111111");
  CHECK(classify_type(infinity_type(P)) == TypeClass{TypeClass::Tag::SingleTheta, CubeIndex::of(0, 0, 0)});

  auto D = mumford_add(c, X4, marked_two_torsion(c, 1));
  auto q = lift(model13(), D);
  CHECK(verify_point(model13(), q).ok());
  CHECK(infinity_type(q).to_string() == "10111101");
  CHECK(classify_type(infinity_type(q)) == TypeClass{TypeClass::Tag::AntipodalPair, CubeIndex::of(0, 0, 1)});
}

TEST_CASE("combinatorial type rules") {
  CHECK(classify_type(parse_infinity_type("11111111")).tag == TypeClass::Tag::Generic);
  CHECK(classify_type(parse_infinity_type("11011111")).tag == TypeClass::Tag::SingleTheta);
  CHECK(classify_type(parse_infinity_type("00000000")).tag == TypeClass::Tag::Invalid);
  CHECK(classify_type(parse_infinity_type("00111111")).tag == TypeClass::Tag::Invalid);
  CHECK_FALSE(face_rule_holds(parse_infinity_type("00111111")));
  CHECK(face_rule_holds(parse_infinity_type("00010111")));
  CHECK(radius2_rule_holds(parse_infinity_type("00010111")));
  CHECK_FALSE(radius2_rule_holds(parse_infinity_type("00000001")));
  CHECK_THROWS(parse_infinity_type("0101010x"));
  // Every type that classifies as valid obeys both rules.
  for (unsigned m = 0; m < 256; ++m) {
    InfinityType t;
    for (int b = 0; b < 8; ++b) t.bits.push_back((m >> b) & 1);
    if (classify_type(t).tag != TypeClass::Tag::Invalid) {
      CHECK(face_rule_holds(t));
      CHECK(radius2_rule_holds(t));
    }
  }
}

TEST_CASE("perturbed points are rejected") {
  const auto& m = model13();
  auto p = lift(m, sample_class());
  auto S = p.charts[3].coords();
  S.v1 += e13(1);
  p.charts[3] = ProjChartPoint(S);
  auto r = verify_point(m, p);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.to_string().empty());
}

TEST_CASE("extraneous quad points do not extend to the cube") {
  auto c = curve13();
  auto ext = quad_extraneous_points(c);
  REQUIRE(ext.size() == 2);
  auto quad = build_quad_model(c);
  auto base = lift(model13(), MumfordDivisor::zero(c));
  for (const auto& e : ext) {
    CHECK(verify_point(quad, e).ok());
    CHECK(infinity_type(e).to_string() == "0000");
    ModelPoint p = base;
    for (std::size_t i = 0; i < 4; ++i) p.charts[i] = e.charts[i];
    CHECK_FALSE(verify_point(model13(), p).ok());
  }
}

TEST_CASE("census is deterministic across thread counts") {
  auto c = curve13();
  auto a = census(c, 1), b = census(c, 4);
  REQUIRE(a.records.size() == 144);
  REQUIRE(b.records.size() == 144);
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].line() == b.records[i].line());
  CHECK(a.tally == b.tally);
  CHECK(a.ok());
  CHECK(a.injective);
  CHECK(a.invalid == 0);
  std::size_t balls = 0;
  for (const auto& [k, n] : a.tally)
    if (k.rfind("SubgroupBall", 0) == 0) balls += n;
  CHECK(balls == 8);
}
