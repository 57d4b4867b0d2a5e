#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace jaccube;
using testing_support::curve13;
using testing_support::e13;
using testing_support::poly13;
using testing_support::sample_class;

TEST_CASE("invariants are enforced") {
  auto c = curve13();
  CHECK_THROWS_AS(MumfordDivisor(c, poly13({1, 2}), poly13({1})), std::invalid_argument);  // f(12) = 0 but v = 1
  CHECK_THROWS_AS(MumfordDivisor(c, poly13({0, 0, 2}), poly13({})), std::invalid_argument);
  CHECK_THROWS_AS(MumfordDivisor(c, poly13({1}), poly13({1})), std::invalid_argument);
  CHECK_THROWS_AS(MumfordDivisor(c, poly13({0, 1}), poly13({0, 1})), std::invalid_argument);
  CHECK_NOTHROW(sample_class());
}

TEST_CASE("group laws") {
  auto c = curve13();
  auto D = sample_class(), O = MumfordDivisor::zero(c);
  CHECK(mumford_add(c, D, O) == D);
  CHECK(mumford_sub(c, D, D) == O);
  for (int l = 1; l <= 3; ++l) {
    auto X = marked_two_torsion(c, l);
    CHECK(mumford_add(c, X, X) == O);
  }
  MumfordDivisor sum = O;
  for (const auto& r : weierstrass_points(c)) sum = mumford_add(c, sum, MumfordDivisor::weierstrass(c, r));
  CHECK(sum == O);
  CHECK(two_torsion(c).size() == 16);
  CHECK(mumford_add(c, MumfordDivisor::point(c, e13(2), e13(2)), MumfordDivisor::point(c, e13(6), e13(3))) == D);
}

TEST_CASE("enumeration, Lagrange and associativity") {
  auto c = curve13();
  auto all = enumerate_classes(c);
  REQUIRE(all.size() == 144);
  CHECK(all == enumerate_classes_raw(c));
  std::set<MumfordDivisor> set(all.begin(), all.end());
  CHECK(set.size() == 144);
  for (const auto& D : all) CHECK(mumford_mul(c, D, 144) == MumfordDivisor::zero(c));

  std::mt19937_64 rng(1);
  for (int n = 0; n < 300; ++n) {
    const auto &A = all[rng() % 144], &B = all[rng() % 144], &C = all[rng() % 144];
    CHECK(mumford_add(c, A, B) == mumford_add(c, B, A));
    CHECK(mumford_add(c, mumford_add(c, A, B), C) == mumford_add(c, A, mumford_add(c, B, C)));
    CHECK(mumford_add(c, A, mumford_negate(c, A)) == MumfordDivisor::zero(c));
    CHECK(set.count(mumford_add(c, A, B)) == 1);
  }
}

TEST_CASE("w polynomial and degree-one classes") {
  auto c = curve13();
  std::size_t deg1 = 0;
  for (const auto& D : enumerate_classes(c)) {
    UniPoly w = w_poly(c, D);
    CHECK(c.f() == D.v() * D.v() + D.u() * w);
    deg1 += D.degree() == 1;
  }
  CHECK(deg1 == affine_points(c).size());
}

TEST_CASE("classification") {
  auto c = curve13();
  CHECK(classify(c, MumfordDivisor::zero(c)).tag == ClassType::Tag::Zero);
  CHECK(classify(c, sample_class()).tag == ClassType::Tag::Generic);
  auto X1 = marked_two_torsion(c, 1);
  auto t = classify(c, X1);
  CHECK(t.tag == ClassType::Tag::ThetaMarked);
  CHECK(t.i == 1);
  CHECK(classify(c, MumfordDivisor::weierstrass(c, e13(5))).tag == ClassType::Tag::ThetaAffine);
  auto X12 = mumford_add(c, X1, marked_two_torsion(c, 2));
  CHECK(classify(c, X12).tag == ClassType::Tag::WithTwoMarked);
}
