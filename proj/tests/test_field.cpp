#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace jaccube;
using testing_support::F13;
using testing_support::e13;

TEST_CASE("field descriptors are interned and validated") {
  CHECK(Field::prime(13) == Field::prime(13));
  CHECK_FALSE(Field::prime(13) == Field::prime(17));
  CHECK(Field::parse("Fp:13") == Field::prime(13));
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(15), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("F13"), std::invalid_argument);
  CHECK(Field::prime(13).small_modulus() == 13u);
  CHECK(Field::prime(13).to_string() == "Fp:13");
}

TEST_CASE("F_13 satisfies the field axioms exhaustively") {
  auto all = all_elements(F13());
  REQUIRE(all.size() == 13);
  auto zero = FieldElement::zero(F13()), one = FieldElement::one(F13());
  for (const auto& a : all) {
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
    for (const auto& b : all) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : all) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("canonical residues and parsing") {
  CHECK(e13(-1) == e13(12));
  CHECK(e13(-1).to_string() == "12");
  CHECK(FieldElement::parse(F13(), "1/2") == e13(7));
  CHECK(FieldElement::parse(F13(), "-3") == e13(10));
  CHECK_THROWS_AS(FieldElement::parse(F13(), "1/13"), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::parse(F13(), "x"), std::invalid_argument);
  CHECK_THROWS_AS(e13(0).inverse(), ArithmeticError);
  CHECK(e13(2).pow(12) == e13(1));
}

TEST_CASE("mixing fields is rejected") {
  FieldElement a(Field::prime(17), 3L);
  CHECK_THROWS_AS(e13(3) + a, std::invalid_argument);
}

TEST_CASE("rationals are exact") {
  Field Q = Field::rationals();
  FieldElement h = FieldElement::parse(Q, "1/2"), t = FieldElement::parse(Q, "1/3");
  CHECK(h + t == FieldElement::parse(Q, "5/6"));
  CHECK((h / t).to_string() == "3/2");
  CHECK(FieldElement(Q, -4L) < FieldElement(Q, 1L));
}

TEST_CASE("large primes use the big-integer path") {
  mpz_class p("170141183460469231731687303715884105727");  // 2^127 - 1
  Field F = Field::prime(p);
  CHECK_FALSE(F.small_modulus().has_value());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FieldElement a = random_element(F, rng), b = random_element(F, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == FieldElement::one(F));
    CHECK((a + b) - b == a);
    CHECK(a.pow(1) * a == a.pow(2));
  }
  // Fermat: a^(p-1) = 1.
  FieldElement a(F, 123456789L);
  mpz_class e = p - 1;
  FieldElement acc = FieldElement::one(F), base = a;
  for (std::size_t bit = 0; bit < mpz_sizeinbase(e.get_mpz_t(), 2); ++bit) {
    if (mpz_tstbit(e.get_mpz_t(), bit)) acc *= base;
    base *= base;
  }
  CHECK(acc.is_one());
}

TEST_CASE("small-path and big-path residues agree") {
  std::mt19937_64 rng(11);
  Field small = Field::prime(1000003);
  for (int i = 0; i < 500; ++i) {
    FieldElement a = random_element(small, rng), b = random_element(small, rng);
    mpz_class p = 1000003;
    mpz_class want = (a.residue() * b.residue()) % p;
    CHECK((a * b).residue() == want);
    mpz_class sum = (a.residue() + b.residue()) % p;
    CHECK((a + b).residue() == sum);
  }
}
