#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jaccube {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
struct FieldData;
}

// Interned field descriptor. Two Field values compare equal iff they denote
// the same field; descriptors live for the lifetime of the process.
class Field {
 public:
  Field() = default;

  static Field prime(const mpz_class& p);
  static Field prime(std::uint64_t p);
  static Field rationals();
  // "Fp:<p>" or "Q".
  static Field parse(std::string_view text);

  bool valid() const { return d_ != nullptr; }
  bool is_rationals() const;
  bool is_prime() const;
  // 0 for the rationals.
  const mpz_class& characteristic() const;
  // Set when p < 2^32; enables the machine-word fast path.
  std::optional<std::uint64_t> small_modulus() const;
  std::string to_string() const;

  friend bool operator==(Field a, Field b) { return a.d_ == b.d_; }
  const detail::FieldData* data() const { return d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_ = nullptr;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, long v);
  FieldElement(Field f, const mpz_class& v);
  FieldElement(Field f, const mpq_class& v);

  static FieldElement zero(Field f) { return FieldElement(f, 0L); }
  static FieldElement one(Field f) { return FieldElement(f, 1L); }
  // Integer or fraction "n/d"; fractions over F_p need d invertible.
  static FieldElement parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  // F_p: least nonnegative residue. Q: exact value.
  mpq_class to_mpq() const;
  mpz_class residue() const;
  std::optional<std::uint64_t> small_value() const;
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(long c, const FieldElement& b) { return FieldElement(b.field_, c) * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  // Orders by residue (F_p) or by value (Q). Elements of different fields are
  // ordered by field identity so containers stay usable.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  struct Raw {};
  FieldElement(Field f, std::uint64_t v, Raw) : field_(f), v_(v) {}
  const detail::FieldData* check_same(const FieldElement& o) const;

  Field field_;
  std::variant<std::uint64_t, mpz_class, mpq_class> v_{std::uint64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// Uniform over F_p; small random fractions over Q.
FieldElement random_element(Field f, std::mt19937_64& rng);
// All elements of a small prime field in residue order.
std::vector<FieldElement> all_elements(Field f, std::uint64_t guard = 1000);

}  // namespace jaccube
