#pragma once

#include "jaccube/field.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace jaccube {

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : field_(f) {}
  UniPoly(Field f, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  static UniPoly monomial(const FieldElement& c, std::size_t k);
  static UniPoly x(Field f) { return monomial(FieldElement::one(f), 1); }
  static UniPoly from_ints(Field f, std::initializer_list<long> coeffs);

  Field field() const { return field_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  // Zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const FieldElement& c, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string(char var = 'x') const;
  // "[c0,c1,...]" ascending.
  std::string coeff_list() const;

 private:
  void normalize();
  Field field_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

// Throws ArithmeticError when den is zero, std::invalid_argument on field mismatch.
DivMod poly_divmod(const UniPoly& num, const UniPoly& den);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

// Horner evaluation; throws std::invalid_argument on field mismatch.
FieldElement poly_eval(const UniPoly& p, const FieldElement& x);

// Monic gcd (zero if both are zero).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct XGcd {
  UniPoly g, s, t;  // g = s*a + t*b, g monic or zero
};
XGcd poly_xgcd(const UniPoly& a, const UniPoly& b);

// Roots in F_p by exhaustive scan, ascending.
std::vector<FieldElement> roots_by_scan(const UniPoly& p, std::uint64_t guard = 100000);

}  // namespace jaccube
