#pragma once

#include "jaccube/field.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace jaccube {

// Indeterminates used by the symbolic identity checks: chart coordinates S,
// the neighbouring chart's coordinates S^ (prefix h), curve coefficients, rho.
enum class Var : std::uint8_t {
  u0, u1, v0, v1, z,
  hu0, hu1, hv0, hv1, hz,
  a0, a1, a2, a3, a4,
  rho,
  Count
};

inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Var::Count);
using Monomial = std::array<std::uint8_t, kNumVars>;

const char* var_name(Var v);

// Sparse multivariate polynomial with exact coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Field f) : field_(f) {}
  MPoly(Field f, long c);

  static MPoly constant(const FieldElement& c);
  static MPoly var(Field f, Var v);

  Field field() const { return field_; }
  const std::map<Monomial, FieldElement>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(long c, const MPoly& b);
  friend MPoly operator*(const FieldElement& c, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.field_ == b.field_ && a.t_ == b.t_; }

  MPoly pow(unsigned e) const;

  // Simultaneous substitution of the listed variables.
  MPoly substitute(const std::map<Var, MPoly>& values) const;
  // Missing variables evaluate as zero only if they do not occur.
  FieldElement evaluate(const std::map<Var, FieldElement>& values) const;
  // Coefficients mapped into another field (rational coefficients need
  // invertible denominators).
  MPoly to_field(Field target) const;

  static unsigned degree_in(const Monomial& m, const std::vector<Var>& vars);
  std::set<std::pair<unsigned, unsigned>> bidegrees(const std::vector<Var>& x, const std::vector<Var>& y) const;
  std::set<unsigned> degrees(const std::vector<Var>& vars) const;

  // Multiply each monomial of degree d in vars by h^(degree-d).
  MPoly homogenize(const std::vector<Var>& vars, Var h, unsigned degree) const;
  // Minimal bihomogenization: degrees default to the maximal ones present.
  MPoly bihomogenize(const std::vector<Var>& x, Var hx, const std::vector<Var>& y, Var hy) const;

  // Normal form modulo the principal ideal generated by lead - tail, with
  // lead the leading monomial: every multiple of lead is rewritten as tail.
  MPoly reduce(const Monomial& lead, const MPoly& tail) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const FieldElement& c);
  Field field_;
  std::map<Monomial, FieldElement> t_;
};

Monomial monomial_of(std::initializer_list<std::pair<Var, unsigned>> powers);

}  // namespace jaccube
