#pragma once

#include "jaccube/curve.hpp"
#include "jaccube/poly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace jaccube {

// Reduced divisor (u, v): u monic, deg u <= 2, deg v < deg u, u | f - v^2.
class MumfordDivisor {
 public:
  // Validates the reduced-divisor invariants; throws std::invalid_argument.
  MumfordDivisor(const Genus2Curve& curve, UniPoly u, UniPoly v);

  static MumfordDivisor zero(const Genus2Curve& curve);
  // Class of P - P_inf.
  static MumfordDivisor point(const Genus2Curve& curve, const FieldElement& x, const FieldElement& y);
  // Class of (rho, 0) - P_inf for a root rho.
  static MumfordDivisor weierstrass(const Genus2Curve& curve, const FieldElement& rho);

  const UniPoly& u() const { return u_; }
  const UniPoly& v() const { return v_; }
  std::size_t degree() const { return *u_.degree(); }

  std::string to_string() const;

  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  // deg u, then u coefficients, then v coefficients (ascending index).
  friend std::strong_ordering operator<=>(const MumfordDivisor& a, const MumfordDivisor& b);

 private:
  struct Unchecked {};
  MumfordDivisor(UniPoly u, UniPoly v, Unchecked) : u_(std::move(u)), v_(std::move(v)) {}
  friend MumfordDivisor mumford_add(const Genus2Curve&, const MumfordDivisor&, const MumfordDivisor&);
  friend MumfordDivisor mumford_negate(const Genus2Curve&, const MumfordDivisor&);
  UniPoly u_, v_;
};

// Cantor composition and reduction, total on valid inputs.
MumfordDivisor mumford_add(const Genus2Curve& curve, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor mumford_negate(const Genus2Curve& curve, const MumfordDivisor& d);
MumfordDivisor mumford_sub(const Genus2Curve& curve, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor mumford_mul(const Genus2Curve& curve, const MumfordDivisor& d, unsigned long n);

inline bool is_on_theta(const MumfordDivisor& d) { return d.degree() < 2; }

struct ClassType {
  enum class Tag { Generic, WithMarked, WithTwoMarked, ThetaAffine, ThetaMarked, Zero };
  Tag tag;
  int i = 0;  // marked index 1..3 where applicable
  int j = 0;
  std::string to_string() const;
  friend bool operator==(const ClassType&, const ClassType&) = default;
};

ClassType classify(const Genus2Curve& curve, const MumfordDivisor& d);

// 0, the (x - r, 0) and the ((x - r)(x - s), 0) over the rational roots.
std::vector<MumfordDivisor> two_torsion(const Genus2Curve& curve);

// Marked 2-torsion class X_l = (x - rho_l, 0), l in 1..3.
MumfordDivisor marked_two_torsion(const Genus2Curve& curve, int l);

// Affine F_p-points (x, y), ordered by x then y.
std::vector<std::pair<FieldElement, FieldElement>> affine_points(const Genus2Curve& curve, std::uint64_t guard = 1000);

// Every class exactly once, built from rational points and conjugate pairs
// over F_p^2. Sorted by MumfordDivisor ordering. Requires p <= guard.
std::vector<MumfordDivisor> enumerate_classes(const Genus2Curve& curve, std::uint64_t guard = 1000);

// Independent enumeration by exhaustive (u0, u1, v0, v1) scan with polynomial
// division. O(p^4); requires p <= guard.
std::vector<MumfordDivisor> enumerate_classes_raw(const Genus2Curve& curve, std::uint64_t guard = 100);

// W = (f - v^2) / u; throws std::logic_error if the division is not exact.
UniPoly w_poly(const Genus2Curve& curve, const MumfordDivisor& d);

}  // namespace jaccube
