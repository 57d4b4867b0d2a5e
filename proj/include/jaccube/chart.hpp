#pragma once

#include "jaccube/coords.hpp"
#include "jaccube/curve.hpp"
#include "jaccube/mpoly.hpp"
#include "jaccube/mumford.hpp"

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace jaccube {

using AffineChartPoint = Coords4<FieldElement>;

// The affine chart equations for Jac(C) - Theta.
template <class R>
std::pair<R, R> e_polys(const CoeffVec<R>& a, const Coords4<R>& s) {
  const auto& [a0, a1, a2, a3, a4] = a;
  const R &u0 = s.u0, &u1 = s.u1, &v0 = s.v0, &v1 = s.v1;
  R e0 = a0 - a2 * u0 + a4 * u0 * u0 + a3 * u0 * u1 - 2 * (u0 * u0 * u1) - a4 * u0 * u1 * u1 +
         u0 * u1 * u1 * u1 - v0 * v0 + u0 * v1 * v1;
  R e1 = a1 - a3 * u0 + u0 * u0 - a2 * u1 + 2 * (a4 * u0 * u1) + a3 * u1 * u1 - 3 * (u0 * u1 * u1) -
         a4 * u1 * u1 * u1 + u1 * u1 * u1 * u1 - 2 * (v0 * v1) + u1 * v1 * v1;
  return {e0, e1};
}

std::pair<FieldElement, FieldElement> eval_e(const Coeffs5& a, const AffineChartPoint& s);

// e0, e1 over Q with a0..a4 and u0, u1, v0, v1 as indeterminates.
std::pair<MPoly, MPoly> symbolic_e();
// Their degree-4 homogenizations in (u0, u1, v0, v1) with respect to z.
std::pair<MPoly, MPoly> symbolic_E();
// k = (u0 - u1^2) e0 + u0 u1 e1: the quintic and sextic parts cancel, so its
// degree-4 homogenization K lies in the ideal of the projective closure. At
// z = 0 (where E1 forces u1 = 0) it cuts the plane down to u0 v1 = 0.
MPoly symbolic_k();
MPoly symbolic_K();

// Point of P^4 scaled so the first nonzero coordinate in (u0, u1, v0, v1, z) is 1.
class ProjChartPoint {
 public:
  ProjChartPoint() = default;
  // Throws std::invalid_argument when all coordinates vanish.
  explicit ProjChartPoint(const Coords5<FieldElement>& raw);
  static ProjChartPoint from_affine(const AffineChartPoint& s);

  const Coords5<FieldElement>& coords() const { return c_; }
  const FieldElement& operator[](int i) const;
  bool at_infinity() const { return c_.z.is_zero(); }
  // Requires z != 0.
  AffineChartPoint affine() const;
  std::string to_string() const;

  friend bool operator==(const ProjChartPoint& a, const ProjChartPoint& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const ProjChartPoint& a, const ProjChartPoint& b);

 private:
  Coords5<FieldElement> c_;
};

// E0, E1 specialised to one coefficient vector, for repeated evaluation.
class ChartSystem {
 public:
  explicit ChartSystem(const Coeffs5& a);
  std::pair<FieldElement, FieldElement> operator()(const Coords5<FieldElement>& S) const;
  FieldElement closure(const Coords5<FieldElement>& S) const { return eval(tk_, S); }
  // E0 = E1 = K = 0.
  bool contains(const Coords5<FieldElement>& S) const;
  const std::pair<MPoly, MPoly>& polys() const { return polys_; }

 private:
  struct Term {
    FieldElement c;
    std::array<std::uint8_t, 5> e;
  };
  FieldElement eval(const std::vector<Term>& terms, const Coords5<FieldElement>& S) const;
  std::pair<MPoly, MPoly> polys_;
  std::vector<Term> t0_, t1_, tk_;
  Field field_;
};

// Evaluates the homogenized equations on raw (unscaled) coordinates.
std::pair<FieldElement, FieldElement> eval_E(const Coeffs5& a, const Coords5<FieldElement>& S);
std::pair<FieldElement, FieldElement> eval_E(const Coeffs5& a, const ProjChartPoint& S);

// s = (u0, u1, v0, v1) of a class off Theta; throws std::invalid_argument on Theta.
AffineChartPoint embed(const MumfordDivisor& d);
// Inverse of embed; validates the Mumford invariants.
MumfordDivisor divisor_from_chart(const Genus2Curve& curve, const AffineChartPoint& s);

// All s in F_p^4 with e0 = e1 = 0, lexicographic in (u0, u1, v0, v1).
std::vector<AffineChartPoint> affine_chart_solutions(const Coeffs5& a, std::uint64_t guard = 100);

std::string to_string(const AffineChartPoint& s);

}  // namespace jaccube
