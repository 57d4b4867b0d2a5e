#pragma once

#include "jaccube/chart.hpp"
#include "jaccube/coords.hpp"
#include "jaccube/curve.hpp"

#include <array>
#include <string>

namespace jaccube {

// Glue between X and X + (x, 0) for a curve with a0 = 0; t holds the hatted
// coordinates. Only a1, a3, a4 enter.
template <class R>
std::array<R, 9> g_polys(const CoeffVec<R>& a, const Coords4<R>& s, const Coords4<R>& t) {
  const R &a1 = a[1], &a3 = a[3], &a4 = a[4];
  const R &u0 = s.u0, &u1 = s.u1, &v0 = s.v0, &v1 = s.v1;
  const R &hu0 = t.u0, &hu1 = t.u1, &hv0 = t.v0, &hv1 = t.v1;
  return {
      u0 * hu0 - a1,
      hv0 * u0 + v0 * hu0,
      v0 * hv0 + a1 * (a4 - u1 - hu1),
      hu0 * (v1 + hv1) + hv0 * (u1 - hu1),
      u0 * (v1 + hv1) + v0 * (hu1 - u1),
      a1 * hu0 - a1 * a3 + a1 * u0 + a1 * hu1 * u1 - 2 * (u1 * hv0 * v0) - 2 * (hu0 * v0 * v1),
      a1 * hu0 - a1 * a3 + a1 * u0 + a1 * hu1 * u1 - 2 * (hu1 * hv0 * v0) - 2 * (u0 * hv0 * hv1),
      a3 * u0 * hv0 - a1 * hv0 - u0 * u0 * hv0 - 2 * (a4 * u0 * u1 * hv0) + 3 * (u0 * u1 * u1 * hv0) +
          a1 * u1 * hv1 + a1 * u1 * v1 + 2 * (hv0 * v0 * v1),
      a3 * hu0 * v0 - a1 * v0 - hu0 * hu0 * v0 - 2 * (a4 * hu0 * hu1 * v0) + 3 * (hu0 * hu1 * hu1 * v0) +
          a1 * hu1 * v1 + a1 * hu1 * hv1 + 2 * (v0 * hv0 * hv1),
  };
}

// Bihomogeneous glue; T holds the hatted coordinates.
template <class R>
std::array<R, 9> G_polys(const CoeffVec<R>& a, const Coords5<R>& S, const Coords5<R>& T) {
  const R &a1 = a[1], &a3 = a[3], &a4 = a[4];
  const R &u0 = S.u0, &u1 = S.u1, &v0 = S.v0, &v1 = S.v1, &z = S.z;
  const R &hu0 = T.u0, &hu1 = T.u1, &hv0 = T.v0, &hv1 = T.v1, &hz = T.z;
  return {
      u0 * hu0 - a1 * z * hz,
      hv0 * u0 + v0 * hu0,
      v0 * hv0 + a1 * (a4 * z * hz - u1 * hz - hu1 * z),
      hu0 * (v1 * hz + hv1 * z) + hv0 * (u1 * hz - hu1 * z),
      u0 * (v1 * hz + hv1 * z) + v0 * (hu1 * z - u1 * hz),
      a1 * hu0 * z * z - a1 * a3 * z * z * hz + a1 * u0 * hz * z + a1 * hu1 * u1 * z - 2 * (u1 * hv0 * v0) -
          2 * (hu0 * v0 * v1),
      a1 * hu0 * z * hz - a1 * a3 * z * hz * hz + a1 * u0 * hz * hz + a1 * hu1 * u1 * hz - 2 * (hu1 * hv0 * v0) -
          2 * (u0 * hv0 * hv1),
      a3 * u0 * hv0 * z * z - a1 * hv0 * z * z * z - u0 * u0 * hv0 * z - 2 * (a4 * u0 * u1 * hv0 * z) +
          3 * (u0 * u1 * u1 * hv0) + a1 * u1 * hv1 * z * z + a1 * u1 * v1 * z * hz + 2 * (hv0 * v0 * v1 * z),
      a3 * hu0 * v0 * hz * hz - a1 * v0 * hz * hz * hz - hu0 * hu0 * v0 * hz - 2 * (a4 * hu0 * hu1 * v0 * hz) +
          3 * (hu0 * hu1 * hu1 * v0) + a1 * hu1 * v1 * hz * hz + a1 * hu1 * hv1 * hz * z + 2 * (v0 * hv0 * hv1 * hz),
  };
}

// M(rho): U(x) -> U(x + rho) on projective chart coordinates.
template <class R>
Coords5<R> translate_coords(const Coords5<R>& S, const R& rho) {
  return {S.u0 + S.u1 * rho + S.z * rho * rho, S.u1 + 2 * (S.z * rho), S.v0 + S.v1 * rho, S.v1, S.z};
}

template <class R>
Coords4<R> translate_coords(const Coords4<R>& s, const R& rho) {
  return {s.u0 + s.u1 * rho + rho * rho, s.u1 + 2 * rho, s.v0 + s.v1 * rho, s.v1};
}

struct GlueResidual {
  std::array<FieldElement, 9> values;
  bool is_zero() const;
  // Indices (0-based) of nonzero entries.
  std::vector<int> nonzero() const;
  std::string to_string() const;
};

// Throws std::invalid_argument when a1 = 0.
GlueResidual eval_g(const Coeffs5& aprime, const AffineChartPoint& s, const AffineChartPoint& shat);
GlueResidual eval_G(const Coeffs5& aprime, const Coords5<FieldElement>& S, const Coords5<FieldElement>& Shat);
GlueResidual eval_G(const Coeffs5& aprime, const ProjChartPoint& S, const ProjChartPoint& Shat);

ProjChartPoint chart_translate(const ProjChartPoint& S, const FieldElement& rho);
AffineChartPoint affine_translate(const AffineChartPoint& s, const FieldElement& rho);

// G on M(rho_l)-translated coordinates with the coefficients recentred at rho_l.
GlueResidual eval_edge_glue(const Genus2Curve& curve, int l, const ProjChartPoint& S, const ProjChartPoint& Shat);

// Chart coordinates of X + X_l from those of X. Throws ArithmeticError when
// the translated u0 vanishes (the neighbour lies on Theta).
AffineChartPoint solve_neighbor(const Genus2Curve& curve, int l, const AffineChartPoint& s);

}  // namespace jaccube
