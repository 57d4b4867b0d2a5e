#include "jaccube/glue.hpp"

#include <stdexcept>

namespace jaccube {

namespace {

void require_a1(const Coeffs5& a) {
  if (a[1].is_zero()) throw std::invalid_argument("glue needs a1 != 0");
}

}  // namespace

bool GlueResidual::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<int> GlueResidual::nonzero() const {
  std::vector<int> out;
  for (int i = 0; i < 9; ++i)
    if (!values[i].is_zero()) out.push_back(i);
  return out;
}

std::string GlueResidual::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 9; ++i) s += (i ? "," : "") + values[i].to_string();
  return s + "]";
}

GlueResidual eval_g(const Coeffs5& aprime, const AffineChartPoint& s, const AffineChartPoint& shat) {
  require_a1(aprime);
  return {g_polys(aprime, s, shat)};
}

GlueResidual eval_G(const Coeffs5& aprime, const Coords5<FieldElement>& S, const Coords5<FieldElement>& Shat) {
  require_a1(aprime);
  return {G_polys(aprime, S, Shat)};
}

GlueResidual eval_G(const Coeffs5& aprime, const ProjChartPoint& S, const ProjChartPoint& Shat) {
  return eval_G(aprime, S.coords(), Shat.coords());
}

ProjChartPoint chart_translate(const ProjChartPoint& S, const FieldElement& rho) {
  return ProjChartPoint(translate_coords(S.coords(), rho));
}

AffineChartPoint affine_translate(const AffineChartPoint& s, const FieldElement& rho) { return translate_coords(s, rho); }

GlueResidual eval_edge_glue(const Genus2Curve& curve, int l, const ProjChartPoint& S, const ProjChartPoint& Shat) {
  const FieldElement& rho = curve.marked_root(l);
  Coeffs5 ap = recenter(curve, rho).aprime;
  return eval_G(ap, translate_coords(S.coords(), rho), translate_coords(Shat.coords(), rho));
}

AffineChartPoint solve_neighbor(const Genus2Curve& curve, int l, const AffineChartPoint& s) {
  const FieldElement& rho = curve.marked_root(l);
  Coeffs5 a = recenter(curve, rho).aprime;
  AffineChartPoint t = translate_coords(s, rho);
  if (t.u0.is_zero()) throw ArithmeticError("neighbour lies on Theta (translated u0 = 0)");
  AffineChartPoint h;
  h.u0 = a[1] / t.u0;
  h.v0 = -t.v0 * h.u0 / t.u0;
  h.u1 = a[4] - t.u1 + t.v0 * h.v0 / a[1];
  h.v1 = t.v0 * (t.u1 - h.u1) / t.u0 - t.v1;
  return translate_coords(h, -rho);
}

}  // namespace jaccube
