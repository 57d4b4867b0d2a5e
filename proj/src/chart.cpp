#include "jaccube/chart.hpp"

#include <stdexcept>

namespace jaccube {

namespace {

const std::vector<Var> kS{Var::u0, Var::u1, Var::v0, Var::v1};

std::pair<MPoly, MPoly> build_symbolic_e() {
  Field Q = Field::rationals();
  CoeffVec<MPoly> a{MPoly::var(Q, Var::a0), MPoly::var(Q, Var::a1), MPoly::var(Q, Var::a2), MPoly::var(Q, Var::a3),
                    MPoly::var(Q, Var::a4)};
  Coords4<MPoly> s{MPoly::var(Q, Var::u0), MPoly::var(Q, Var::u1), MPoly::var(Q, Var::v0), MPoly::var(Q, Var::v1)};
  return e_polys(a, s);
}

}  // namespace

std::pair<FieldElement, FieldElement> eval_e(const Coeffs5& a, const AffineChartPoint& s) { return e_polys(a, s); }

std::pair<MPoly, MPoly> symbolic_e() {
  static const std::pair<MPoly, MPoly> e = build_symbolic_e();
  return e;
}

std::pair<MPoly, MPoly> symbolic_E() {
  static const std::pair<MPoly, MPoly> E = [] {
    auto [e0, e1] = symbolic_e();
    return std::make_pair(e0.homogenize(kS, Var::z, 4), e1.homogenize(kS, Var::z, 4));
  }();
  return E;
}

MPoly symbolic_k() {
  static const MPoly k = [] {
    auto [e0, e1] = symbolic_e();
    MPoly u0 = MPoly::var(Field::rationals(), Var::u0), u1 = MPoly::var(Field::rationals(), Var::u1);
    return (u0 - u1 * u1) * e0 + u0 * u1 * e1;
  }();
  return k;
}

MPoly symbolic_K() {
  static const MPoly K = symbolic_k().homogenize(kS, Var::z, 4);
  return K;
}

ProjChartPoint::ProjChartPoint(const Coords5<FieldElement>& raw) {
  const FieldElement* order[5] = {&raw.u0, &raw.u1, &raw.v0, &raw.v1, &raw.z};
  const FieldElement* lead = nullptr;
  for (auto* x : order)
    if (!x->is_zero()) {
      lead = x;
      break;
    }
  if (!lead) throw std::invalid_argument("projective point with all coordinates zero");
  FieldElement inv = lead->inverse();
  c_ = {raw.u0 * inv, raw.u1 * inv, raw.v0 * inv, raw.v1 * inv, raw.z * inv};
}

ProjChartPoint ProjChartPoint::from_affine(const AffineChartPoint& s) {
  return ProjChartPoint(Coords5<FieldElement>{s.u0, s.u1, s.v0, s.v1, FieldElement::one(s.u0.field())});
}

const FieldElement& ProjChartPoint::operator[](int i) const {
  switch (i) {
    case 0: return c_.u0;
    case 1: return c_.u1;
    case 2: return c_.v0;
    case 3: return c_.v1;
    case 4: return c_.z;
  }
  throw std::out_of_range("chart coordinate index");
}

AffineChartPoint ProjChartPoint::affine() const {
  if (at_infinity()) throw std::invalid_argument("point at infinity has no affine part");
  FieldElement inv = c_.z.inverse();
  return {c_.u0 * inv, c_.u1 * inv, c_.v0 * inv, c_.v1 * inv};
}

std::string ProjChartPoint::to_string() const {
  return "(" + c_.u0.to_string() + ":" + c_.u1.to_string() + ":" + c_.v0.to_string() + ":" + c_.v1.to_string() +
         ":" + c_.z.to_string() + ")";
}

std::strong_ordering operator<=>(const ProjChartPoint& a, const ProjChartPoint& b) {
  for (int i = 0; i < 5; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

ChartSystem::ChartSystem(const Coeffs5& a) : field_(a[0].field()) {
  auto [E0, E1] = symbolic_E();
  std::map<Var, MPoly> values;
  const Var avars[5] = {Var::a0, Var::a1, Var::a2, Var::a3, Var::a4};
  for (int i = 0; i < 5; ++i) values.emplace(avars[i], MPoly::constant(a[i]));
  polys_ = {E0.to_field(field_).substitute(values), E1.to_field(field_).substitute(values)};
  const Var svars[5] = {Var::u0, Var::u1, Var::v0, Var::v1, Var::z};
  auto compile = [&](const MPoly& p, std::vector<Term>& out) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c, {}};
      for (int i = 0; i < 5; ++i) t.e[i] = m[static_cast<std::size_t>(svars[i])];
      out.push_back(t);
    }
  };
  compile(polys_.first, t0_);
  compile(polys_.second, t1_);
  compile(symbolic_K().to_field(field_).substitute(values), tk_);
}

bool ChartSystem::contains(const Coords5<FieldElement>& S) const {
  return eval(t0_, S).is_zero() && eval(t1_, S).is_zero() && eval(tk_, S).is_zero();
}

FieldElement ChartSystem::eval(const std::vector<Term>& terms, const Coords5<FieldElement>& S) const {
  const FieldElement* xs[5] = {&S.u0, &S.u1, &S.v0, &S.v1, &S.z};
  std::array<std::array<FieldElement, 5>, 5> pw;
  for (int i = 0; i < 5; ++i) {
    pw[i][0] = FieldElement::one(field_);
    for (int k = 1; k < 5; ++k) pw[i][k] = pw[i][k - 1] * *xs[i];
  }
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& t : terms) {
    FieldElement x = t.c;
    for (int i = 0; i < 5; ++i)
      if (t.e[i]) x *= pw[i][t.e[i]];
    acc += x;
  }
  return acc;
}

std::pair<FieldElement, FieldElement> ChartSystem::operator()(const Coords5<FieldElement>& S) const {
  return {eval(t0_, S), eval(t1_, S)};
}

std::pair<FieldElement, FieldElement> eval_E(const Coeffs5& a, const Coords5<FieldElement>& S) {
  return ChartSystem(a)(S);
}

std::pair<FieldElement, FieldElement> eval_E(const Coeffs5& a, const ProjChartPoint& S) { return eval_E(a, S.coords()); }

AffineChartPoint embed(const MumfordDivisor& d) {
  if (is_on_theta(d)) throw std::invalid_argument("embed: class lies on Theta");
  return {d.u().coeff(0), d.u().coeff(1), d.v().coeff(0), d.v().coeff(1)};
}

MumfordDivisor divisor_from_chart(const Genus2Curve& curve, const AffineChartPoint& s) {
  Field F = curve.field();
  return MumfordDivisor(curve, UniPoly(F, {s.u0, s.u1, FieldElement::one(F)}), UniPoly(F, {s.v0, s.v1}));
}

std::vector<AffineChartPoint> affine_chart_solutions(const Coeffs5& a, std::uint64_t guard) {
  auto elems = all_elements(a[0].field(), guard);
  std::vector<AffineChartPoint> out;
  for (const auto& u0 : elems)
    for (const auto& u1 : elems)
      for (const auto& v0 : elems)
        for (const auto& v1 : elems) {
          AffineChartPoint s{u0, u1, v0, v1};
          auto [e0, e1] = eval_e(a, s);
          if (e0.is_zero() && e1.is_zero()) out.push_back(s);
        }
  return out;
}

std::string to_string(const AffineChartPoint& s) {
  return "(" + s.u0.to_string() + "," + s.u1.to_string() + "," + s.v0.to_string() + "," + s.v1.to_string() + ")";
}

}  // namespace jaccube
