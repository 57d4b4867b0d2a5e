#include "jaccube/mumford.hpp"

#include <algorithm>
#include <stdexcept>

namespace jaccube {

namespace {

UniPoly one_poly(Field f) { return UniPoly::constant(FieldElement::one(f)); }

// Degree-padded comparison key.
std::strong_ordering compare_coeffs(const UniPoly& a, const UniPoly& b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    auto c = a.coeff(i) <=> b.coeff(i);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// F_p^2 = F_p[t]/(t^2 - nr) on machine words, used only for enumeration.
struct Fp2 {
  std::uint64_t p, nr;
  struct E {
    std::uint64_t a, b;
  };
  E add(E x, E y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  E mul(E x, E y) const {
    return {(x.a * y.a + (x.b * y.b) % p * nr) % p, (x.a * y.b + x.b * y.a) % p};
  }
  std::size_t key(E x) const { return static_cast<std::size_t>(x.a * p + x.b); }
};

std::uint64_t inv_small(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t small_modulus_or_throw(const Genus2Curve& curve, std::uint64_t guard) {
  auto p = curve.field().small_modulus();
  if (!p || *p > guard)
    throw std::invalid_argument("enumeration needs F_p with p <= " + std::to_string(guard));
  return *p;
}

}  // namespace

MumfordDivisor::MumfordDivisor(const Genus2Curve& curve, UniPoly u, UniPoly v) : u_(std::move(u)), v_(std::move(v)) {
  Field f = curve.field();
  if (!(u_.field() == f) || !(v_.field() == f)) throw std::invalid_argument("Mumford polynomials not over the curve field");
  if (u_.is_zero() || !u_.leading().is_one()) throw std::invalid_argument("u must be monic");
  std::size_t du = *u_.degree();
  if (du > 2) throw std::invalid_argument("u has degree > 2 (not reduced)");
  if (du == 0 && !v_.is_zero()) throw std::invalid_argument("v must be 0 when u = 1");
  if (du > 0 && v_.degree() && *v_.degree() >= du) throw std::invalid_argument("deg v must be < deg u");
  if (!poly_divmod(curve.f() - v_ * v_, u_).remainder.is_zero()) throw std::invalid_argument("u does not divide f - v^2");
}

MumfordDivisor MumfordDivisor::zero(const Genus2Curve& curve) {
  return MumfordDivisor(one_poly(curve.field()), UniPoly(curve.field()), Unchecked{});
}

MumfordDivisor MumfordDivisor::point(const Genus2Curve& curve, const FieldElement& x, const FieldElement& y) {
  Field f = curve.field();
  return MumfordDivisor(curve, UniPoly(f, {-x, FieldElement::one(f)}), UniPoly::constant(y));
}

MumfordDivisor MumfordDivisor::weierstrass(const Genus2Curve& curve, const FieldElement& rho) {
  return point(curve, rho, FieldElement::zero(curve.field()));
}

std::string MumfordDivisor::to_string() const { return "u=" + u_.coeff_list() + " v=" + v_.coeff_list(); }

std::strong_ordering operator<=>(const MumfordDivisor& a, const MumfordDivisor& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  std::size_t d = a.degree();
  if (auto c = compare_coeffs(a.u_, b.u_, d + 1); c != 0) return c;
  return compare_coeffs(a.v_, b.v_, std::max<std::size_t>(d, 1));
}

MumfordDivisor mumford_add(const Genus2Curve& curve, const MumfordDivisor& a, const MumfordDivisor& b) {
  Field F = curve.field();
  const UniPoly& f = curve.f();
  if (a.u_.is_one()) return b;
  if (b.u_.is_one()) return a;

  XGcd x1 = poly_xgcd(a.u_, b.u_);
  UniPoly d = x1.g, h1 = x1.s, h2 = x1.t, h3(F);
  if (!x1.g.is_one()) {
    XGcd x2 = poly_xgcd(x1.g, a.v_ + b.v_);
    d = x2.g;
    h1 = x2.s * x1.s;
    h2 = x2.s * x1.t;
    h3 = x2.t;
  }
  UniPoly u = (a.u_ * b.u_) / (d * d);
  DivMod vq = poly_divmod(h1 * a.u_ * b.v_ + h2 * b.u_ * a.v_ + h3 * (a.v_ * b.v_ + f), d);
  if (!vq.remainder.is_zero()) throw std::logic_error("Cantor composition: inexact division");
  UniPoly v = vq.quotient % u;

  while (*u.degree() > 2) {
    DivMod uq = poly_divmod(f - v * v, u);
    if (!uq.remainder.is_zero()) throw std::logic_error("Cantor reduction: inexact division");
    u = uq.quotient;
    v = (-v) % u;
  }
  u = u.monic();
  v = v % u;
  return MumfordDivisor(std::move(u), std::move(v), MumfordDivisor::Unchecked{});
}

MumfordDivisor mumford_negate(const Genus2Curve&, const MumfordDivisor& d) {
  return MumfordDivisor(d.u_, (-d.v_) % d.u_, MumfordDivisor::Unchecked{});
}

MumfordDivisor mumford_sub(const Genus2Curve& curve, const MumfordDivisor& a, const MumfordDivisor& b) {
  return mumford_add(curve, a, mumford_negate(curve, b));
}

MumfordDivisor mumford_mul(const Genus2Curve& curve, const MumfordDivisor& d, unsigned long n) {
  MumfordDivisor acc = MumfordDivisor::zero(curve), base = d;
  while (n) {
    if (n & 1) acc = mumford_add(curve, acc, base);
    n >>= 1;
    if (n) base = mumford_add(curve, base, base);
  }
  return acc;
}

std::string ClassType::to_string() const {
  switch (tag) {
    case Tag::Generic: return "Generic";
    case Tag::WithMarked: return "WithMarked(" + std::to_string(i) + ")";
    case Tag::WithTwoMarked: return "WithTwoMarked(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Tag::ThetaAffine: return "ThetaAffine";
    case Tag::ThetaMarked: return "ThetaMarked(" + std::to_string(i) + ")";
    case Tag::Zero: return "Zero";
  }
  return "?";
}

ClassType classify(const Genus2Curve& curve, const MumfordDivisor& d) {
  using Tag = ClassType::Tag;
  std::vector<int> marked;
  for (int l = 1; l <= 3; ++l)
    if (d.u()(curve.marked_root(l)).is_zero()) marked.push_back(l);
  switch (d.degree()) {
    case 0: return {Tag::Zero};
    case 1: return marked.empty() ? ClassType{Tag::ThetaAffine} : ClassType{Tag::ThetaMarked, marked[0]};
    default:
      if (marked.empty()) return {Tag::Generic};
      if (marked.size() == 1) return {Tag::WithMarked, marked[0]};
      return {Tag::WithTwoMarked, marked[0], marked[1]};
  }
}

std::vector<MumfordDivisor> two_torsion(const Genus2Curve& curve) {
  Field F = curve.field();
  auto roots = weierstrass_points(curve);
  std::vector<MumfordDivisor> out{MumfordDivisor::zero(curve)};
  for (const auto& r : roots) out.push_back(MumfordDivisor::weierstrass(curve, r));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      UniPoly u = UniPoly(F, {-roots[i], FieldElement::one(F)}) * UniPoly(F, {-roots[j], FieldElement::one(F)});
      out.emplace_back(curve, u, UniPoly(F));
    }
  return out;
}

MumfordDivisor marked_two_torsion(const Genus2Curve& curve, int l) {
  return MumfordDivisor::weierstrass(curve, curve.marked_root(l));
}

std::vector<std::pair<FieldElement, FieldElement>> affine_points(const Genus2Curve& curve, std::uint64_t guard) {
  std::uint64_t p = small_modulus_or_throw(curve, guard);
  Field F = curve.field();
  std::vector<std::vector<std::uint64_t>> roots(p);
  for (std::uint64_t y = 0; y < p; ++y) roots[y * y % p].push_back(y);
  std::vector<std::pair<FieldElement, FieldElement>> out;
  for (const auto& x : all_elements(F, guard)) {
    std::uint64_t fx = *curve.f()(x).small_value();
    for (auto y : roots[fx]) out.emplace_back(x, FieldElement(F, static_cast<long>(y)));
  }
  return out;
}

std::vector<MumfordDivisor> enumerate_classes(const Genus2Curve& curve, std::uint64_t guard) {
  std::uint64_t p = small_modulus_or_throw(curve, guard);
  Field F = curve.field();
  const UniPoly& f = curve.f();
  UniPoly fprime = f.derivative();
  FieldElement one = FieldElement::one(F), two(F, 2L);

  std::vector<MumfordDivisor> out{MumfordDivisor::zero(curve)};
  auto pts = affine_points(curve, guard);
  for (const auto& [x, y] : pts) out.push_back(MumfordDivisor::point(curve, x, y));

  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& [x1, y1] = pts[i];
      const auto& [x2, y2] = pts[j];
      if (x1 == x2) continue;
      FieldElement v1 = (y2 - y1) / (x2 - x1);
      UniPoly u = UniPoly(F, {-x1, one}) * UniPoly(F, {-x2, one});
      out.emplace_back(curve, u, UniPoly(F, {y1 - v1 * x1, v1}));
    }

  for (const auto& [x, y] : pts) {
    if (y.is_zero()) continue;
    FieldElement v1 = fprime(x) / (two * y);
    UniPoly u = UniPoly(F, {-x, one}) * UniPoly(F, {-x, one});
    out.emplace_back(curve, u, UniPoly(F, {y - v1 * x, v1}));
  }

  // Conjugate pairs {P, P^sigma} with x(P) in F_p^2 \ F_p.
  std::uint64_t nr = 2;
  while (true) {
    bool square = false;
    for (std::uint64_t s = 0; s < p && !square; ++s) square = s * s % p == nr;
    if (!square) break;
    ++nr;
  }
  Fp2 K{p, nr};
  std::vector<std::int64_t> sqrt_table(p * p, -1);
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      Fp2::E y{a, b};
      auto k = K.key(K.mul(y, y));
      if (sqrt_table[k] < 0) sqrt_table[k] = static_cast<std::int64_t>(K.key(y));
    }
  std::vector<std::uint64_t> fc;
  for (std::size_t i = 0; i <= 5; ++i) fc.push_back(*f.coeff(i).small_value());
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 1; b <= (p - 1) / 2; ++b) {
      Fp2::E x{a, b}, fx{0, 0};
      for (std::size_t i = 6; i-- > 0;) fx = K.add(K.mul(fx, x), Fp2::E{fc[i], 0});
      std::int64_t r = sqrt_table[K.key(fx)];
      if (r < 0) continue;
      Fp2::E y0{static_cast<std::uint64_t>(r) / p, static_cast<std::uint64_t>(r) % p};
      std::vector<Fp2::E> ys{y0};
      Fp2::E neg{(p - y0.a) % p, (p - y0.b) % p};
      if (neg.a != y0.a || neg.b != y0.b) ys.push_back(neg);
      std::uint64_t binv = inv_small(b, p);
      for (auto y : ys) {
        std::uint64_t v1 = y.b * binv % p;
        std::uint64_t v0 = (y.a + p - v1 * a % p) % p;
        std::uint64_t u1 = (p - 2 * a % p) % p;
        std::uint64_t u0 = (a * a % p + p - nr * (b * b % p) % p) % p;
        UniPoly u(F, {FieldElement(F, static_cast<long>(u0)), FieldElement(F, static_cast<long>(u1)), one});
        UniPoly v(F, {FieldElement(F, static_cast<long>(v0)), FieldElement(F, static_cast<long>(v1))});
        out.emplace_back(curve, u, v);
      }
    }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MumfordDivisor> enumerate_classes_raw(const Genus2Curve& curve, std::uint64_t guard) {
  small_modulus_or_throw(curve, guard);
  Field F = curve.field();
  const UniPoly& f = curve.f();
  auto elems = all_elements(F, guard);
  FieldElement one = FieldElement::one(F);
  std::vector<MumfordDivisor> out{MumfordDivisor::zero(curve)};
  for (const auto& x0 : elems)
    for (const auto& c : elems) {
      UniPoly u(F, {-x0, one}), v = UniPoly::constant(c);
      if (poly_divmod(f - v * v, u).remainder.is_zero()) out.emplace_back(curve, u, v);
    }
  for (const auto& u0 : elems)
    for (const auto& u1 : elems) {
      UniPoly u(F, {u0, u1, one});
      for (const auto& v0 : elems)
        for (const auto& v1 : elems) {
          UniPoly v(F, {v0, v1});
          if (poly_divmod(f - v * v, u).remainder.is_zero()) out.emplace_back(curve, u, v);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly w_poly(const Genus2Curve& curve, const MumfordDivisor& d) {
  DivMod q = poly_divmod(curve.f() - d.v() * d.v(), d.u());
  if (!q.remainder.is_zero()) throw std::logic_error("u does not divide f - v^2");
  return q.quotient;
}

}  // namespace jaccube
