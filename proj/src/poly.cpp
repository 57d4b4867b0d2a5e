#include "jaccube/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jaccube {

UniPoly::UniPoly(Field f, std::vector<FieldElement> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == f)) throw std::invalid_argument("coefficient field mismatch");
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, std::size_t k) {
  std::vector<FieldElement> v(k + 1, FieldElement::zero(c.field()));
  v[k] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(Field f, std::initializer_list<long> coeffs) {
  std::vector<FieldElement> v;
  for (long c : coeffs) v.emplace_back(f, c);
  return UniPoly(f, std::move(v));
}

std::optional<std::size_t> UniPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

FieldElement UniPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElement::zero(field_);
}

FieldElement UniPoly::leading() const {
  if (c_.empty()) return FieldElement::zero(field_);
  return c_.back();
}

FieldElement UniPoly::operator()(const FieldElement& x) const { return poly_eval(*this, x); }

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(FieldElement(field_, static_cast<long>(i)) * c_[i]);
  return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch in polynomial addition");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElement::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch in polynomial product");
  if (a.c_.empty() || b.c_.empty()) return UniPoly(a.field_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(a.field_, std::move(r));
}

UniPoly operator*(const FieldElement& c, const UniPoly& b) {
  if (!(c.field() == b.field_)) throw std::invalid_argument("field mismatch in scalar product");
  std::vector<FieldElement> r = b.c_;
  for (auto& x : r) x *= c;
  return UniPoly(b.field_, std::move(r));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[k].is_one();
    if (!unit || k == 0) os << c_[k].to_string();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string UniPoly::coeff_list() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].to_string();
  }
  return s + "]";
}

DivMod poly_divmod(const UniPoly& num, const UniPoly& den) {
  if (!(num.field() == den.field())) throw std::invalid_argument("field mismatch in poly_divmod");
  if (den.is_zero()) throw ArithmeticError("division by the zero polynomial");
  Field f = num.field();
  std::size_t dd = *den.degree();
  if (num.is_zero() || *num.degree() < dd) return {UniPoly(f), num};
  std::vector<FieldElement> r = num.coeffs();
  std::vector<FieldElement> q(r.size() - dd, FieldElement::zero(f));
  FieldElement inv = den.leading().inverse();
  const auto& d = den.coeffs();
  for (std::size_t k = r.size(); k-- > dd;) {
    if (r[k].is_zero()) continue;
    FieldElement c = r[k] * inv;
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] -= c * d[i];
  }
  r.resize(dd);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return poly_divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return poly_divmod(a, b).remainder; }

FieldElement poly_eval(const UniPoly& p, const FieldElement& x) {
  if (!(p.field() == x.field())) throw std::invalid_argument("field mismatch in poly_eval");
  FieldElement acc = FieldElement::zero(p.field());
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) { return poly_xgcd(a, b).g; }

XGcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch in poly_xgcd");
  Field f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(FieldElement::one(f)), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(FieldElement::one(f));
  while (!r1.is_zero()) {
    DivMod qr = poly_divmod(r0, r1);
    UniPoly r2 = qr.remainder;
    UniPoly s2 = s0 - qr.quotient * s1;
    UniPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

std::vector<FieldElement> roots_by_scan(const UniPoly& p, std::uint64_t guard) {
  std::vector<FieldElement> out;
  for (const auto& x : all_elements(p.field(), guard))
    if (p(x).is_zero()) out.push_back(x);
  return out;
}

}  // namespace jaccube
