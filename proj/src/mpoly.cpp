#include "jaccube/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace jaccube {

namespace {
constexpr const char* kNames[kNumVars] = {"u0",  "u1",  "v0",  "v1",  "z",  "hu0", "hu1", "hv0",
                                          "hv1", "hz",  "a0",  "a1",  "a2", "a3",  "a4",  "rho"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }
}  // namespace

const char* var_name(Var v) { return kNames[idx(v)]; }

Monomial monomial_of(std::initializer_list<std::pair<Var, unsigned>> powers) {
  Monomial m{};
  for (auto [v, e] : powers) m[idx(v)] = static_cast<std::uint8_t>(m[idx(v)] + e);
  return m;
}

MPoly::MPoly(Field f, long c) : field_(f) {
  FieldElement x(f, c);
  if (!x.is_zero()) t_.emplace(Monomial{}, x);
}

MPoly MPoly::constant(const FieldElement& c) {
  MPoly p(c.field());
  if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
  return p;
}

MPoly MPoly::var(Field f, Var v) {
  MPoly p(f);
  Monomial m{};
  m[idx(v)] = 1;
  p.t_.emplace(m, FieldElement::one(f));
  return p;
}

void MPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.t_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch in MPoly addition");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch in MPoly subtraction");
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch in MPoly product");
  MPoly out(a.field_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Monomial m;
      for (std::size_t i = 0; i < kNumVars; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

MPoly operator*(long c, const MPoly& b) { return FieldElement(b.field_, c) * b; }

MPoly operator*(const FieldElement& c, const MPoly& b) {
  MPoly out(b.field_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : b.t_) out.t_.emplace(m, c * x);
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc(field_, 1);
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& values) const {
  MPoly out(field_);
  std::map<std::pair<Var, unsigned>, MPoly> powers;
  auto power = [&](Var v, unsigned e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, values.at(v).pow(e)).first->second;
  };
  for (const auto& [m, c] : t_) {
    Monomial rest = m;
    MPoly term(field_);
    term.t_.emplace(Monomial{}, c);
    for (const auto& [v, val] : values) {
      unsigned e = m[idx(v)];
      if (e == 0) continue;
      rest[idx(v)] = 0;
      term = term * power(v, e);
    }
    MPoly mono(field_);
    mono.t_.emplace(rest, FieldElement::one(field_));
    out += term * mono;
  }
  return out;
}

FieldElement MPoly::evaluate(const std::map<Var, FieldElement>& values) const {
  if (t_.empty()) {
    if (!values.empty()) return FieldElement::zero(values.begin()->second.field());
    return FieldElement::zero(field_);
  }
  Field target = field_;
  if (!values.empty()) target = values.begin()->second.field();
  FieldElement acc = FieldElement::zero(target);
  for (const auto& [m, c] : t_) {
    FieldElement term = c.field() == target ? c : FieldElement(target, c.to_mpq());
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      auto it = values.find(static_cast<Var>(i));
      if (it == values.end()) throw std::invalid_argument(std::string("missing value for ") + kNames[i]);
      term *= it->second.pow(m[i]);
    }
    acc += term;
  }
  return acc;
}

MPoly MPoly::to_field(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rationals()) throw std::invalid_argument("to_field needs rational coefficients");
  MPoly out(target);
  for (const auto& [m, c] : t_) out.add_term(m, FieldElement(target, c.to_mpq()));
  return out;
}

unsigned MPoly::degree_in(const Monomial& m, const std::vector<Var>& vars) {
  unsigned d = 0;
  for (Var v : vars) d += m[idx(v)];
  return d;
}

std::set<std::pair<unsigned, unsigned>> MPoly::bidegrees(const std::vector<Var>& x, const std::vector<Var>& y) const {
  std::set<std::pair<unsigned, unsigned>> out;
  for (const auto& [m, c] : t_) out.emplace(degree_in(m, x), degree_in(m, y));
  return out;
}

std::set<unsigned> MPoly::degrees(const std::vector<Var>& vars) const {
  std::set<unsigned> out;
  for (const auto& [m, c] : t_) out.insert(degree_in(m, vars));
  return out;
}

MPoly MPoly::homogenize(const std::vector<Var>& vars, Var h, unsigned degree) const {
  MPoly out(field_);
  for (const auto& [m, c] : t_) {
    unsigned d = degree_in(m, vars);
    if (d > degree) throw std::invalid_argument("monomial degree exceeds homogenization degree");
    Monomial n = m;
    n[idx(h)] = static_cast<std::uint8_t>(n[idx(h)] + (degree - d));
    out.add_term(n, c);
  }
  return out;
}

MPoly MPoly::bihomogenize(const std::vector<Var>& x, Var hx, const std::vector<Var>& y, Var hy) const {
  unsigned dx = 0, dy = 0;
  for (const auto& [m, c] : t_) {
    dx = std::max(dx, degree_in(m, x));
    dy = std::max(dy, degree_in(m, y));
  }
  MPoly out(field_);
  for (const auto& [m, c] : t_) {
    Monomial n = m;
    n[idx(hx)] = static_cast<std::uint8_t>(n[idx(hx)] + dx - degree_in(m, x));
    n[idx(hy)] = static_cast<std::uint8_t>(n[idx(hy)] + dy - degree_in(m, y));
    out.add_term(n, c);
  }
  return out;
}

MPoly MPoly::reduce(const Monomial& lead, const MPoly& tail) const {
  MPoly cur = *this;
  for (;;) {
    MPoly next(field_);
    bool changed = false;
    for (const auto& [m, c] : cur.t_) {
      bool divisible = true;
      for (std::size_t i = 0; i < kNumVars && divisible; ++i) divisible = m[i] >= lead[i];
      if (!divisible) {
        next.add_term(m, c);
        continue;
      }
      changed = true;
      Monomial q;
      for (std::size_t i = 0; i < kNumVars; ++i) q[i] = static_cast<std::uint8_t>(m[i] - lead[i]);
      MPoly mono(field_);
      mono.t_.emplace(q, c);
      next += mono * tail;
    }
    if (!changed) return next;
    cur = std::move(next);
  }
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      os << '*' << kNames[i];
      if (m[i] > 1) os << '^' << static_cast<int>(m[i]);
    }
  }
  return os.str();
}

}  // namespace jaccube
