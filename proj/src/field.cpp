#include "jaccube/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>

namespace jaccube {

namespace detail {

enum class FieldKind : std::uint8_t { SmallPrime, BigPrime, Rationals };

struct FieldData {
  FieldKind kind;
  mpz_class p;
  std::uint64_t small_p = 0;
  std::string name;
};

}  // namespace detail

using detail::FieldData;
using detail::FieldKind;

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

const FieldData* intern(FieldKind kind, const mpz_class& p) {
  std::string key = kind == FieldKind::Rationals ? "Q" : "Fp:" + p.get_str();
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) {
    slot = std::make_unique<FieldData>();
    slot->kind = kind;
    slot->p = p;
    if (kind == FieldKind::SmallPrime) slot->small_p = p.get_ui();
    slot->name = key;
  }
  return slot.get();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

mpz_class mod_nonneg(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

Field Field::prime(const mpz_class& p) {
  if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("field modulus must be an odd prime, got " + p.get_str());
  bool small = p < mpz_class("4294967296");
  return Field(intern(small ? FieldKind::SmallPrime : FieldKind::BigPrime, p));
}

Field Field::prime(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return prime(z);
}

Field Field::rationals() { return Field(intern(FieldKind::Rationals, 0)); }

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field modulus: " + std::string(text));
    return prime(mpz_class(digits));
  }
  throw std::invalid_argument("unknown field: " + std::string(text));
}

bool Field::is_rationals() const { return d_ && d_->kind == FieldKind::Rationals; }
bool Field::is_prime() const { return d_ && d_->kind != FieldKind::Rationals; }

const mpz_class& Field::characteristic() const {
  if (!d_) throw std::logic_error("uninitialized field");
  return d_->p;
}

std::optional<std::uint64_t> Field::small_modulus() const {
  if (d_ && d_->kind == FieldKind::SmallPrime) return d_->small_p;
  return std::nullopt;
}

std::string Field::to_string() const { return d_ ? d_->name : "<none>"; }

FieldElement::FieldElement(Field f, long v) : field_(f) {
  const FieldData* d = f.data();
  if (!d) throw std::logic_error("uninitialized field");
  switch (d->kind) {
    case FieldKind::SmallPrime: {
      std::int64_t p = static_cast<std::int64_t>(d->small_p);
      std::int64_t r = static_cast<std::int64_t>(v % p);
      if (r < 0) r += p;
      v_ = static_cast<std::uint64_t>(r);
      break;
    }
    case FieldKind::BigPrime:
      v_ = mod_nonneg(mpz_class(v), d->p);
      break;
    case FieldKind::Rationals:
      v_ = mpq_class(v);
      break;
  }
}

FieldElement::FieldElement(Field f, const mpz_class& v) : field_(f) {
  const FieldData* d = f.data();
  if (!d) throw std::logic_error("uninitialized field");
  switch (d->kind) {
    case FieldKind::SmallPrime:
      v_ = static_cast<std::uint64_t>(mod_nonneg(v, d->p).get_ui());
      break;
    case FieldKind::BigPrime:
      v_ = mod_nonneg(v, d->p);
      break;
    case FieldKind::Rationals:
      v_ = mpq_class(v);
      break;
  }
}

FieldElement::FieldElement(Field f, const mpq_class& v) : field_(f) {
  const FieldData* d = f.data();
  if (!d) throw std::logic_error("uninitialized field");
  if (d->kind == FieldKind::Rationals) {
    mpq_class c(v);
    c.canonicalize();
    v_ = c;
    return;
  }
  FieldElement num(f, v.get_num());
  FieldElement den(f, v.get_den());
  *this = num / den;
}

FieldElement FieldElement::parse(Field f, std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("bad field element literal: " + s);
  mpz_class n(num), dd(den);
  if (dd == 0) throw std::invalid_argument("zero denominator: " + s);
  if (f.is_rationals()) return FieldElement(f, mpq_class(n, dd));
  FieldElement d(f, dd);
  if (d.is_zero()) throw std::invalid_argument("denominator vanishes in " + f.to_string() + ": " + s);
  return FieldElement(f, n) / d;
}

bool FieldElement::is_zero() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 0;
    case 1: return std::get<1>(v_) == 0;
    default: return std::get<2>(v_) == 0;
  }
}

bool FieldElement::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: return std::get<1>(v_) == 1;
    default: return std::get<2>(v_) == 1;
  }
}

const FieldData* FieldElement::check_same(const FieldElement& o) const {
  if (!field_.valid() || !o.field_.valid()) throw std::logic_error("uninitialized field element");
  if (!(field_ == o.field_))
    throw std::invalid_argument("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
  return field_.data();
}

FieldElement FieldElement::inverse() const {
  if (!field_.valid()) throw std::logic_error("uninitialized field element");
  if (is_zero()) throw ArithmeticError("inverse of zero");
  const FieldData* d = field_.data();
  switch (d->kind) {
    case FieldKind::SmallPrime:
      return FieldElement(field_, inv_mod(std::get<0>(v_), d->small_p), Raw{});
    case FieldKind::BigPrime: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), std::get<1>(v_).get_mpz_t(), d->p.get_mpz_t());
      FieldElement out = *this;
      out.v_ = r;
      return out;
    }
    case FieldKind::Rationals: {
      FieldElement out = *this;
      out.v_ = mpq_class(1) / std::get<2>(v_);
      return out;
    }
  }
  return *this;
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement base = *this;
  FieldElement acc = one(field_);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

mpq_class FieldElement::to_mpq() const {
  switch (v_.index()) {
    case 0: return mpq_class(mpz_class(std::to_string(std::get<0>(v_))));
    case 1: return mpq_class(std::get<1>(v_));
    default: return std::get<2>(v_);
  }
}

mpz_class FieldElement::residue() const {
  switch (v_.index()) {
    case 0: return mpz_class(std::to_string(std::get<0>(v_)));
    case 1: return std::get<1>(v_);
    default: throw std::logic_error("residue() on a rational element");
  }
}

std::optional<std::uint64_t> FieldElement::small_value() const {
  if (v_.index() == 0 && field_.valid()) return std::get<0>(v_);
  return std::nullopt;
}

std::string FieldElement::to_string() const {
  switch (v_.index()) {
    case 0: return std::to_string(std::get<0>(v_));
    case 1: return std::get<1>(v_).get_str();
    default: return std::get<2>(v_).get_str();
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  const FieldData* d = field_.data();
  if (!d) throw std::logic_error("uninitialized field element");
  switch (d->kind) {
    case FieldKind::SmallPrime: {
      std::uint64_t x = std::get<0>(v_);
      out.v_ = x == 0 ? 0 : d->small_p - x;
      break;
    }
    case FieldKind::BigPrime: {
      const mpz_class& x = std::get<1>(v_);
      out.v_ = x == 0 ? mpz_class(0) : mpz_class(d->p - x);
      break;
    }
    case FieldKind::Rationals:
      out.v_ = mpq_class(-std::get<2>(v_));
      break;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  const FieldData* d = check_same(o);
  switch (d->kind) {
    case FieldKind::SmallPrime: {
      std::uint64_t r = std::get<0>(v_) + std::get<0>(o.v_);
      if (r >= d->small_p) r -= d->small_p;
      v_ = r;
      break;
    }
    case FieldKind::BigPrime: {
      mpz_class r = std::get<1>(v_) + std::get<1>(o.v_);
      if (r >= d->p) r -= d->p;
      v_ = r;
      break;
    }
    case FieldKind::Rationals:
      v_ = mpq_class(std::get<2>(v_) + std::get<2>(o.v_));
      break;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  const FieldData* d = check_same(o);
  switch (d->kind) {
    case FieldKind::SmallPrime: {
      std::uint64_t a = std::get<0>(v_), b = std::get<0>(o.v_);
      v_ = a >= b ? a - b : a + d->small_p - b;
      break;
    }
    case FieldKind::BigPrime: {
      mpz_class r = std::get<1>(v_) - std::get<1>(o.v_);
      if (r < 0) r += d->p;
      v_ = r;
      break;
    }
    case FieldKind::Rationals:
      v_ = mpq_class(std::get<2>(v_) - std::get<2>(o.v_));
      break;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  const FieldData* d = check_same(o);
  switch (d->kind) {
    case FieldKind::SmallPrime:
      v_ = (std::get<0>(v_) * std::get<0>(o.v_)) % d->small_p;
      break;
    case FieldKind::BigPrime:
      v_ = mod_nonneg(std::get<1>(v_) * std::get<1>(o.v_), d->p);
      break;
    case FieldKind::Rationals:
      v_ = mpq_class(std::get<2>(v_) * std::get<2>(o.v_));
      break;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.v_ == b.v_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) {
    auto pa = reinterpret_cast<std::uintptr_t>(a.field_.data());
    auto pb = reinterpret_cast<std::uintptr_t>(b.field_.data());
    return pa <=> pb;
  }
  int c = 0;
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) <=> std::get<0>(b.v_);
    case 1: c = cmp(std::get<1>(a.v_), std::get<1>(b.v_)); break;
    default: c = cmp(std::get<2>(a.v_), std::get<2>(b.v_)); break;
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement random_element(Field f, std::mt19937_64& rng) {
  if (f.is_rationals()) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return FieldElement(f, mpq_class(num(rng), den(rng)));
  }
  if (auto p = f.small_modulus()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, *p - 1);
    return FieldElement(f, mpz_class(std::to_string(dist(rng))));
  }
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  return FieldElement(f, mpz_class(gen.get_z_range(f.characteristic())));
}

std::vector<FieldElement> all_elements(Field f, std::uint64_t guard) {
  auto p = f.small_modulus();
  if (!p || *p > guard) throw std::invalid_argument("all_elements needs a prime field with p <= " + std::to_string(guard));
  std::vector<FieldElement> out;
  out.reserve(*p);
  for (std::uint64_t i = 0; i < *p; ++i) out.emplace_back(f, static_cast<long>(i));
  return out;
}

}  // namespace jaccube
