#include "jaccube/curve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jaccube {

namespace {

UniPoly build_f(Field field, const Coeffs5& a) {
  std::vector<FieldElement> c(a.begin(), a.end());
  c.push_back(FieldElement::one(field));
  return UniPoly(field, std::move(c));
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

// Positive divisors of |n| by trial division; empty if |n| is too large.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  std::vector<mpz_class> big;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) big.push_back(n / d);
  }
  out.insert(out.end(), big.rbegin(), big.rend());
  return out;
}

}  // namespace

Genus2Curve Genus2Curve::create(Field field, const Coeffs5& a, const std::array<FieldElement, 3>& roots) {
  if (!field.valid()) throw CurveError("invalid field");
  for (const auto& c : a)
    if (!(c.field() == field)) throw CurveError("coefficient not in " + field.to_string());
  for (const auto& r : roots)
    if (!(r.field() == field)) throw CurveError("marked root not in " + field.to_string());
  Genus2Curve c;
  c.field_ = field;
  c.a_ = a;
  c.roots_ = roots;
  c.f_ = build_f(field, a);
  UniPoly g = poly_gcd(c.f_, c.f_.derivative());
  if (!g.is_one()) throw CurveError("f has repeated roots: gcd(f, f') = " + g.to_string());
  for (int i = 0; i < 3; ++i) {
    if (!c.f_(roots[i]).is_zero())
      throw CurveError("marked value " + roots[i].to_string() + " is not a root: f = " + c.f_(roots[i]).to_string());
    for (int j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw CurveError("duplicate marked root " + roots[i].to_string());
  }
  return c;
}

const FieldElement& Genus2Curve::marked_root(int l) const {
  if (l < 1 || l > 3) throw std::out_of_range("direction must be 1..3");
  return roots_[l - 1];
}

std::string Genus2Curve::to_config() const {
  std::string s = "field = " + field_.to_string() + "\na =";
  for (const auto& c : a_) s += " " + c.to_string();
  s += "\nroots =";
  for (const auto& r : roots_) s += " " + r.to_string();
  return s + "\n";
}

Genus2Curve curve_from_coeffs(Field field, const Coeffs5& a, const std::array<FieldElement, 3>& roots) {
  return Genus2Curve::create(field, a, roots);
}

Genus2Curve parse_curve_config(std::string_view text) {
  std::optional<std::string> field_s, a_s, roots_s;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw CurveError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    std::optional<std::string>* slot = key == "field" ? &field_s : key == "a" ? &a_s : key == "roots" ? &roots_s : nullptr;
    if (!slot) throw CurveError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (*slot) throw CurveError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    *slot = value;
  }
  if (!field_s || !a_s || !roots_s) throw CurveError("config needs field, a and roots");
  Field f;
  try {
    f = Field::parse(*field_s);
  } catch (const std::invalid_argument& e) {
    throw CurveError(e.what());
  }
  auto aw = split_ws(*a_s), rw = split_ws(*roots_s);
  if (aw.size() != 5) throw CurveError("a needs 5 values");
  if (rw.size() != 3) throw CurveError("roots needs 3 values");
  Coeffs5 a;
  std::array<FieldElement, 3> r;
  try {
    for (int i = 0; i < 5; ++i) a[i] = FieldElement::parse(f, aw[i]);
    for (int i = 0; i < 3; ++i) r[i] = FieldElement::parse(f, rw[i]);
  } catch (const std::invalid_argument& e) {
    throw CurveError(e.what());
  }
  return Genus2Curve::create(f, a, r);
}

Genus2Curve load_curve_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CurveError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_config(ss.str());
}

Coeffs5 recenter_coeffs(const Coeffs5& a, const FieldElement& rho) {
  Field f = rho.field();
  // Repeated synthetic division by (x - rho) yields the Taylor coefficients.
  std::vector<FieldElement> c(a.begin(), a.end());
  c.push_back(FieldElement::one(f));
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t i = c.size() - 1; i-- > k;) c[i] += rho * c[i + 1];
  Coeffs5 out;
  for (int i = 0; i < 5; ++i) out[i] = c[i];
  return out;
}

RecenteredCoeffs recenter(const Genus2Curve& curve, const FieldElement& rho) {
  if (!(rho.field() == curve.field())) throw std::invalid_argument("rho not in curve field");
  return {rho, recenter_coeffs(curve.a(), rho)};
}

TransformMatrices transform_matrices(const FieldElement& rho) {
  return transform_matrices_generic(FieldElement::one(rho.field()), rho);
}

std::vector<FieldElement> weierstrass_points(const Genus2Curve& curve) {
  Field f = curve.field();
  std::vector<FieldElement> out;
  if (f.is_prime()) {
    out = roots_by_scan(curve.f(), 1000000);
  } else {
    out.assign(curve.marked_roots().begin(), curve.marked_roots().end());
    bool integral = std::all_of(curve.a().begin(), curve.a().end(),
                                [](const FieldElement& c) { return c.to_mpq().get_den() == 1; });
    if (integral) {
      UniPoly g = curve.f();
      while (!g.is_zero() && g.coeff(0).is_zero()) {
        out.push_back(FieldElement::zero(f));
        g = g / UniPoly::x(f);
      }
      for (const auto& d : divisors(g.coeff(0).to_mpq().get_num()))
        for (int sgn : {1, -1}) {
          FieldElement x(f, mpz_class(sgn * d));
          if (g(x).is_zero()) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

Genus2Curve find_split_curve(Field field, std::size_t skip) {
  auto elems = all_elements(field);
  std::size_t n = elems.size();
  if (n < 5) throw CurveError("field too small for five distinct roots");
  std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
  for (;;) {
    UniPoly f = UniPoly::constant(FieldElement::one(field));
    for (auto i : idx) f = f * (UniPoly::x(field) - UniPoly::constant(elems[i]));
    if (skip == 0) {
      Coeffs5 a;
      for (int i = 0; i < 5; ++i) a[i] = f.coeff(i);
      return Genus2Curve::create(field, a, {elems[idx[0]], elems[idx[1]], elems[idx[2]]});
    }
    --skip;
    int k = 4;
    while (k >= 0 && idx[k] == n - 5 + static_cast<std::size_t>(k)) --k;
    if (k < 0) throw CurveError("no further split curves");
    ++idx[k];
    for (int j = k + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace jaccube
