#include "jaccube/segre.hpp"

#include "jaccube/glue.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jaccube {

namespace {

std::vector<FieldElement> as_vector(const Coords5<FieldElement>& c) { return {c.u0, c.u1, c.v0, c.v1, c.z}; }

}  // namespace

SegrePoint SegrePoint::from_factors(const std::vector<std::vector<FieldElement>>& factors, bool canonical) {
  if (factors.empty() || factors.size() > 21) throw std::invalid_argument("Segre map needs 1..21 factors");
  SegrePoint s;
  s.field_ = factors[0].at(0).field();
  std::vector<std::vector<std::pair<std::uint8_t, FieldElement>>> nz;
  for (const auto& f : factors) {
    if (f.empty() || f.size() > 8) throw std::invalid_argument("factor size must be 1..8");
    s.dims_.push_back(f.size());
    std::vector<std::pair<std::uint8_t, FieldElement>> v;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!f[i].is_zero()) v.emplace_back(static_cast<std::uint8_t>(i), f[i]);
    if (v.empty()) throw std::invalid_argument("zero factor in Segre map");
    nz.push_back(std::move(v));
  }
  // Odometer with the first factor most significant yields sorted keys.
  std::vector<std::size_t> pos(nz.size(), 0);
  for (bool more = true; more;) {
    Key key = 0;
    FieldElement val = FieldElement::one(s.field_);
    for (std::size_t f = 0; f < nz.size(); ++f) {
      key = (key << 3) | nz[f][pos[f]].first;
      val *= nz[f][pos[f]].second;
    }
    s.entries_.emplace_back(key, val);
    more = false;
    for (std::size_t f = nz.size(); f-- > 0;) {
      if (++pos[f] < nz[f].size()) {
        more = true;
        break;
      }
      pos[f] = 0;
    }
  }
  if (canonical) {
    FieldElement inv = s.entries_.front().second.inverse();
    for (auto& e : s.entries_) e.second *= inv;
  }
  return s;
}

SegrePoint::Key SegrePoint::pack(const MultiIndex& k) const {
  if (k.size() != dims_.size()) throw std::invalid_argument("multi-index length mismatch");
  Key key = 0;
  for (std::size_t f = 0; f < k.size(); ++f) {
    if (k[f] >= dims_[f]) throw std::out_of_range("multi-index out of range");
    key = (key << 3) | k[f];
  }
  return key;
}

SegrePoint::MultiIndex SegrePoint::unpack(Key key) const {
  MultiIndex k(dims_.size());
  for (std::size_t f = dims_.size(); f-- > 0;) {
    k[f] = static_cast<std::uint8_t>(key & 7);
    key >>= 3;
  }
  return k;
}

FieldElement SegrePoint::at(const MultiIndex& k) const {
  Key key = pack(k);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const std::pair<Key, FieldElement>& e, Key x) { return e.first < x; });
  if (it != entries_.end() && it->first == key) return it->second;
  return FieldElement::zero(field_);
}

std::string SegrePoint::export_text() const {
  std::ostringstream os;
  for (const auto& [key, v] : entries_) {
    auto k = unpack(key);
    for (auto x : k) os << static_cast<int>(x) << ' ';
    os << ": " << v.to_string() << '\n';
  }
  return os.str();
}

SegrePoint segre_pair(const ProjChartPoint& P, const ProjChartPoint& Q) {
  return SegrePoint::from_factors({as_vector(P.coords()), as_vector(Q.coords())});
}

SegrePoint segre_multi(const CubePoint& P) {
  std::vector<std::vector<FieldElement>> f;
  for (const auto& c : P.charts) f.push_back(as_vector(c.coords()));
  return SegrePoint::from_factors(f);
}

std::uint64_t quadric_count(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("quadric_count needs m, n >= 1");
  return static_cast<std::uint64_t>((m + 1) * m / 2) * static_cast<std::uint64_t>((n + 1) * n / 2);
}

namespace {

bool quadric_holds(const SegrePoint& z, SegrePoint::MultiIndex base, std::size_t fa, std::size_t fb, std::uint8_t i,
                   std::uint8_t k, std::uint8_t j, std::uint8_t l) {
  auto at = [&](std::uint8_t x, std::uint8_t y) {
    base[fa] = x;
    base[fb] = y;
    return z.at(base);
  };
  return at(i, j) * at(k, l) == at(i, l) * at(k, j);
}

}  // namespace

QuadricCheck check_quadrics_exhaustive(const SegrePoint& z) {
  QuadricCheck r;
  std::size_t L = z.factors();
  for (std::size_t fa = 0; fa < L; ++fa)
    for (std::size_t fb = fa + 1; fb < L; ++fb) {
      if (L != 2) break;
      SegrePoint::MultiIndex base(L, 0);
      auto m = z.dims()[fa], n = z.dims()[fb];
      for (std::uint8_t i = 0; i < m; ++i)
        for (std::uint8_t k = i + 1; k < m; ++k)
          for (std::uint8_t j = 0; j < n; ++j)
            for (std::uint8_t l = j + 1; l < n; ++l) {
              ++r.checked;
              if (!quadric_holds(z, base, fa, fb, i, k, j, l)) ++r.failed;
            }
    }
  return r;
}

QuadricCheck check_quadrics_sampled(const SegrePoint& z, std::size_t samples, std::mt19937_64& rng) {
  QuadricCheck r;
  std::size_t L = z.factors();
  if (L < 2) return r;
  std::uniform_int_distribution<std::size_t> factor(0, L - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t fa = factor(rng), fb = factor(rng);
    if (fa == fb) fb = (fa + 1) % L;
    SegrePoint::MultiIndex base(L);
    for (std::size_t f = 0; f < L; ++f)
      base[f] = static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(0, z.dims()[f] - 1)(rng));
    auto pick = [&](std::size_t d) { return static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(0, d - 1)(rng)); };
    std::uint8_t i = pick(z.dims()[fa]), k = pick(z.dims()[fa]), j = pick(z.dims()[fb]), l = pick(z.dims()[fb]);
    ++r.checked;
    if (!quadric_holds(z, base, fa, fb, i, k, j, l)) ++r.failed;
  }
  return r;
}

void SegrePoly::add(const Mono& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned SegrePoly::degree() const { return terms_.empty() ? 0 : static_cast<unsigned>(terms_.begin()->first.size()); }

FieldElement SegrePoly::evaluate(const SegrePoint& z) const {
  if (z.factors() != 2) throw std::invalid_argument("SegrePoly evaluates on two-factor points");
  FieldElement acc = FieldElement::zero(z.field());
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (auto [i, j] : m) t *= z.at({i, j});
    acc += t;
  }
  return acc;
}

FieldElement SegrePoly::evaluate_on(const Coords5<FieldElement>& P, const Coords5<FieldElement>& Q) const {
  auto x = as_vector(P), y = as_vector(Q);
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (auto [i, j] : m) t *= x[i] * y[j];
    acc += t;
  }
  return acc;
}

std::string SegrePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    for (auto [i, j] : m) s += "*z" + std::to_string(i) + std::to_string(j);
  }
  return s;
}

const std::vector<Var>& x_vars() {
  static const std::vector<Var> v{Var::u0, Var::u1, Var::v0, Var::v1, Var::z};
  return v;
}

const std::vector<Var>& y_vars() {
  static const std::vector<Var> v{Var::hu0, Var::hu1, Var::hv0, Var::hv1, Var::hz};
  return v;
}

std::vector<Monomial> slack_monomials(const std::vector<Var>& vars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m{};
  auto rec = [&](auto&& self, std::size_t start, unsigned left) -> void {
    if (left == 0) {
      out.push_back(m);
      return;
    }
    for (std::size_t i = start; i < vars.size(); ++i) {
      ++m[static_cast<std::size_t>(vars[i])];
      self(self, i, left - 1);
      --m[static_cast<std::size_t>(vars[i])];
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<SegrePoly> promote_bihomogeneous(const MPoly& F, const Monomial& slack) {
  const auto& xv = x_vars();
  const auto& yv = y_vars();
  auto bideg = F.bidegrees(xv, yv);
  if (bideg.size() != 1) throw std::invalid_argument("F is not bihomogeneous");
  auto [a, b] = *bideg.begin();
  for (std::size_t i = 0; i < kNumVars; ++i) {
    bool in_x = std::find(xv.begin(), xv.end(), static_cast<Var>(i)) != xv.end();
    bool in_y = std::find(yv.begin(), yv.end(), static_cast<Var>(i)) != yv.end();
    if (slack[i] && !in_x && !in_y) throw std::invalid_argument("slack uses a non-coordinate variable");
    for (const auto& [m, c] : F.terms())
      if (m[i] && !in_x && !in_y) throw std::invalid_argument("F has non-coordinate variables");
  }
  unsigned sx = MPoly::degree_in(slack, xv), sy = MPoly::degree_in(slack, yv);
  if (a + sx != b + sy || (a < b && sx != b - a) || (a >= b && sy != a - b))
    throw std::invalid_argument("slack degree does not balance the bidegree");
  unsigned d = a + sx;

  std::set<SegrePoly> variants;
  for (Pairing rule : {Pairing::Sorted, Pairing::Reversed}) {
    SegrePoly out(F.field());
    for (const auto& [m, c] : F.terms()) {
      std::vector<std::uint8_t> xs, ys;
      for (std::uint8_t k = 0; k < 5; ++k) {
        auto xi = static_cast<std::size_t>(xv[k]), yi = static_cast<std::size_t>(yv[k]);
        for (unsigned e = 0; e < m[xi] + slack[xi]; ++e) xs.push_back(k);
        for (unsigned e = 0; e < m[yi] + slack[yi]; ++e) ys.push_back(k);
      }
      if (rule == Pairing::Reversed) std::reverse(ys.begin(), ys.end());
      SegrePoly::Mono mono;
      for (unsigned t = 0; t < d; ++t) mono.emplace_back(xs[t], ys[t]);
      std::sort(mono.begin(), mono.end());
      out.add(mono, c);
    }
    variants.insert(out);
  }
  return {variants.begin(), variants.end()};
}

std::array<MPoly, 9> numeric_G(const Coeffs5& aprime) {
  Field F = aprime[0].field();
  CoeffVec<MPoly> a;
  for (int i = 0; i < 5; ++i) a[i] = MPoly::constant(aprime[i]);
  if (aprime[0].is_zero()) a[0] = MPoly(F);
  const auto& xv = x_vars();
  const auto& yv = y_vars();
  Coords5<MPoly> S{MPoly::var(F, xv[0]), MPoly::var(F, xv[1]), MPoly::var(F, xv[2]), MPoly::var(F, xv[3]),
                   MPoly::var(F, xv[4])};
  Coords5<MPoly> T{MPoly::var(F, yv[0]), MPoly::var(F, yv[1]), MPoly::var(F, yv[2]), MPoly::var(F, yv[3]),
                   MPoly::var(F, yv[4])};
  return G_polys(a, S, T);
}

Coords5<FieldElement> edge_coords(const ChartModel& model, int l, const ProjChartPoint& S) {
  return translate_coords(S.coords(), model.curve().marked_root(l));
}

}  // namespace jaccube
