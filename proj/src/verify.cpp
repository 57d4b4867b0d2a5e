#include "jaccube/verify.hpp"

#include "jaccube/chart.hpp"
#include "jaccube/glue.hpp"
#include "jaccube/segre.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace jaccube {

void Report::add(std::string id, bool pass, std::string detail) {
  checks.push_back({std::move(id), pass, std::move(detail)});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_text() const {
  std::string s;
  for (const auto& c : checks) {
    s += c.pass ? "PASS " : "FAIL ";
    s += c.id;
    if (!c.detail.empty()) s += " " + c.detail;
    s += '\n';
  }
  return s;
}

std::string Report::to_json_lines() const {
  std::string s;
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["status"] = c.pass ? "PASS" : "FAIL";
    j["id"] = c.id;
    j["detail"] = c.detail;
    s += j.dump() + '\n';
  }
  return s;
}

namespace {

Field Qf() { return Field::rationals(); }
MPoly V(Var v) { return MPoly::var(Qf(), v); }
MPoly C(long c) { return MPoly(Qf(), c); }

CoeffVec<MPoly> sym_a(bool a0_zero) {
  return {a0_zero ? MPoly(Qf()) : V(Var::a0), V(Var::a1), V(Var::a2), V(Var::a3), V(Var::a4)};
}
Coords4<MPoly> sym_s() { return {V(Var::u0), V(Var::u1), V(Var::v0), V(Var::v1)}; }
Coords4<MPoly> sym_t() { return {V(Var::hu0), V(Var::hu1), V(Var::hv0), V(Var::hv1)}; }
Coords5<MPoly> sym_S() { return {V(Var::u0), V(Var::u1), V(Var::v0), V(Var::v1), V(Var::z)}; }
Coords5<MPoly> sym_T() { return {V(Var::hu0), V(Var::hu1), V(Var::hv0), V(Var::hv1), V(Var::hz)}; }

const std::vector<Var> kX4{Var::u0, Var::u1, Var::v0, Var::v1};
const std::vector<Var> kY4{Var::hu0, Var::hu1, Var::hv0, Var::hv1};

// Truncated so a failing difference stays readable in a one-line report.
std::string brief(const MPoly& p) {
  std::string s = p.to_string();
  return s.size() > 160 ? s.substr(0, 160) + "..." : s;
}

void expect_zero(Report& r, const std::string& id, const MPoly& diff) {
  r.add(id, diff.is_zero(), diff.is_zero() ? "" : "difference=" + brief(diff));
}

std::array<MPoly, 9> mutate2(std::array<MPoly, 9> g, const MPoly& replacement) {
  g[1] = replacement;
  return g;
}

}  // namespace

GlueFormulas GlueFormulas::standard() {
  return {[](const CoeffVec<MPoly>& a, const Coords4<MPoly>& s, const Coords4<MPoly>& t) { return g_polys(a, s, t); },
          [](const CoeffVec<MPoly>& a, const Coords5<MPoly>& S, const Coords5<MPoly>& T) { return G_polys(a, S, T); }};
}

GlueFormulas GlueFormulas::mutated_g2() {
  return {[](const CoeffVec<MPoly>& a, const Coords4<MPoly>& s, const Coords4<MPoly>& t) {
            return mutate2(g_polys(a, s, t), t.v0 * s.u0 - s.v0 * t.u0);
          },
          [](const CoeffVec<MPoly>& a, const Coords5<MPoly>& S, const Coords5<MPoly>& T) {
            return mutate2(G_polys(a, S, T), T.v0 * S.u0 - S.v0 * T.u0);
          }};
}

Report check_identities(const GlueFormulas& formulas) {
  Report r;
  const auto a = sym_a(true);
  const auto s = sym_s(), t = sym_t();
  const auto S = sym_S(), T = sym_T();
  const auto g = formulas.g(a, s, t), gs = formulas.g(a, t, s);
  const auto G = formulas.G(a, S, T), Gs = formulas.G(a, T, S);
  auto name = [](const char* p, int i) { return std::string(p) + std::to_string(i); };

  for (int i : {1, 2, 3}) {
    expect_zero(r, "C1.sym." + name("g", i), g[i - 1] - gs[i - 1]);
    expect_zero(r, "C1.sym." + name("G", i), G[i - 1] - Gs[i - 1]);
  }
  for (auto [lo, hi] : {std::pair{4, 5}, {6, 7}, {8, 9}}) {
    expect_zero(r, "C1.pair." + name("g", hi) + "-" + name("g", lo) + "swapped", g[hi - 1] - gs[lo - 1]);
    expect_zero(r, "C1.pair." + name("G", hi) + "-" + name("G", lo) + "swapped", G[hi - 1] - Gs[lo - 1]);
  }

  // Derivation chain; hatted coordinates are the neighbour chart, a0 = 0.
  {
    const auto [e0, e1] = e_polys(a, s);
    const MPoly &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4];
    const MPoly &u0 = s.u0, &u1 = s.u1, &v0 = s.v0, &v1 = s.v1;
    const MPoly &hu0 = t.u0, &hu1 = t.u1, &hv0 = t.v0, &hv1 = t.v1;
    MPoly h0 = -(a2 * hu0) + a4 * hu0 * u0 + a3 * hu0 * u1 - 2 * (hu0 * u0 * u1) - a4 * hu0 * u1 * u1 +
               hu0 * u1 * u1 * u1 + hv0 * v0 + hu0 * v1 * v1;
    MPoly h1 = a1 * hu0 - a3 * hu0 * u0 + hu0 * u0 * u0 + a4 * hu0 * u0 * u1 - hu0 * u0 * u1 * u1 - u1 * hv0 * v0 -
               2 * (hu0 * v0 * v1);
    MPoly h2 = -(a1 * a3) + a1 * hu0 + a1 * u0 + a1 * a4 * u1 - a1 * u1 * u1 - u1 * hv0 * v0 - 2 * (hu0 * v0 * v1);
    MPoly i0 = a4 * u0 * u0 - hu1 * u0 * u0 - u0 * u0 * u1 - v0 * v0;
    MPoly i1 = -a2 + hu1 * u0 + a3 * u1 - u0 * u1 - a4 * u1 * u1 + u1 * u1 * u1 + v1 * v1;
    MPoly i2 = -(a2 * hv0) + a3 * u1 * hv0 - a4 * u1 * u1 * hv0 + u1 * u1 * u1 * hv0 + a1 * hv1 + a1 * v1 +
               hv0 * v1 * v1;

    expect_zero(r, "C1.chain.h0", e0 * hu0 + g[1] * v0 - u0 * h0);
    expect_zero(r, "C1.chain.h1", h1 - (e1 * hu0 - h0 * u1));
    Monomial lead = monomial_of({{Var::u0, 1}, {Var::hu0, 1}});
    expect_zero(r, "C1.chain.h2-mod-g1", (h2 - h1).reduce(lead, a1));
    expect_zero(r, "C1.chain.g6", g[5] - (h2 - g[2] * u1));
    expect_zero(r, "C1.chain.i0", g[2] * u0 * u0 - v0 * u0 * g[1] + v0 * v0 * g[0] - a1 * i0);
    expect_zero(r, "C1.chain.i1", e0 - i0 - u0 * i1);
    expect_zero(r, "C1.chain.i2", i2 - (hv0 * i1 + (u1 - hu1) * g[1] + hu0 * g[4] - (v1 + hv1) * g[0]));
    expect_zero(r, "C1.chain.g8", g[7] - (i2 * u1 - hv0 * e1));
  }

  static const std::array<std::pair<unsigned, unsigned>, 9> kBideg{
      {{1, 1}, {1, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}}};
  const std::vector<Var> X{Var::u0, Var::u1, Var::v0, Var::v1, Var::z};
  const std::vector<Var> Y{Var::hu0, Var::hu1, Var::hv0, Var::hv1, Var::hz};
  for (int i = 0; i < 9; ++i) {
    auto bd = G[i].bidegrees(X, Y);
    bool ok = bd.size() == 1 && *bd.begin() == kBideg[i];
    std::string got;
    for (auto [x, y] : bd) got += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    r.add("C1.bidegree." + name("G", i + 1), ok, "got=" + got);
  }

  std::map<Var, MPoly> dehom{{Var::z, C(1)}, {Var::hz, C(1)}};
  for (int i = 0; i < 9; ++i) {
    expect_zero(r, "C1.dehomogenize." + name("G", i + 1), G[i].substitute(dehom) - g[i]);
    expect_zero(r, "C1.bihomogenize." + name("g", i + 1), g[i].bihomogenize(kX4, Var::z, kY4, Var::hz) - G[i]);
  }

  {
    auto [e0, e1] = symbolic_e();
    auto [E0, E1] = symbolic_E();
    std::map<Var, MPoly> z1{{Var::z, C(1)}};
    expect_zero(r, "C1.homogenize.E0", E0.substitute(z1) - e0);
    expect_zero(r, "C1.homogenize.E1", E1.substitute(z1) - e1);
    auto d0 = E0.degrees(X), d1 = E1.degrees(X);
    r.add("C1.homogeneous.E", d0 == std::set<unsigned>{4} && d1 == std::set<unsigned>{4});
    std::map<Var, MPoly> base{{Var::u0, C(1)}, {Var::u1, C(0)}, {Var::v0, C(0)}, {Var::v1, C(0)}, {Var::z, C(0)}};
    r.add("C1.E-vanish-at-(1:0:0:0:0)", E0.substitute(base).is_zero() && E1.substitute(base).is_zero());

    auto kd = symbolic_k().degrees(kX4);
    r.add("C1.closure.k-degree<=4", !kd.empty() && *kd.rbegin() <= 4, "max=" + std::to_string(kd.empty() ? 0 : *kd.rbegin()));
    std::map<Var, MPoly> at_inf{{Var::z, C(0)}, {Var::u1, C(0)}};
    MPoly u0 = V(Var::u0), v1 = V(Var::v1);
    expect_zero(r, "C1.closure.K(z=u1=0)=u0^2v1^2", symbolic_K().substitute(at_inf) - u0 * u0 * v1 * v1);
    expect_zero(r, "C1.closure.E1(z=0)=u1^4", E1.substitute({{Var::z, C(0)}}) - V(Var::u1).pow(4));
  }

  // Recentring: with a' = a A + b and s' = M(rho) s, e'0 = e0 + rho e1, e'1 = e1.
  {
    const auto afull = sym_a(false);
    MPoly rho = V(Var::rho);
    auto tm = transform_matrices_generic(C(1), rho);
    auto ap = apply_transform(tm, afull);
    auto [e0, e1] = e_polys(afull, s);
    auto [f0, f1] = e_polys(ap, translate_coords(s, rho));
    expect_zero(r, "C1.recenter.e0", f0 - (e0 + rho * e1));
    expect_zero(r, "C1.recenter.e1", f1 - e1);

    auto inv = transform_matrices_generic(C(1), -rho);
    bool identity = true;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        MPoly acc(Qf());
        for (int k = 0; k < 5; ++k) acc += tm.A[i][k] * inv.A[k][j];
        if (!(acc - C(i == j ? 1 : 0)).is_zero()) identity = false;
      }
    r.add("C1.transform.A(rho)A(-rho)=I", identity);
    auto back = apply_transform(inv, ap);
    bool round = true;
    for (int i = 0; i < 5; ++i) round = round && (back[i] - afull[i]).is_zero();
    r.add("C1.transform.round-trip", round);
    auto s2 = translate_coords(translate_coords(S, rho), -rho);
    r.add("C1.translate.round-trip", s2 == S);

    // Synthetic-division recentring agrees with the matrix form.
    Field Q = Qf();
    bool agree = true;
    for (long num : {-7L, -2L, 0L, 1L, 3L, 11L}) {
      FieldElement rq(Q, mpq_class(num, 3));
      Coeffs5 aq{FieldElement(Q, 2L), FieldElement(Q, -5L), FieldElement(Q, mpq_class(1, 2)), FieldElement(Q, 7L),
                 FieldElement(Q, -1L)};
      agree = agree && recenter_coeffs(aq, rq) == apply_transform(transform_matrices(rq), aq);
    }
    r.add("C1.recenter.synthetic=matrix", agree);
  }
  return r;
}

namespace {

bool chart_less(const AffineChartPoint& x, const AffineChartPoint& y) {
  return std::tie(x.u0, x.u1, x.v0, x.v1) < std::tie(y.u0, y.u1, y.v0, y.v1);
}

std::string count_detail(std::size_t got, std::size_t want) {
  return "got=" + std::to_string(got) + " expected=" + std::to_string(want);
}

}  // namespace

CrossOracleResult cross_oracle(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes) {
  CrossOracleResult res;
  std::size_t theta = 0;
  for (const auto& x : classes) theta += is_on_theta(x);
  for (int l = 1; l <= 3; ++l) {
    MumfordDivisor Xl = marked_two_torsion(curve, l);
    // Theta has #affine + 1 members; Theta + X_l meets the off-Theta locus in #affine - 1.
    res.expected_skipped[l - 1] = 2 * (theta - 1);
    for (const auto& x : classes) {
      MumfordDivisor y = mumford_add(curve, x, Xl);
      if (is_on_theta(x) || is_on_theta(y)) {
        ++res.skipped[l - 1];
        continue;
      }
      ++res.checked;
      AffineChartPoint s = embed(x);
      AffineChartPoint sh;
      try {
        sh = solve_neighbor(curve, l, s);
      } catch (const ArithmeticError&) {
        res.problems.push_back("solve_neighbor degenerate off Theta at " + x.to_string());
        continue;
      }
      if (!(sh == embed(y))) {
        ++res.mismatches;
        if (res.problems.size() < 10)
          res.problems.push_back("l=" + std::to_string(l) + " " + x.to_string() + ": glue " + to_string(sh) +
                                 " cantor " + to_string(embed(y)));
        continue;
      }
      auto P = ProjChartPoint::from_affine(s), Ph = ProjChartPoint::from_affine(sh);
      if (!eval_edge_glue(curve, l, P, Ph).is_zero() || !eval_edge_glue(curve, l, Ph, P).is_zero())
        res.problems.push_back("nonzero glue residual at " + x.to_string());
      if (!(solve_neighbor(curve, l, sh) == s)) res.problems.push_back("glue solve is not an involution at " + x.to_string());
    }
  }
  return res;
}

namespace {

struct PromotedG {
  int index;
  std::vector<SegrePoly> polys;
};

std::vector<PromotedG> promoted_glue(const Coeffs5& aprime) {
  std::vector<PromotedG> out;
  auto G = numeric_G(aprime);
  for (int i = 0; i < 9; ++i) {
    auto bd = G[i].bidegrees(x_vars(), y_vars());
    auto [da, db] = *bd.begin();
    const auto& side = da < db ? x_vars() : y_vars();
    PromotedG p{i, {}};
    for (const auto& m : slack_monomials(side, da < db ? db - da : da - db))
      for (auto& q : promote_bihomogeneous(G[i], m)) p.polys.push_back(std::move(q));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Report full_acceptance(const Genus2Curve& curve, const std::string& prefix, const AcceptanceOptions& opts) {
  Report r;
  auto id = [&](const std::string& s) { return prefix + s; };
  const auto classes = enumerate_classes(curve);
  const auto points = affine_points(curve);
  const auto roots = weierstrass_points(curve);

  // Chart correctness.
  {
    auto raw = enumerate_classes_raw(curve);
    r.add(id("C2.enumeration-agree"), raw == classes, "classes=" + std::to_string(classes.size()));
    std::vector<AffineChartPoint> off;
    std::size_t bad = 0;
    for (const auto& x : classes) {
      if (is_on_theta(x)) continue;
      auto s = embed(x);
      auto [e0, e1] = eval_e(curve.a(), s);
      if (!e0.is_zero() || !e1.is_zero()) ++bad;
      off.push_back(s);
    }
    std::sort(off.begin(), off.end(), chart_less);
    r.add(id("C2.off-theta-satisfy-e"), bad == 0, "failures=" + std::to_string(bad));
    auto sols = affine_chart_solutions(curve.a());
    std::size_t invalid = 0;
    for (const auto& s : sols) {
      try {
        (void)divisor_from_chart(curve, s);
      } catch (const std::invalid_argument&) {
        ++invalid;
      }
    }
    r.add(id("C2.scan-solutions-valid"), invalid == 0, "scan=" + std::to_string(sols.size()) + " invalid=" + std::to_string(invalid));
    r.add(id("C2.scan-count=off-theta"), sols.size() == off.size() && sols == off, count_detail(sols.size(), off.size()));
  }

  // Glue against Cantor.
  {
    auto co = cross_oracle(curve, classes);
    std::string d = "checked=" + std::to_string(co.checked) + " mismatches=" + std::to_string(co.mismatches) +
                    " skipped=" + std::to_string(co.skipped[0]) + "/" + std::to_string(co.skipped[1]) + "/" +
                    std::to_string(co.skipped[2]) + " expected-skipped=" + std::to_string(co.expected_skipped[0]);
    if (!co.problems.empty()) d += " first-problem=" + co.problems.front();
    r.add(id("C3.glue-vs-cantor"), co.ok(), d);
  }

  // Octo model.
  CubeModel cube = build_model(curve);
  CensusResult cen = census(curve, classes, opts.threads);
  {
    std::size_t resid = 0;
    for (const auto& rec : cen.records) resid += !rec.residuals.ok();
    r.add(id("C4.residuals-empty"), resid == 0, "lifted=" + std::to_string(cen.records.size()) + " nonzero=" + std::to_string(resid));
    r.add(id("C4.lift-injective"), cen.injective);
    std::map<TypeClass::Tag, std::size_t> by_tag;
    std::set<std::size_t> single_counts;
    std::map<std::string, std::size_t> single;
    for (const auto& rec : cen.records) {
      ++by_tag[rec.tclass.tag];
      if (rec.tclass.tag == TypeClass::Tag::SingleTheta) ++single[rec.tclass.c.to_string()];
    }
    for (std::uint8_t c = 0; c < 8; ++c) single_counts.insert(single[CubeIndex{c}.to_string()]);
    r.add(id("C4.subgroup-ball=8"), by_tag[TypeClass::Tag::SubgroupBall] == 8, count_detail(by_tag[TypeClass::Tag::SubgroupBall], 8));
    std::size_t want_anti = roots.size() == 5 ? 8 : 0;
    r.add(id("C4.antipodal-pair=" + std::to_string(want_anti)), by_tag[TypeClass::Tag::AntipodalPair] == want_anti,
          count_detail(by_tag[TypeClass::Tag::AntipodalPair], want_anti));
    r.add(id("C4.single-theta-equal"), single_counts.size() == 1 && *single_counts.begin() == cen.expected_single_theta,
          "per-corner=" + std::to_string(*single_counts.begin()) + " expected=" + std::to_string(cen.expected_single_theta));
    std::size_t others = by_tag[TypeClass::Tag::SubgroupBall] + by_tag[TypeClass::Tag::AntipodalPair] +
                         by_tag[TypeClass::Tag::SingleTheta];
    r.add(id("C4.generic=total-others"),
          by_tag[TypeClass::Tag::Generic] == classes.size() - others && by_tag[TypeClass::Tag::Generic] == cen.expected_generic,
          "generic=" + std::to_string(by_tag[TypeClass::Tag::Generic]) + " total=" + std::to_string(classes.size()));
    r.add(id("C4.invalid=0"), cen.invalid == 0, "invalid=" + std::to_string(cen.invalid));
    r.add(id("C4.census-consistent"), cen.ok(), cen.problems.empty() ? "" : cen.problems.front());
  }

  // Quad model negative results.
  {
    ChartModel quad = build_quad_model(curve);
    PointSolver qs(quad);
    auto cnt = [&](const char* t) { return qs.count(qs.with_type(parse_infinity_type(t))); };
    std::size_t c1000 = cnt("1000"), c0000 = cnt("0000"), c1010 = cnt("1010"), c1001 = cnt("1001");
    std::size_t c1000_pos = r.checks.size();
    r.add(id("C5.quad-type-1000=1"), c1000 == 1, count_detail(c1000, 1));
    r.add(id("C5.quad-type-0000=2"), c0000 == 2, count_detail(c0000, 2));
    r.add(id("C5.quad-type-1010=0"), c1010 == 0, count_detail(c1010, 0));
    r.add(id("C5.quad-type-1001=0"), c1001 == 0, count_detail(c1001, 0));

    PointSolver cs(cube);
    auto extra = qs.solve(qs.with_type(parse_infinity_type("0000")));
    std::size_t extensions = 0;
    for (const auto& p : extra) {
      auto c = cs.no_constraints();
      for (std::size_t pos = 0; pos < 4; ++pos) c.fixed[pos] = *cs.candidate_index(p.charts[pos]);
      extensions += cs.count(c);
    }
    r.add(id("C5.extraneous-not-extendable"), extensions == 0, "extensions=" + std::to_string(extensions));

    // Corners whose neighbours all lie at infinity are not pinned down by the
    // glue: corner 11 in the quad type 1000, and the centre of each subgroup
    // ball in the cube. Everything else is forced.
    {
      auto sols = qs.solve(qs.with_type(parse_infinity_type("1000")));
      MumfordDivisor x12 = mumford_add(curve, marked_two_torsion(curve, 1), marked_two_torsion(curve, 2));
      ModelPoint want = lift(quad, x12);
      std::set<ProjChartPoint> free_corner;
      bool forced = !sols.empty();
      for (const auto& p : sols) {
        for (std::size_t pos = 0; pos < 3; ++pos) forced = forced && p.charts[pos] == want.charts[pos];
        free_corner.insert(p.charts[3]);
      }
      std::size_t boundary = 0, verified = 0;
      for (const auto& c : qs.candidates()) {
        if (!c.at_infinity()) continue;
        ++boundary;
        ModelPoint q = want;
        q.charts[3] = c;
        verified += verify_point(quad, q).ok();
      }
      r.add(id("C5.quad-type-1000-structure"),
            forced && free_corner.size() == boundary && sols.size() == boundary && verified == boundary,
            "corners 00,01,10 = lift(X1+X2); corner 11 ranges over all " + std::to_string(boundary) +
                " closure points at infinity");
      r.checks[c1000_pos].detail += " (corner 11 unconstrained: " + std::to_string(boundary) + " boundary points)";
    }

    if (opts.completeness) {
      auto all = cs.solve(cs.no_constraints());
      std::set<ModelPoint> lifted;
      for (const auto& rec : cen.records) lifted.insert(rec.point);
      std::size_t boundary = 0;
      for (const auto& c : cs.candidates()) boundary += c.at_infinity();
      std::size_t extra = 0, unexplained = 0;
      for (const auto& p : all) {
        if (lifted.count(p)) continue;
        ++extra;
        bool explained = false;
        for (const auto& rec : cen.records) {
          if (rec.tclass.tag != TypeClass::Tag::SubgroupBall) continue;
          bool same = true;
          for (std::size_t pos = 0; pos < 8 && same; ++pos)
            same = pos == rec.tclass.c.bits || p.charts[pos] == rec.point.charts[pos];
          explained = explained || (same && p.charts[rec.tclass.c.bits].at_infinity());
        }
        unexplained += !explained;
      }
      std::size_t lifted_found = all.size() - extra;
      r.add(id("C4.model-points=lifts+ball-centres"),
            lifted_found == lifted.size() && unexplained == 0 && extra == 8 * (boundary - 1),
            "solutions=" + std::to_string(all.size()) + " lifts=" + std::to_string(lifted_found) + "/" +
                std::to_string(lifted.size()) + " extra=" + std::to_string(extra) + " (8 ball centres x " +
                std::to_string(boundary - 1) + " other boundary points) unexplained=" + std::to_string(unexplained));
    }
  }

  // Cube combinatorics.
  {
    std::size_t face = 0, ball = 0;
    for (const auto& rec : cen.records) {
      face += !face_rule_holds(rec.type);
      ball += !radius2_rule_holds(rec.type);
    }
    r.add(id("C6.face-rule"), face == 0, "violations=" + std::to_string(face));
    r.add(id("C6.radius2-rule"), ball == 0, "violations=" + std::to_string(ball));
  }

  // Segre.
  {
    std::mt19937_64 rng(opts.seed);
    std::vector<ProjChartPoint> pool;
    for (const auto& rec : cen.records)
      for (const auto& c : rec.point.charts) pool.push_back(c);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t checked = 0, failed = 0, wrong_count = 0;
    for (std::size_t n = 0; n < opts.segre_random_pairs; ++n) {
      auto q = check_quadrics_exhaustive(segre_pair(pool[pick(rng)], pool[pick(rng)]));
      checked += q.checked;
      failed += q.failed;
      wrong_count += q.checked != quadric_count(4, 4);
    }
    r.add(id("C7.quadrics-random-pairs"), failed == 0 && wrong_count == 0,
          "pairs=" + std::to_string(opts.segre_random_pairs) + " relations=" + std::to_string(checked) +
              " failed=" + std::to_string(failed));
    r.add(id("C7.quadric-count(4,4)=100"), quadric_count(4, 4) == 100, "got=" + std::to_string(quadric_count(4, 4)));

    std::size_t evals = 0, nonzero = 0, polys = 0;
    for (int l = 1; l <= 3; ++l) {
      auto promoted = promoted_glue(cube.recentered(l));
      for (const auto& p : promoted) polys += p.polys.size();
      for (const auto& e : cube.edges()) {
        if (e.direction != l) continue;
        for (const auto& rec : cen.records) {
          auto A = ProjChartPoint(edge_coords(cube, l, rec.point.charts[e.from]));
          auto B = ProjChartPoint(edge_coords(cube, l, rec.point.charts[e.to]));
          for (auto [P, Q] : {std::pair{A, B}, std::pair{B, A}}) {
            auto z = segre_pair(P, Q);
            for (const auto& pg : promoted)
              for (const auto& sp : pg.polys) {
                ++evals;
                nonzero += !sp.evaluate(z).is_zero();
              }
          }
        }
      }
    }
    r.add(id("C7.promoted-glue-vanish"), nonzero == 0,
          "polys=" + std::to_string(polys) + " evaluations=" + std::to_string(evals) + " nonzero=" + std::to_string(nonzero));

    std::size_t mchecked = 0, mfailed = 0;
    for (std::size_t n = 0; n < 50 && !cen.records.empty(); ++n) {
      const auto& rec = cen.records[std::uniform_int_distribution<std::size_t>(0, cen.records.size() - 1)(rng)];
      auto q = check_quadrics_sampled(segre_multi(rec.point), 200, rng);
      mchecked += q.checked;
      mfailed += q.failed;
    }
    r.add(id("C7.multi-segre-sampled"), mfailed == 0, "relations=" + std::to_string(mchecked) + " failed=" + std::to_string(mfailed));
  }
  (void)points;
  return r;
}

Report spot_lifts(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes, const std::string& prefix) {
  Report r;
  CubeModel cube = build_model(curve);
  std::size_t resid = 0, invalid = 0, face = 0, ball = 0, glue = 0, glue_checked = 0;
  std::map<std::string, std::size_t> tally;
  std::set<ModelPoint> distinct;
  for (const auto& x : classes) {
    ModelPoint p = lift(cube, x);
    distinct.insert(p);
    resid += !verify_point(cube, p).ok();
    auto t = infinity_type(p);
    auto tc = classify_type(t);
    invalid += tc.tag == TypeClass::Tag::Invalid;
    ++tally[tc.tag == TypeClass::Tag::Generic ? "Generic" : tc.to_string().substr(0, tc.to_string().find('('))];
    face += !face_rule_holds(t);
    ball += !radius2_rule_holds(t);
    for (int l = 1; l <= 3; ++l) {
      auto y = mumford_add(curve, x, marked_two_torsion(curve, l));
      if (is_on_theta(x) || is_on_theta(y)) continue;
      ++glue_checked;
      glue += !(solve_neighbor(curve, l, embed(x)) == embed(y));
    }
  }
  std::string t;
  for (const auto& [k, v] : tally) t += (t.empty() ? "" : ",") + k + ":" + std::to_string(v);
  r.add(prefix + "residuals-empty", resid == 0, "classes=" + std::to_string(classes.size()) + " types=" + t);
  r.add(prefix + "lift-injective", distinct.size() == classes.size());
  r.add(prefix + "types-valid", invalid == 0 && face == 0 && ball == 0,
        "invalid=" + std::to_string(invalid) + " face=" + std::to_string(face) + " radius2=" + std::to_string(ball));
  r.add(prefix + "glue-vs-cantor", glue == 0, "checked=" + std::to_string(glue_checked) + " mismatches=" + std::to_string(glue));
  return r;
}

std::vector<MumfordDivisor> rational_spot_classes(const Genus2Curve& curve,
                                                  const std::vector<std::pair<long, long>>& points) {
  Field F = curve.field();
  std::vector<MumfordDivisor> sub{MumfordDivisor::zero(curve)};
  for (int l = 1; l <= 3; ++l) {
    std::size_t n = sub.size();
    for (std::size_t i = 0; i < n; ++i) sub.push_back(mumford_add(curve, sub[i], marked_two_torsion(curve, l)));
  }
  std::vector<MumfordDivisor> base;
  for (auto [x, y] : points) base.push_back(MumfordDivisor::point(curve, FieldElement(F, x), FieldElement(F, y)));
  std::vector<MumfordDivisor> gens = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      gens.push_back(mumford_add(curve, base[i], base[j]));
      gens.push_back(mumford_sub(curve, base[i], base[j]));
    }
  for (const auto& b : base) gens.push_back(mumford_mul(curve, b, 2));
  std::set<MumfordDivisor> out(sub.begin(), sub.end());
  for (const auto& g : gens)
    for (const auto& s : sub) out.insert(mumford_add(curve, g, s));
  return {out.begin(), out.end()};
}

}  // namespace jaccube
