#include "jaccube/cube_model.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace jaccube {

std::string CubeIndex::to_string() const {
  return std::string{static_cast<char>('0' + i()), static_cast<char>('0' + j()), static_cast<char>('0' + k())};
}

ChartModel::ChartModel(const Genus2Curve& curve, std::vector<CubeIndex> corners)
    : curve_(curve), corners_(std::move(corners)) {
  chart_ = std::make_shared<const ChartSystem>(curve.a());
  for (int l = 1; l <= 3; ++l) {
    Coeffs5 ap = recenter(curve, curve.marked_root(l)).aprime;
    if (!ap[0].is_zero() || ap[1].is_zero()) throw std::logic_error("recentred coefficients violate a0 = 0, a1 != 0");
    aprime_.push_back(ap);
  }
  for (std::size_t a = 0; a < corners_.size(); ++a)
    for (std::size_t b = a + 1; b < corners_.size(); ++b) {
      unsigned diff = corners_[a].bits ^ corners_[b].bits;
      if (std::popcount(diff) == 1) edges_.push_back({a, b, std::countr_zero(diff) + 1});
    }
  for (const auto& c : corners_) {
    MumfordDivisor x = MumfordDivisor::zero(curve);
    for (int l = 1; l <= 3; ++l)
      if (c.bits & direction_mask(l)) x = mumford_add(curve, x, marked_two_torsion(curve, l));
    corner_class_.push_back(x);
  }
}

ChartModel ChartModel::cube(const Genus2Curve& curve) {
  std::vector<CubeIndex> c;
  for (std::uint8_t b = 0; b < 8; ++b) c.push_back({b});
  return ChartModel(curve, std::move(c));
}

ChartModel ChartModel::quad(const Genus2Curve& curve, int l1, int l2) {
  if (l1 == l2 || l1 < 1 || l1 > 3 || l2 < 1 || l2 > 3) throw std::invalid_argument("quad needs two distinct directions");
  std::uint8_t m1 = direction_mask(l1), m2 = direction_mask(l2);
  std::vector<CubeIndex> c{{0}, {m1}, {m2}, {static_cast<std::uint8_t>(m1 | m2)}};
  return ChartModel(curve, std::move(c));
}

CubeModel build_model(const Genus2Curve& curve) { return ChartModel::cube(curve); }
ChartModel build_quad_model(const Genus2Curve& curve, int l1, int l2) { return ChartModel::quad(curve, l1, l2); }

std::string ChartModel::edge_id(const CubeEdge& e, bool reversed) const {
  std::string a = corners_[e.from].to_string(), b = corners_[e.to].to_string();
  return reversed ? b + "-" + a : a + "-" + b;
}

GlueResidual ChartModel::edge_residual(const CubeEdge& e, const ProjChartPoint& from, const ProjChartPoint& to,
                                       bool reversed) const {
  const FieldElement& rho = curve_.marked_root(e.direction);
  auto S = translate_coords(from.coords(), rho);
  auto T = translate_coords(to.coords(), rho);
  return reversed ? eval_G(recentered(e.direction), T, S) : eval_G(recentered(e.direction), S, T);
}

ProjChartPoint corner_chart(const MumfordDivisor& y) {
  Field F = y.u().field();
  FieldElement zero = FieldElement::zero(F), one = FieldElement::one(F);
  switch (y.degree()) {
    case 0: return ProjChartPoint(Coords5<FieldElement>{one, zero, zero, zero, zero});
    case 1: return ProjChartPoint(Coords5<FieldElement>{zero, zero, y.u().coeff(0), one, zero});
    default: return ProjChartPoint::from_affine(embed(y));
  }
}

ModelPoint lift(const ChartModel& model, const MumfordDivisor& x) {
  ModelPoint p;
  for (std::size_t pos = 0; pos < model.corners().size(); ++pos)
    p.charts.push_back(corner_chart(mumford_add(model.curve(), x, model.corner_class(pos))));
  return p;
}

std::string ResidualReport::to_string() const {
  if (entries.empty()) return "ok";
  std::string s;
  for (const auto& e : entries) s += (s.empty() ? "" : " ") + e.id + "=" + e.value;
  return s;
}

ResidualReport verify_point(const ChartModel& model, const ModelPoint& p) {
  if (p.charts.size() != model.corners().size()) throw std::invalid_argument("point has wrong number of charts");
  ResidualReport r;
  for (std::size_t pos = 0; pos < p.charts.size(); ++pos) {
    auto [E0, E1] = model.chart_system()(p.charts[pos].coords());
    std::string c = model.corners()[pos].to_string();
    if (!E0.is_zero()) r.entries.push_back({"E0@" + c, E0.to_string()});
    if (!E1.is_zero()) r.entries.push_back({"E1@" + c, E1.to_string()});
    if (auto K = model.chart_system().closure(p.charts[pos].coords()); !K.is_zero())
      r.entries.push_back({"K@" + c, K.to_string()});
  }
  for (const auto& e : model.edges())
    for (bool rev : {false, true}) {
      GlueResidual g = model.edge_residual(e, p.charts[e.from], p.charts[e.to], rev);
      for (int i : g.nonzero())
        r.entries.push_back({"G" + std::to_string(i + 1) + "@" + model.edge_id(e, rev), g.values[i].to_string()});
    }
  return r;
}

std::string InfinityType::to_string() const {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

InfinityType infinity_type(const ModelPoint& p) {
  InfinityType t;
  for (const auto& c : p.charts) t.bits.push_back(!c.at_infinity());
  return t;
}

InfinityType parse_infinity_type(const std::string& s) {
  InfinityType t;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("infinity type must be a 0/1 string");
    t.bits.push_back(ch == '1');
  }
  return t;
}

std::string TypeClass::to_string() const {
  switch (tag) {
    case Tag::Generic: return "Generic";
    case Tag::SingleTheta: return "SingleTheta(" + c.to_string() + ")";
    case Tag::AntipodalPair: return "AntipodalPair(" + c.to_string() + ")";
    case Tag::SubgroupBall: return "SubgroupBall(" + c.to_string() + ")";
    case Tag::Invalid: return "Invalid";
  }
  return "?";
}

TypeClass classify_type(const InfinityType& t) {
  using Tag = TypeClass::Tag;
  if (t.bits.size() != 8) return {};
  unsigned zeros = 0;
  for (unsigned c = 0; c < 8; ++c)
    if (!t.bits[c]) zeros |= 1u << c;
  if (zeros == 0) return {Tag::Generic, {}};
  for (unsigned c = 0; c < 8; ++c) {
    auto idx = CubeIndex{static_cast<std::uint8_t>(c)};
    if (zeros == (1u << c)) return {Tag::SingleTheta, idx};
    unsigned anti = (1u << c) | (1u << (c ^ 7));
    if (zeros == anti) return {Tag::AntipodalPair, CubeIndex{static_cast<std::uint8_t>(std::min(c, c ^ 7))}};
    unsigned ball = (1u << c) | (1u << (c ^ 1)) | (1u << (c ^ 2)) | (1u << (c ^ 4));
    if (zeros == ball) return {Tag::SubgroupBall, idx};
  }
  return {};
}

bool face_rule_holds(const InfinityType& t) {
  if (t.bits.size() != 8) return false;
  for (unsigned axis : {1u, 2u, 4u})
    for (unsigned side : {0u, 1u}) {
      int zeros = 0;
      for (unsigned c = 0; c < 8; ++c)
        if (((c & axis) != 0) == (side == 1) && !t.bits[c]) ++zeros;
      if (zeros == 2) return false;
    }
  return true;
}

bool radius2_rule_holds(const InfinityType& t) {
  if (t.bits.size() != 8) return false;
  for (unsigned c = 0; c < 8; ++c) {
    bool any = false;
    for (unsigned d = 0; d < 8; ++d)
      if (std::popcount(c ^ d) <= 2 && t.bits[d]) any = true;
    if (!any) return false;
  }
  return true;
}

std::string CensusRecord::line() const {
  return cls.to_string() + " | " + type.to_string() + " | " + tclass.to_string() + " | " +
         (residuals.ok() ? std::string("ok") : "FAIL(" + std::to_string(residuals.entries.size()) + ")");
}

CensusResult census(const Genus2Curve& curve, unsigned threads) {
  return census(curve, enumerate_classes(curve), threads);
}

CensusResult census(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes, unsigned threads) {
  using Tag = TypeClass::Tag;
  CubeModel model = build_model(curve);
  std::vector<std::optional<CensusRecord>> slots(classes.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ModelPoint p = lift(model, classes[i]);
      InfinityType t = infinity_type(p);
      slots[i] = CensusRecord{classes[i], p, t, classify_type(t), verify_point(model, p)};
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(classes.size(), 1))));
  if (threads == 1) {
    work(0, classes.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (classes.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t b = std::min(classes.size(), t * chunk), e = std::min(classes.size(), b + chunk);
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  CensusResult r;
  for (auto& s : slots) r.records.push_back(std::move(*s));
  std::sort(r.records.begin(), r.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return a.cls < b.cls; });

  std::set<ModelPoint> distinct;
  for (const auto& rec : r.records) {
    distinct.insert(rec.point);
    ++r.tally[rec.tclass.to_string()];
    if (!rec.residuals.ok()) r.problems.push_back("nonzero residuals for " + rec.cls.to_string() + ": " + rec.residuals.to_string());
    if (rec.tclass.tag == Tag::Invalid) {
      ++r.invalid;
      r.problems.push_back("invalid infinity type " + rec.type.to_string() + " for " + rec.cls.to_string());
    }
    if (!face_rule_holds(rec.type)) r.problems.push_back("face rule fails for " + rec.cls.to_string());
    if (!radius2_rule_holds(rec.type)) r.problems.push_back("radius-2 rule fails for " + rec.cls.to_string());
  }
  r.injective = distinct.size() == r.records.size();
  if (!r.injective) r.problems.push_back("lift is not injective");

  auto roots = weierstrass_points(curve);
  auto points = affine_points(curve);
  auto count = [&](const std::string& k) {
    auto it = r.tally.find(k);
    return it == r.tally.end() ? std::size_t{0} : it->second;
  };

  // Independent expectations from the group structure alone.
  r.expected_single_theta = points.size() - roots.size();
  r.expected_antipodal_each = roots.size() == 5 ? 2 : 0;
  std::set<MumfordDivisor> theta_union;
  std::vector<MumfordDivisor> theta{MumfordDivisor::zero(curve)};
  for (const auto& [x, y] : points) theta.push_back(MumfordDivisor::point(curve, x, y));
  for (std::size_t pos = 0; pos < 8; ++pos)
    for (const auto& t : theta) theta_union.insert(mumford_add(curve, t, model.corner_class(pos)));
  r.expected_generic = classes.size() - theta_union.size();

  for (std::uint8_t c = 0; c < 8; ++c) {
    CubeIndex ci{c};
    if (count("SubgroupBall(" + ci.to_string() + ")") != 1)
      r.problems.push_back("SubgroupBall(" + ci.to_string() + ") count != 1");
    if (count("SingleTheta(" + ci.to_string() + ")") != r.expected_single_theta)
      r.problems.push_back("SingleTheta(" + ci.to_string() + ") count != " + std::to_string(r.expected_single_theta));
    if (c < 4 && count("AntipodalPair(" + ci.to_string() + ")") != r.expected_antipodal_each)
      r.problems.push_back("AntipodalPair(" + ci.to_string() + ") count != " + std::to_string(r.expected_antipodal_each));
  }
  if (count("Generic") != r.expected_generic)
    r.problems.push_back("Generic count " + std::to_string(count("Generic")) + " != " + std::to_string(r.expected_generic));

  // Semantic meaning of the special types.
  for (const auto& rec : r.records) {
    if (rec.tclass.tag == Tag::Generic || rec.tclass.tag == Tag::Invalid) continue;
    MumfordDivisor y = mumford_add(curve, rec.cls, model.corner_class(rec.tclass.c.bits));
    bool good = false;
    switch (rec.tclass.tag) {
      case Tag::SubgroupBall: good = y.degree() == 0; break;
      case Tag::SingleTheta: good = y.degree() == 1 && !y.v().is_zero(); break;
      case Tag::AntipodalPair: {
        auto cl = classify(curve, y);
        good = y.degree() == 1 && y.v().is_zero() && cl.tag == ClassType::Tag::ThetaAffine;
        break;
      }
      default: break;
    }
    if (!good) r.problems.push_back("type " + rec.tclass.to_string() + " does not match class " + rec.cls.to_string());
  }
  return r;
}

PointSolver::PointSolver(const ChartModel& model) : model_(&model) {
  Field F = model.curve().field();
  auto elems = all_elements(F, 100);
  FieldElement zero = FieldElement::zero(F), one = FieldElement::one(F);
  for (const auto& s : affine_chart_solutions(model.curve().a())) cand_.push_back(ProjChartPoint::from_affine(s));
  // Points of the closure with z = 0, canonically scaled.
  const auto& sys = model.chart_system();
  for (int lead = 0; lead < 4; ++lead) {
    int free = 3 - lead;
    std::size_t total = 1;
    for (int i = 0; i < free; ++i) total *= elems.size();
    for (std::size_t n = 0; n < total; ++n) {
      std::array<FieldElement, 4> x{zero, zero, zero, zero};
      x[lead] = one;
      std::size_t m = n;
      for (int i = 3; i > lead; --i) {
        x[i] = elems[m % elems.size()];
        m /= elems.size();
      }
      Coords5<FieldElement> S{x[0], x[1], x[2], x[3], zero};
      if (sys.contains(S)) cand_.push_back(ProjChartPoint(S));
    }
  }
  std::sort(cand_.begin(), cand_.end());
  for (std::size_t i = 0; i < cand_.size(); ++i) index_.emplace(cand_[i], i);

  std::size_t K = cand_.size();
  words_ = (K + 63) / 64;
  std::set<int> dirs;
  for (const auto& e : model.edges()) dirs.insert(e.direction);
  for (int l : dirs) {
    const FieldElement& rho = model.curve().marked_root(l);
    const Coeffs5& a = model.recentered(l);
    std::vector<Coords5<FieldElement>> T;
    T.reserve(K);
    for (const auto& c : cand_) T.push_back(translate_coords(c.coords(), rho));
    auto& bits = compat_[l - 1];
    bits.assign(K * words_, 0);
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = i; j < K; ++j) {
        if (!(T[i].u0 * T[j].u0 - a[1] * T[i].z * T[j].z).is_zero()) continue;
        if (!GlueResidual{G_polys(a, T[i], T[j])}.is_zero()) continue;
        if (!GlueResidual{G_polys(a, T[j], T[i])}.is_zero()) continue;
        bits[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
  }
}

std::optional<std::size_t> PointSolver::candidate_index(const ProjChartPoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PointSolver::compatible(int l, std::size_t a, std::size_t b) const {
  return (compat_[l - 1][a * words_ + b / 64] >> (b % 64)) & 1;
}

PointSolver::Constraints PointSolver::no_constraints() const {
  Constraints c;
  c.zbits.assign(model_->corners().size(), std::nullopt);
  return c;
}

PointSolver::Constraints PointSolver::with_type(const InfinityType& t) const {
  if (t.bits.size() != model_->corners().size()) throw std::invalid_argument("type length does not match model");
  Constraints c;
  for (bool b : t.bits) c.zbits.push_back(b);
  return c;
}

void PointSolver::search(std::size_t pos, const Constraints& c, std::vector<std::size_t>& assign,
                         std::vector<ModelPoint>* out, std::size_t& found, std::size_t limit) const {
  if (found >= limit) return;
  std::size_t n = model_->corners().size();
  if (pos == n) {
    ++found;
    if (out) {
      ModelPoint p;
      for (auto a : assign) p.charts.push_back(cand_[a]);
      out->push_back(std::move(p));
    }
    return;
  }
  std::vector<std::uint64_t> mask(words_, ~std::uint64_t{0});
  if (cand_.size() % 64) mask.back() = (std::uint64_t{1} << (cand_.size() % 64)) - 1;
  if (auto it = c.fixed.find(pos); it != c.fixed.end()) {
    std::fill(mask.begin(), mask.end(), 0);
    mask[it->second / 64] = std::uint64_t{1} << (it->second % 64);
  }
  for (const auto& e : model_->edges()) {
    std::size_t other;
    if (e.to == pos && e.from < pos) other = e.from;
    else if (e.from == pos && e.to < pos) other = e.to;
    else continue;
    const std::uint64_t* row = &compat_[e.direction - 1][assign[other] * words_];
    for (std::size_t w = 0; w < words_; ++w) mask[w] &= row[w];
  }
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bitsw = mask[w];
    while (bitsw) {
      std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bitsw));
      bitsw &= bitsw - 1;
      if (c.zbits.size() > pos && c.zbits[pos] && (*c.zbits[pos] == cand_[k].at_infinity())) continue;
      assign.push_back(k);
      search(pos + 1, c, assign, out, found, limit);
      assign.pop_back();
      if (found >= limit) return;
    }
  }
}

std::vector<ModelPoint> PointSolver::solve(const Constraints& c, std::size_t limit) const {
  std::vector<ModelPoint> out;
  std::vector<std::size_t> assign;
  std::size_t found = 0;
  search(0, c, assign, &out, found, limit);
  return out;
}

std::size_t PointSolver::count(const Constraints& c) const {
  std::vector<std::size_t> assign;
  std::size_t found = 0;
  search(0, c, assign, nullptr, found, SIZE_MAX);
  return found;
}

std::vector<ModelPoint> quad_extraneous_points(const Genus2Curve& curve) {
  ChartModel quad = build_quad_model(curve);
  PointSolver solver(quad);
  return solver.solve(solver.with_type(parse_infinity_type("0000")));
}

}  // namespace jaccube
