#include "jaccube/chart.hpp"
#include "jaccube/cube_model.hpp"
#include "jaccube/curve.hpp"
#include "jaccube/mumford.hpp"
#include "jaccube/segre.hpp"
#include "jaccube/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace jaccube;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text << '\n';
}

unsigned threads_hint() {
  if (const char* s = std::getenv("JACCUBE_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && n >= 1 && n <= 256) return static_cast<unsigned>(n);
  }
  return 1;
}

Genus2Curve load(const std::string& path) {
  try {
    return load_curve_config(path);
  } catch (const CurveError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct ClassArgs {
  std::optional<std::string> u0, u1, v0, v1;
  bool zero = false;
  std::vector<std::string> theta;

  void attach(CLI::App* app) {
    app->add_option("--u0", u0);
    app->add_option("--u1", u1);
    app->add_option("--v0", v0);
    app->add_option("--v1", v1);
    app->add_flag("--zero", zero, "the identity class");
    app->add_option("--theta", theta, "point (x, y); the class P - P_inf")->expected(2);
  }

  MumfordDivisor resolve(const Genus2Curve& curve) const {
    Field F = curve.field();
    int chosen = (u0 || u1 || v0 || v1) + zero + !theta.empty();
    if (chosen != 1) throw UsageError("give exactly one of --u0/--u1/--v0/--v1, --zero, --theta x y");
    if (zero) return MumfordDivisor::zero(curve);
    if (!theta.empty())
      return MumfordDivisor::point(curve, FieldElement::parse(F, theta[0]), FieldElement::parse(F, theta[1]));
    if (!(u0 && u1 && v0 && v1)) throw UsageError("--u0, --u1, --v0 and --v1 go together");
    AffineChartPoint s{FieldElement::parse(F, *u0), FieldElement::parse(F, *u1), FieldElement::parse(F, *v0),
                       FieldElement::parse(F, *v1)};
    return divisor_from_chart(curve, s);
  }
};

int print_report(const Report& r) {
  std::cout << (g_json ? r.to_json_lines() : r.to_text());
  return r.ok() ? kOk : kFail;
}

int cmd_check_curve(const std::string& cfg) {
  Genus2Curve c = load(cfg);
  std::vector<std::string> w;
  for (const auto& x : weierstrass_points(c)) w.push_back(x.to_string());
  json j{{"field", c.field().to_string()}, {"weierstrass", w}};
  std::string text = c.to_config() + "weierstrass =";
  for (const auto& s : w) text += " " + s;
  for (int l = 1; l <= 3; ++l) {
    Coeffs5 ap = recenter(c, c.marked_root(l)).aprime;
    std::vector<std::string> v;
    for (const auto& x : ap) v.push_back(x.to_string());
    j["recentered"].push_back(v);
    text += "\nrecentered " + std::to_string(l) + " =";
    for (const auto& s : v) text += " " + s;
  }
  j["status"] = "ok";
  emit(j, text + "\nstatus = ok");
  return kOk;
}

int cmd_enumerate(const std::string& cfg) {
  Genus2Curve c = load(cfg);
  auto classes = enumerate_classes(c);
  for (const auto& x : classes) {
    std::string t = classify(c, x).to_string();
    emit(json{{"u", x.u().coeff_list()}, {"v", x.v().coeff_list()}, {"type", t}}, x.to_string() + " " + t);
  }
  emit(json{{"classes", classes.size()}}, "classes=" + std::to_string(classes.size()));
  return kOk;
}

int cmd_lift(const std::string& cfg, const ClassArgs& args) {
  Genus2Curve c = load(cfg);
  MumfordDivisor x = args.resolve(c);
  CubeModel model = build_model(c);
  ModelPoint p = lift(model, x);
  ResidualReport rr = verify_point(model, p);
  InfinityType t = infinity_type(p);
  for (std::size_t pos = 0; pos < p.charts.size(); ++pos) {
    std::string corner = model.corners()[pos].to_string();
    emit(json{{"corner", corner}, {"chart", p.charts[pos].to_string()}}, corner + " " + p.charts[pos].to_string());
  }
  std::string tc = classify_type(t).to_string();
  emit(json{{"class", x.to_string()}, {"type", t.to_string()}, {"tclass", tc}, {"residuals", rr.to_string()}},
       "class " + x.to_string() + "\ntype " + t.to_string() + " " + tc + "\nresiduals " + rr.to_string());
  return rr.ok() ? kOk : kFail;
}

int cmd_census(const std::string& cfg) {
  Genus2Curve c = load(cfg);
  CensusResult r = census(c, threads_hint());
  for (const auto& rec : r.records)
    emit(json{{"class", rec.cls.to_string()}, {"type", rec.type.to_string()}, {"tclass", rec.tclass.to_string()},
              {"residuals", rec.residuals.ok() ? "ok" : rec.residuals.to_string()}},
         rec.line());
  std::map<std::string, std::size_t> by_tag;
  for (const auto& [k, v] : r.tally) by_tag[k.substr(0, k.find('('))] += v;
  for (const auto& [k, v] : r.tally) emit(json{{"tally", k}, {"count", v}}, "tally " + k + " " + std::to_string(v));
  for (const char* tag : {"SubgroupBall", "AntipodalPair", "SingleTheta", "Generic", "Invalid"})
    emit(json{{"tag", tag}, {"count", by_tag[tag]}}, std::string(tag) + " count " + std::to_string(by_tag[tag]));
  emit(json{{"classes", r.records.size()}, {"injective", r.injective}, {"status", r.ok() ? "ok" : "FAIL"}},
       "classes=" + std::to_string(r.records.size()) + " injective=" + (r.injective ? "true" : "false") +
           " status=" + (r.ok() ? "ok" : "FAIL"));
  for (const auto& pr : r.problems) emit(json{{"problem", pr}}, "problem " + pr);
  return r.ok() ? kOk : kFail;
}

int cmd_quad_demo(const std::string& cfg) {
  Genus2Curve c = load(cfg);
  ChartModel quad = build_quad_model(c);
  PointSolver qs(quad);
  auto extra = qs.solve(qs.with_type(parse_infinity_type("0000")));
  CubeModel cube = build_model(c);
  PointSolver cs(cube);
  std::size_t extensions = 0;
  json pts = json::array();
  std::string text = "extraneous=" + std::to_string(extra.size());
  for (std::size_t i = 0; i < extra.size(); ++i) {
    auto cons = cs.no_constraints();
    std::string ptxt;
    for (std::size_t pos = 0; pos < 4; ++pos) {
      cons.fixed[pos] = *cs.candidate_index(extra[i].charts[pos]);
      ptxt += (pos ? " " : "") + extra[i].charts[pos].to_string();
    }
    extensions += cs.count(cons);
    pts.push_back(ptxt);
    text += " point" + std::to_string(i + 1) + "=[" + ptxt + "]";
  }
  bool eliminated = extensions == 0;
  text += std::string(" eliminated-in-octo=") + (eliminated ? "true" : "false");
  emit(json{{"extraneous", extra.size()}, {"points", pts}, {"eliminated_in_octo", eliminated}}, text);
  return extra.size() == 2 && eliminated ? kOk : kFail;
}

int cmd_segre(const std::string& cfg, const ClassArgs& args, std::optional<std::string> pair) {
  Genus2Curve c = load(cfg);
  MumfordDivisor x = args.resolve(c);
  CubeModel model = build_model(c);
  ModelPoint p = lift(model, x);
  SegrePoint z = [&] {
    if (!pair) return segre_multi(p);
    auto dash = pair->find('-');
    if (dash == std::string::npos) throw UsageError("--pair expects corners like 000-001");
    auto a = parse_infinity_type(pair->substr(0, dash)), b = parse_infinity_type(pair->substr(dash + 1));
    if (a.bits.size() != 3 || b.bits.size() != 3) throw UsageError("--pair expects corners like 000-001");
    auto idx = [](const InfinityType& t) { return 4 * t.bits[0] + 2 * t.bits[1] + t.bits[2]; };
    return segre_pair(p.charts[idx(a)], p.charts[idx(b)]);
  }();
  for (const auto& [key, v] : z.entries()) {
    auto k = z.unpack(key);
    std::vector<int> ki(k.begin(), k.end());
    std::string t;
    for (int i : ki) t += std::to_string(i) + " ";
    emit(json{{"index", ki}, {"value", v.to_string()}}, t + ": " + v.to_string());
  }
  emit(json{{"nonzero", z.nonzero_count()}, {"factors", z.factors()}},
       "nonzero=" + std::to_string(z.nonzero_count()) + " factors=" + std::to_string(z.factors()));
  return kOk;
}

int cmd_accept(const std::string& cfg, bool mutate) {
  Genus2Curve c = load(cfg);
  Report r = check_identities(mutate ? GlueFormulas::mutated_g2() : GlueFormulas::standard());
  if (c.field().is_prime()) {
    AcceptanceOptions opts;
    opts.threads = threads_hint();
    for (auto& ch : full_acceptance(c, "", opts).checks) r.checks.push_back(std::move(ch));
  } else {
    std::vector<std::pair<long, long>> none;
    for (auto& ch : spot_lifts(c, rational_spot_classes(c, none), "Q.").checks) r.checks.push_back(std::move(ch));
  }
  return print_report(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eight-chart model of a genus-2 Jacobian over exact fields"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
  bool mutate = false;
  app.add_flag("--mutate-g2", mutate, "use a deliberately mis-signed g2 (harness self-test)");

  std::string cfg;
  auto* check = app.add_subcommand("check-curve", "validate a curve config");
  check->add_option("cfg", cfg)->required();
  auto* enumerate = app.add_subcommand("enumerate", "list all divisor classes");
  enumerate->add_option("cfg", cfg)->required();
  ClassArgs lift_args, segre_args;
  auto* liftc = app.add_subcommand("lift", "lift one class to the eight charts");
  liftc->add_option("cfg", cfg)->required();
  lift_args.attach(liftc);
  auto* censusc = app.add_subcommand("census", "lift every class and tally infinity types");
  censusc->add_option("cfg", cfg)->required();
  auto* quad = app.add_subcommand("quad-demo", "extraneous points of the four-chart model");
  quad->add_option("cfg", cfg)->required();
  auto* ident = app.add_subcommand("identities", "symbolic identity suite");
  auto* segre = app.add_subcommand("segre", "sparse Segre coordinates of a lifted class");
  segre->add_option("cfg", cfg)->required();
  segre_args.attach(segre);
  std::optional<std::string> pair;
  segre->add_option("--pair", pair, "two corners, e.g. 000-001");
  auto* accept = app.add_subcommand("accept", "full acceptance report");
  accept->add_option("cfg", cfg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  g_json = format == "json-lines";

  try {
    if (*check) return cmd_check_curve(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*liftc) return cmd_lift(cfg, lift_args);
    if (*censusc) return cmd_census(cfg);
    if (*quad) return cmd_quad_demo(cfg);
    if (*ident) return print_report(check_identities(mutate ? GlueFormulas::mutated_g2() : GlueFormulas::standard()));
    if (*segre) return cmd_segre(cfg, segre_args, pair);
    if (*accept) return cmd_accept(cfg, mutate);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CurveError& e) {
    std::cerr << "invalid curve: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
