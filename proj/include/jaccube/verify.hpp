#pragma once

#include "jaccube/coords.hpp"
#include "jaccube/cube_model.hpp"
#include "jaccube/curve.hpp"
#include "jaccube/mpoly.hpp"
#include "jaccube/mumford.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace jaccube {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  void add(std::string id, bool pass, std::string detail = {});
  bool ok() const;
  // "PASS|FAIL <id> <detail>" per line.
  std::string to_text() const;
  std::string to_json_lines() const;
};

// The glue formulas under test; replaceable so mutation tests can inject
// broken variants.
struct GlueFormulas {
  std::function<std::array<MPoly, 9>(const CoeffVec<MPoly>&, const Coords4<MPoly>&, const Coords4<MPoly>&)> g;
  std::function<std::array<MPoly, 9>(const CoeffVec<MPoly>&, const Coords5<MPoly>&, const Coords5<MPoly>&)> G;
  static GlueFormulas standard();
  // g2 with the sign of v0*hu0 flipped (and G2 likewise).
  static GlueFormulas mutated_g2();
};

// Exact symbolic checks over Q with a0..a4, rho as indeterminates.
Report check_identities(const GlueFormulas& formulas = GlueFormulas::standard());

struct CrossOracleResult {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::array<std::size_t, 3> skipped{};
  std::array<std::size_t, 3> expected_skipped{};
  std::vector<std::string> problems;
  bool ok() const { return mismatches == 0 && skipped == expected_skipped && problems.empty(); }
};

// solve_neighbor against Cantor addition for every class and direction.
CrossOracleResult cross_oracle(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes);

struct AcceptanceOptions {
  std::size_t segre_random_pairs = 1000;
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
  // Run the full-cube completeness search (all F_p-points of the model).
  bool completeness = true;
};

// Criteria 2-7 for one curve over a small prime field; ids are prefixed.
Report full_acceptance(const Genus2Curve& curve, const std::string& prefix = "",
                       const AcceptanceOptions& opts = AcceptanceOptions{});

// Lift and verify explicit classes (used over Q).
Report spot_lifts(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes, const std::string& prefix);

// Classes over Q generated from the given small points and the marked
// two-torsion: all subgroup translates plus pairwise sums.
std::vector<MumfordDivisor> rational_spot_classes(const Genus2Curve& curve,
                                                  const std::vector<std::pair<long, long>>& points);

}  // namespace jaccube
