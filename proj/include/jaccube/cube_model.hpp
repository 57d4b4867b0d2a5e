#pragma once

#include "jaccube/chart.hpp"
#include "jaccube/curve.hpp"
#include "jaccube/glue.hpp"
#include "jaccube/mumford.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jaccube {

// c = (i, j, k) packed as 4i + 2j + k; X_c = k X_1 + j X_2 + i X_3.
struct CubeIndex {
  std::uint8_t bits = 0;

  static CubeIndex of(int i, int j, int k) { return {static_cast<std::uint8_t>(4 * i + 2 * j + k)}; }
  int i() const { return (bits >> 2) & 1; }
  int j() const { return (bits >> 1) & 1; }
  int k() const { return bits & 1; }
  std::string to_string() const;
  friend auto operator<=>(const CubeIndex&, const CubeIndex&) = default;
};

// Direction l in 1..3 flips k, j, i respectively.
inline std::uint8_t direction_mask(int l) { return static_cast<std::uint8_t>(1u << (l - 1)); }

struct CubeEdge {
  std::size_t from = 0;  // positions in ChartModel::corners()
  std::size_t to = 0;
  int direction = 1;
};

// Corner charts over a set of translates X_c of Theta, tied by edge glue.
class ChartModel {
 public:
  // All eight corners.
  static ChartModel cube(const Genus2Curve& curve);
  // The four corners spanned by directions l1, l2 from 000.
  static ChartModel quad(const Genus2Curve& curve, int l1 = 1, int l2 = 2);

  const Genus2Curve& curve() const { return curve_; }
  const std::vector<CubeIndex>& corners() const { return corners_; }
  const std::vector<CubeEdge>& edges() const { return edges_; }
  std::size_t corner_equation_count() const { return 2 * corners_.size(); }
  std::size_t edge_equation_count() const { return 9 * edges_.size(); }
  const ChartSystem& chart_system() const { return *chart_; }
  const Coeffs5& recentered(int l) const { return aprime_.at(l - 1); }
  // X_c for the corner at position pos.
  const MumfordDivisor& corner_class(std::size_t pos) const { return corner_class_.at(pos); }
  std::string edge_id(const CubeEdge& e, bool reversed = false) const;

  // G on the translated coordinates, oriented from -> to (or reversed).
  GlueResidual edge_residual(const CubeEdge& e, const ProjChartPoint& from, const ProjChartPoint& to,
                             bool reversed = false) const;

 private:
  ChartModel(const Genus2Curve& curve, std::vector<CubeIndex> corners);
  Genus2Curve curve_;
  std::vector<CubeIndex> corners_;
  std::vector<CubeEdge> edges_;
  std::shared_ptr<const ChartSystem> chart_;
  std::vector<Coeffs5> aprime_;
  std::vector<MumfordDivisor> corner_class_;
};

using CubeModel = ChartModel;
CubeModel build_model(const Genus2Curve& curve);
ChartModel build_quad_model(const Genus2Curve& curve, int l1 = 1, int l2 = 2);

// One chart point per model corner, in corner order.
struct ModelPoint {
  std::vector<ProjChartPoint> charts;
  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
  friend auto operator<=>(const ModelPoint& a, const ModelPoint& b) { return a.charts <=> b.charts; }
};
using CubePoint = ModelPoint;

// Chart of a single class: affine if off Theta, (0:0:-x_P:1:0) for P - P_inf,
// (1:0:0:0:0) for 0.
ProjChartPoint corner_chart(const MumfordDivisor& y);

ModelPoint lift(const ChartModel& model, const MumfordDivisor& x);

struct ResidualReport {
  struct Entry {
    std::string id;     // "E0@010", "G3@000-001"
    std::string value;
  };
  std::vector<Entry> entries;
  bool ok() const { return entries.empty(); }
  std::string to_string() const;
};

ResidualReport verify_point(const ChartModel& model, const ModelPoint& p);
inline ResidualReport verify_cube_point(const CubeModel& model, const CubePoint& p) { return verify_point(model, p); }

// Bit per corner position: 1 iff z != 0. For the cube, position == CubeIndex.bits.
struct InfinityType {
  std::vector<bool> bits;
  bool z(std::size_t pos) const { return bits.at(pos); }
  // Characters in corner order, e.g. "00010111".
  std::string to_string() const;
  friend auto operator<=>(const InfinityType&, const InfinityType&) = default;
};

InfinityType infinity_type(const ModelPoint& p);
InfinityType parse_infinity_type(const std::string& s);

struct TypeClass {
  enum class Tag { Generic, SingleTheta, AntipodalPair, SubgroupBall, Invalid };
  Tag tag = Tag::Invalid;
  CubeIndex c;
  std::string to_string() const;
  friend bool operator==(const TypeClass&, const TypeClass&) = default;
};

// Purely combinatorial, on an eight-corner type.
TypeClass classify_type(const InfinityType& t);
// No face with exactly two zeros.
bool face_rule_holds(const InfinityType& t);
// Every Hamming ball of radius 2 contains a corner with z != 0.
bool radius2_rule_holds(const InfinityType& t);

struct CensusRecord {
  MumfordDivisor cls;
  ModelPoint point;
  InfinityType type;
  TypeClass tclass;
  ResidualReport residuals;
  std::string line() const;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  std::map<std::string, std::size_t> tally;
  bool injective = false;
  std::size_t invalid = 0;
  std::size_t expected_generic = 0;
  std::size_t expected_single_theta = 0;
  std::size_t expected_antipodal_each = 0;
  // Human-readable shape violations; empty when the census is consistent.
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Lifts and verifies every class; threads only affects scheduling.
CensusResult census(const Genus2Curve& curve, unsigned threads = 1);
CensusResult census(const Genus2Curve& curve, const std::vector<MumfordDivisor>& classes, unsigned threads = 1);

// Exhaustive F_p-point search on a model. Candidate chart points are the
// F_p-points of the chart closure (E0 = E1 = K = 0) in P^4; corners are
// assigned in order with edge compatibility precomputed per direction.
class PointSolver {
 public:
  explicit PointSolver(const ChartModel& model);

  const std::vector<ProjChartPoint>& candidates() const { return cand_; }
  std::optional<std::size_t> candidate_index(const ProjChartPoint& p) const;

  struct Constraints {
    // Required z-bit per corner position (nullopt = free).
    std::vector<std::optional<bool>> zbits;
    // Fixed candidate per corner position.
    std::map<std::size_t, std::size_t> fixed;
  };
  Constraints no_constraints() const;
  Constraints with_type(const InfinityType& t) const;

  std::vector<ModelPoint> solve(const Constraints& c, std::size_t limit = SIZE_MAX) const;
  std::size_t count(const Constraints& c) const;

 private:
  bool compatible(int l, std::size_t a, std::size_t b) const;
  void search(std::size_t pos, const Constraints& c, std::vector<std::size_t>& assign, std::vector<ModelPoint>* out,
              std::size_t& found, std::size_t limit) const;

  const ChartModel* model_;
  std::vector<ProjChartPoint> cand_;
  std::map<ProjChartPoint, std::size_t> index_;
  std::size_t words_ = 0;
  // compat_[l-1][a * words_ + w]
  std::array<std::vector<std::uint64_t>, 3> compat_;
};

// The two all-zero-type solutions of the quad model.
std::vector<ModelPoint> quad_extraneous_points(const Genus2Curve& curve);

}  // namespace jaccube
