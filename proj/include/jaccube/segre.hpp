#pragma once

#include "jaccube/chart.hpp"
#include "jaccube/cube_model.hpp"
#include "jaccube/mpoly.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace jaccube {

// Sparse point of the Segre image. Multi-indices are packed three bits per
// factor, first factor most significant, so key order is lexicographic.
class SegrePoint {
 public:
  using Key = std::uint64_t;
  using MultiIndex = std::vector<std::uint8_t>;

  // Product of the factor coordinates; canonical scales the first nonzero
  // entry to 1. Throws if a factor is the zero vector.
  static SegrePoint from_factors(const std::vector<std::vector<FieldElement>>& factors, bool canonical = true);

  Field field() const { return field_; }
  std::size_t factors() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::pair<Key, FieldElement>>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  Key pack(const MultiIndex& k) const;
  MultiIndex unpack(Key key) const;
  FieldElement at(const MultiIndex& k) const;

  // Lines "k1 k2 ... kL : value".
  std::string export_text() const;

  friend bool operator==(const SegrePoint& a, const SegrePoint& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<std::pair<Key, FieldElement>> entries_;
};

SegrePoint segre_pair(const ProjChartPoint& P, const ProjChartPoint& Q);
SegrePoint segre_multi(const CubePoint& P);

// C(m+1, 2) * C(n+1, 2) quadrics cut out the image of P^m x P^n.
std::uint64_t quadric_count(std::size_t m, std::size_t n);

struct QuadricCheck {
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

// z_{..i..j..} z_{..k..l..} = z_{..i..l..} z_{..k..j..} for factor pair (a, b);
// exhaustive when the point has two factors.
QuadricCheck check_quadrics_exhaustive(const SegrePoint& z);
// Random factor pairs, index quadruples and background indices.
QuadricCheck check_quadrics_sampled(const SegrePoint& z, std::size_t samples, std::mt19937_64& rng);

// Homogeneous polynomial in z_{i,j} = x_i y_j (x = S coordinates, y = S^).
class SegrePoly {
 public:
  using Mono = std::vector<std::pair<std::uint8_t, std::uint8_t>>;  // sorted

  explicit SegrePoly(Field f) : field_(f) {}
  void add(const Mono& m, const FieldElement& c);
  const std::map<Mono, FieldElement>& terms() const { return terms_; }
  unsigned degree() const;
  FieldElement evaluate(const SegrePoint& z) const;
  // Direct evaluation with z_{i,j} = P_i Q_j on raw coordinates.
  FieldElement evaluate_on(const Coords5<FieldElement>& P, const Coords5<FieldElement>& Q) const;
  std::string to_string() const;
  friend bool operator==(const SegrePoly& a, const SegrePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SegrePoly& a, const SegrePoly& b) { return a.terms_ < b.terms_; }

 private:
  Field field_;
  std::map<Mono, FieldElement> terms_;
};

enum class Pairing { Sorted, Reversed };

// Variables of the two factors as MPoly indeterminates.
const std::vector<Var>& x_vars();  // u0 u1 v0 v1 z
const std::vector<Var>& y_vars();  // hu0 hu1 hv0 hv1 hz

// Monomials of the given degree in vars.
std::vector<Monomial> slack_monomials(const std::vector<Var>& vars, unsigned degree);

// F bihomogeneous of bidegree (a, b) in x_vars/y_vars with field coefficients;
// slack a monomial of degree |a - b| in the deficient side. Emits one
// polynomial per pairing rule, deduplicated. Throws std::invalid_argument on
// degree mismatch or non-bihomogeneous F.
std::vector<SegrePoly> promote_bihomogeneous(const MPoly& F, const Monomial& slack);

// G1..G9 with numeric coefficients as polynomials in x_vars/y_vars.
std::array<MPoly, 9> numeric_G(const Coeffs5& aprime);

// Translated coordinates used on a cube edge.
Coords5<FieldElement> edge_coords(const ChartModel& model, int l, const ProjChartPoint& S);

}  // namespace jaccube
