#pragma once

#include "jaccube/coords.hpp"
#include "jaccube/field.hpp"
#include "jaccube/poly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jaccube {

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Coeffs5 = CoeffVec<FieldElement>;

// y^2 = f(x), f = x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0, with three
// marked roots that fix the cube directions.
class Genus2Curve {
 public:
  // Throws CurveError for repeated roots, non-root or duplicate marks,
  // or coefficients outside the field.
  static Genus2Curve create(Field field, const Coeffs5& a, const std::array<FieldElement, 3>& roots);

  Field field() const { return field_; }
  const Coeffs5& a() const { return a_; }
  const std::array<FieldElement, 3>& marked_roots() const { return roots_; }
  // l in 1..3
  const FieldElement& marked_root(int l) const;
  const UniPoly& f() const { return f_; }

  // Canonical config text (field, a, roots lines).
  std::string to_config() const;

 private:
  Genus2Curve() = default;
  Field field_;
  Coeffs5 a_;
  std::array<FieldElement, 3> roots_;
  UniPoly f_;
};

Genus2Curve curve_from_coeffs(Field field, const Coeffs5& a, const std::array<FieldElement, 3>& roots);

// Config grammar: one "key = value" per line, '#' starts a comment.
//   field = Fp:13 | Q
//   a = a0 a1 a2 a3 a4
//   roots = r1 r2 r3
Genus2Curve parse_curve_config(std::string_view text);
Genus2Curve load_curve_config(const std::string& path);

struct RecenteredCoeffs {
  FieldElement rho;
  Coeffs5 aprime;
};

// f(x) = sum a'_i (x - rho)^i + (x - rho)^5, computed by Taylor shift.
RecenteredCoeffs recenter(const Genus2Curve& curve, const FieldElement& rho);
Coeffs5 recenter_coeffs(const Coeffs5& a, const FieldElement& rho);

// Row-vector convention: a' = a * A + b with A[j][i] = C(j,i) rho^(j-i)
// (lower triangular) and b_i = C(5,i) rho^(5-i).
template <class R>
struct TransformMatricesT {
  std::array<std::array<R, 5>, 5> A;
  CoeffVec<R> b;
};
using TransformMatrices = TransformMatricesT<FieldElement>;

template <class R>
TransformMatricesT<R> transform_matrices_generic(const R& one, const R& rho) {
  static constexpr long binom[6][6] = {{1, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0},   {1, 2, 1, 0, 0, 0},
                                       {1, 3, 3, 1, 0, 0},  {1, 4, 6, 4, 1, 0},   {1, 5, 10, 10, 5, 1}};
  std::array<R, 6> pw{one, rho, rho * rho, rho * rho * rho, rho * rho * rho * rho,
                      rho * rho * rho * rho * rho};
  R zero = one - one;
  TransformMatricesT<R> t{};
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) t.A[j][i] = j >= i ? binom[j][i] * pw[j - i] : zero;
  for (int i = 0; i < 5; ++i) t.b[i] = binom[5][i] * pw[5 - i];
  return t;
}

template <class R>
CoeffVec<R> apply_transform(const TransformMatricesT<R>& t, const CoeffVec<R>& a) {
  CoeffVec<R> out = t.b;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i] = out[i] + a[j] * t.A[j][i];
  return out;
}

TransformMatrices transform_matrices(const FieldElement& rho);

// x-coordinates of the affine Weierstrass points, ascending. Over Q: marked
// roots plus integer roots found from the divisors of the constant term.
std::vector<FieldElement> weierstrass_points(const Genus2Curve& curve);

// First curve (lexicographic over 5-subsets of F_p) with five distinct
// rational roots, marked with the three smallest.
Genus2Curve find_split_curve(Field field, std::size_t skip = 0);

}  // namespace jaccube
