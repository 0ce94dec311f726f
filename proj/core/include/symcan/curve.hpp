#pragma once

// Explicit curve models: hyperelliptic y^2 = f(x) and smooth plane curves
// F(X, Y, Z) = 0, together with their rational points.
//
// Divisor support is restricted to the affine chart: x finite for the
// hyperelliptic model, Z = 1 for plane curves.

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "symcan/matrix.hpp"
#include "symcan/plane_poly.hpp"
#include "symcan/poly.hpp"
#include "symcan/scalar.hpp"

namespace symcan {

struct AffinePoint {
  Scalar x;
  Scalar y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Lexicographic on (x, y) using the canonical scalar order.
std::strong_ordering canonical_compare(const AffinePoint& a, const AffinePoint& b);

/// Plane point (X:Y:Z); the last nonzero coordinate is scaled to 1.
struct ProjectivePoint {
  Scalar X;
  Scalar Y;
  Scalar Z;

  static ProjectivePoint normalized(Scalar x, Scalar y, Scalar z);
  bool at_infinity() const noexcept { return Z.is_zero(); }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

using CurvePoint = std::variant<AffinePoint, ProjectivePoint>;

/// Affine coordinates of a point; throws kUnsupportedSupport for Z = 0.
AffinePoint affine_part(const CurvePoint& p);

class HyperellipticModel {
 public:
  /// Throws kValidation unless f is squarefree of degree >= 5 (g >= 2) and,
  /// over F_p, p exceeds deg f.
  explicit HyperellipticModel(Poly f);

  const Poly& f() const noexcept { return f_; }
  int genus() const noexcept { return (f_.degree() + 1) / 2 - 1; }
  bool odd_degree() const noexcept { return f_.degree() % 2 == 1; }

 private:
  Poly f_;
};

class PlaneModel {
 public:
  /// Throws kValidation unless F is homogeneous of degree >= 4, smooth, and,
  /// over F_p, p exceeds the degree.
  explicit PlaneModel(TrivariatePoly F);

  const TrivariatePoly& F() const noexcept { return F_; }
  int degree() const noexcept { return F_.total_degree(); }
  int genus() const noexcept { return (degree() - 1) * (degree() - 2) / 2; }

 private:
  TrivariatePoly F_;
};

class CurveModel {
 public:
  using Variant = std::variant<HyperellipticModel, PlaneModel>;

  static CurveModel hyperelliptic(Poly f);
  static CurveModel plane(TrivariatePoly F);

  const Variant& model() const noexcept { return model_; }
  const HyperellipticModel* hyperelliptic_model() const noexcept {
    return std::get_if<HyperellipticModel>(&model_);
  }
  const PlaneModel* plane_model() const noexcept { return std::get_if<PlaneModel>(&model_); }

  Field field() const noexcept { return field_; }
  int genus() const noexcept { return genus_; }
  /// Equation of the affine chart: y^2 - f(x), or F(x, y, 1).
  const BivariatePoly& affine_equation() const noexcept { return affine_; }

  bool contains(const AffinePoint& p) const;
  bool contains(const CurvePoint& p) const;

 private:
  CurveModel(Variant model, Field field, int genus, BivariatePoly affine);

  Variant model_;
  Field field_;
  int genus_;
  BivariatePoly affine_;
};

int genus(const CurveModel& c);

/// (x, y) -> (x, -y). Throws kNotApplicable on plane models and kValidation
/// when p is not on the curve.
AffinePoint involution(const CurveModel& c, const AffinePoint& p);

/// All F_p-rational points in lexicographic order. Hyperelliptic: affine
/// points only. Plane: every projective point; points with Z = 0 come last
/// and are flagged by ProjectivePoint::at_infinity.
/// Throws kUnsupportedEnumeration over Q.
std::vector<CurvePoint> enumerate_rational_points(const CurveModel& c);

/// Affine rational points only (the divisor-support chart).
std::vector<AffinePoint> affine_rational_points(const CurveModel& c);

/// Number of F_p-rational points at infinity on the smooth model.
std::size_t rational_points_at_infinity(const CurveModel& c);

/// True iff the partial derivatives of F have no common projective zero over
/// the algebraic closure. Decided chart by chart from the gcd of pairwise
/// resultants, retrying a few sheared projections; a chart that stays
/// ambiguous is reported as singular. Throws kValidation when F is not
/// homogeneous or has degree below 4.
bool check_smooth_plane(const TrivariatePoly& F);

/// The plane model G = F(M v). A point P of the input curve corresponds to
/// M^{-1} P on the output (see transform_point).
CurveModel projective_change(const CurveModel& c, const Matrix& m);
ProjectivePoint transform_point(const Matrix& m, const ProjectivePoint& p);

}  // namespace symcan
