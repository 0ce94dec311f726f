#include "symcan/gonality.hpp"

#include <utility>

#include "symcan/error.hpp"
#include "symcan/survey.hpp"

namespace symcan {
namespace {

struct Direction {
  Scalar a;
  Scalar b;
};

// First nonzero coordinate scaled to 1.
Direction normalized(const Scalar& a, const Scalar& b) {
  if (!a.is_zero()) return {a.field().one(), b / a};
  return {a, b.field().one()};
}

// F restricted to the line P + t (a, b), as a polynomial in t.
Poly restrict_to_line(const CurveModel& c, const AffinePoint& p, const Direction& dir, int m) {
  const Field f = c.field();
  const Series t = Series::variable(f, m + 1);
  const Series x = Series::constant(p.x, m + 1) + t * dir.a;
  const Series y = Series::constant(p.y, m + 1) + t * dir.b;
  return Poly(f, c.affine_equation()(x, y).coefficients());
}

std::optional<EffectiveDivisor> residual_section(const CurveModel& c, const std::vector<AffinePoint>& points,
                                                 const AffinePoint& p, const Direction& dir, int m) {
  Poly q = restrict_to_line(c, p, dir, m);
  // A lower degree means the line meets the curve at infinity.
  if (q.degree() != m) return std::nullopt;
  std::vector<DivisorTerm> terms;
  int total = 0;
  for (const auto& u : points) {
    const Scalar dx = u.x - p.x;
    const Scalar dy = u.y - p.y;
    const Scalar lambda = dir.a.is_zero() ? dy / dir.b : dx / dir.a;
    if (!(dx == lambda * dir.a) || !(dy == lambda * dir.b)) continue;
    const Poly root = Poly(c.field(), {-lambda, c.field().one()});
    int mult = 0;
    while (!q.is_zero() && q(lambda).is_zero()) {
      q = exact_quotient(q, root);
      ++mult;
    }
    if (u == p) --mult;
    if (mult > 0) terms.push_back({u, mult});
    total += mult;
  }
  if (total != m - 1) return std::nullopt;
  return EffectiveDivisor(std::move(terms));
}

bool no_moving_divisor(const CurveModel& c, int degree, std::uint64_t budget, std::vector<std::string>& notes) {
  const auto points = affine_rational_points(c);
  const std::uint64_t needed = multiset_count(points.size(), static_cast<std::uint64_t>(degree));
  if (needed > budget) {
    notes.push_back("lower-bound check skipped: needs " + std::to_string(needed) + " divisors");
    return false;
  }
  const JetTable table(c, points, degree);
  bool ok = true;
  for_each_multiset(points.size(), degree, [&](const auto& idx) {
    if (ok && static_cast<int>(rank(table.gamma(idx))) < degree) ok = false;
  });
  if (!ok) notes.push_back("a rational divisor of degree " + std::to_string(degree) + " moves");
  return ok;
}

}  // namespace

std::string_view gonality_method_name(GonalityMethod m) noexcept {
  switch (m) {
    case GonalityMethod::kHyperellipticModel:
      return "hyperelliptic-model";
    case GonalityMethod::kSmoothPlaneFormula:
      return "smooth-plane-formula";
    case GonalityMethod::kGenericFloorReference:
      return "generic-floor-reference";
    case GonalityMethod::kUserAsserted:
      return "user-asserted";
  }
  return "unknown";
}

int generic_gonality_floor(int g) noexcept { return (g + 3) / 2; }

std::optional<EffectiveDivisor> plane_gonality_witness(const CurveModel& c) {
  const auto* plane = c.plane_model();
  if (plane == nullptr || c.field().is_rational()) return std::nullopt;
  const int m = plane->degree();
  const auto points = affine_rational_points(c);
  const BivariatePoly fx = c.affine_equation().partial(0);
  const BivariatePoly fy = c.affine_equation().partial(1);
  for (const auto& p : points) {
    std::vector<Direction> dirs{normalized(fy(p.x, p.y), -fx(p.x, p.y))};
    for (const auto& u : points) {
      if (u == p) continue;
      Direction d = normalized(u.x - p.x, u.y - p.y);
      bool seen = false;
      for (const auto& e : dirs) seen = seen || (e.a == d.a && e.b == d.b);
      if (!seen) dirs.push_back(std::move(d));
    }
    for (const auto& dir : dirs) {
      auto z = residual_section(c, points, p, dir, m);
      if (z && linear_system_report(c, *z).h0_z == 2) return z;
    }
  }
  return std::nullopt;
}

GonalityInfo gonality_info(const CurveModel& c, const GonalityOptions& options) {
  GonalityInfo info;
  info.generic_floor = generic_gonality_floor(c.genus());
  if (c.hyperelliptic_model() != nullptr) {
    info.lower = info.upper = 2;
    info.exact = 2;
    info.method = GonalityMethod::kHyperellipticModel;
    info.notes.push_back("x-coordinate map is a degree-2 pencil");
    return info;
  }
  const int m = c.plane_model()->degree();
  info.method = GonalityMethod::kSmoothPlaneFormula;
  info.lower = 2;
  info.upper = m - 1;
  if (c.field().is_rational()) {
    info.notes.push_back("m - 1 not witnessed over Q; interval only");
    return info;
  }
  const auto witness = plane_gonality_witness(c);
  if (!witness) {
    info.notes.push_back("no rational line section witnesses a pencil of degree m - 1");
    return info;
  }
  if (!no_moving_divisor(c, m - 2, options.max_divisors, info.notes)) return info;
  info.lower = m - 1;
  info.exact = m - 1;
  info.notes.push_back("projection from a point; witnessed over " + c.field().name());
  return info;
}

GonalityInfo gonality_unknown(int g) {
  if (g < 2) throw Error(ErrorCode::kOutOfScope, "gonality data needs g >= 2");
  GonalityInfo info;
  info.lower = 2;
  info.upper = g + 1;
  info.method = GonalityMethod::kGenericFloorReference;
  info.generic_floor = generic_gonality_floor(g);
  info.notes.push_back("no curve given; generic floor is reference metadata only");
  return info;
}

GonalityInfo gonality_asserted(int g, int gon) {
  if (gon < 2 || gon > g + 1) {
    throw Error(ErrorCode::kValidation, "asserted gonality must lie in [2, g + 1]");
  }
  GonalityInfo info;
  info.lower = info.upper = gon;
  info.exact = gon;
  info.method = GonalityMethod::kUserAsserted;
  info.generic_floor = generic_gonality_floor(g);
  return info;
}

}  // namespace symcan
