#include "symcan/curve.hpp"

#include <algorithm>
#include <utility>

#include "symcan/error.hpp"

namespace symcan {

std::strong_ordering canonical_compare(const AffinePoint& a, const AffinePoint& b) {
  if (auto c = canonical_compare(a.x, b.x); c != 0) return c;
  return canonical_compare(a.y, b.y);
}

ProjectivePoint ProjectivePoint::normalized(Scalar x, Scalar y, Scalar z) {
  const Scalar* last = !z.is_zero() ? &z : (!y.is_zero() ? &y : (!x.is_zero() ? &x : nullptr));
  if (last == nullptr) throw Error(ErrorCode::kValidation, "projective point with all coordinates zero");
  const Scalar inv = last->inverse();
  return {x * inv, y * inv, z * inv};
}

AffinePoint affine_part(const CurvePoint& p) {
  if (const auto* a = std::get_if<AffinePoint>(&p)) return *a;
  const auto& q = std::get<ProjectivePoint>(p);
  if (q.at_infinity()) {
    throw Error(ErrorCode::kUnsupportedSupport, "point at infinity cannot be used as divisor support");
  }
  return {q.X / q.Z, q.Y / q.Z};
}

HyperellipticModel::HyperellipticModel(Poly f) : f_(std::move(f)) {
  if (f_.degree() < 5) {
    throw Error(ErrorCode::kValidation, "hyperelliptic model needs deg f >= 5 (genus >= 2)");
  }
  const std::uint64_t p = f_.field().characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(f_.degree())) {
    throw Error(ErrorCode::kValidation, "characteristic must exceed deg f");
  }
  if (!poly_is_squarefree(f_)) throw Error(ErrorCode::kValidation, "f is not squarefree");
}

PlaneModel::PlaneModel(TrivariatePoly F) : F_(std::move(F)) {
  if (!F_.is_homogeneous()) throw Error(ErrorCode::kValidation, "plane model must be homogeneous");
  const int m = F_.total_degree();
  if (m < 4) throw Error(ErrorCode::kValidation, "plane model needs degree >= 4");
  const std::uint64_t p = F_.field().characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(m)) {
    throw Error(ErrorCode::kValidation, "characteristic must exceed the plane degree");
  }
  if (!check_smooth_plane(F_)) throw Error(ErrorCode::kValidation, "plane curve is singular");
}

CurveModel::CurveModel(Variant model, Field field, int genus, BivariatePoly affine)
    : model_(std::move(model)), field_(field), genus_(genus), affine_(std::move(affine)) {}

CurveModel CurveModel::hyperelliptic(Poly f) {
  HyperellipticModel h(std::move(f));
  const Field field = h.f().field();
  BivariatePoly affine(field);
  affine.add_term({0, 2}, field.one());
  for (int i = 0; i <= h.f().degree(); ++i) affine.add_term({i, 0}, -h.f().coeff(i));
  const int g = h.genus();
  return CurveModel(std::move(h), field, g, std::move(affine));
}

CurveModel CurveModel::plane(TrivariatePoly F) {
  PlaneModel pm(std::move(F));
  const Field field = pm.F().field();
  BivariatePoly affine = pm.F().dehomogenize(2);
  const int g = pm.genus();
  return CurveModel(std::move(pm), field, g, std::move(affine));
}

bool CurveModel::contains(const AffinePoint& p) const {
  if (!(p.x.field() == field_) || !(p.y.field() == field_)) return false;
  return affine_(p.x, p.y).is_zero();
}

bool CurveModel::contains(const CurvePoint& p) const {
  if (const auto* a = std::get_if<AffinePoint>(&p)) return contains(*a);
  const auto& q = std::get<ProjectivePoint>(p);
  const auto* pm = plane_model();
  if (pm == nullptr) return false;
  return pm->F()(q.X, q.Y, q.Z).is_zero();
}

int genus(const CurveModel& c) { return c.genus(); }

AffinePoint involution(const CurveModel& c, const AffinePoint& p) {
  if (c.hyperelliptic_model() == nullptr) {
    throw Error(ErrorCode::kNotApplicable, "involution needs a hyperelliptic model");
  }
  if (!c.contains(p)) throw Error(ErrorCode::kValidation, "point is not on the curve");
  return {p.x, -p.y};
}

std::vector<CurvePoint> enumerate_rational_points(const CurveModel& c) {
  const Field field = c.field();
  if (field.is_rational()) {
    throw Error(ErrorCode::kUnsupportedEnumeration, "point enumeration needs a prime field");
  }
  const auto p = static_cast<std::int64_t>(field.characteristic());
  std::vector<CurvePoint> out;
  if (const auto* h = c.hyperelliptic_model()) {
    for (std::int64_t xi = 0; xi < p; ++xi) {
      const Scalar x = field.from_int(xi);
      const Scalar v = h->f()(x);
      const auto root = sqrt(v);
      if (!root) continue;
      if (root->is_zero()) {
        out.emplace_back(AffinePoint{x, *root});
      } else {
        // sqrt returns the smaller residue, so (x, r) precedes (x, -r).
        out.emplace_back(AffinePoint{x, *root});
        out.emplace_back(AffinePoint{x, -*root});
      }
    }
    return out;
  }
  const auto& F = c.plane_model()->F();
  const Scalar one = field.one();
  const Scalar zero = field.zero();
  for (std::int64_t xi = 0; xi < p; ++xi) {
    for (std::int64_t yi = 0; yi < p; ++yi) {
      const Scalar x = field.from_int(xi);
      const Scalar y = field.from_int(yi);
      if (F(x, y, one).is_zero()) out.emplace_back(ProjectivePoint{x, y, one});
    }
  }
  for (std::int64_t xi = 0; xi < p; ++xi) {
    const Scalar x = field.from_int(xi);
    if (F(x, one, zero).is_zero()) out.emplace_back(ProjectivePoint{x, one, zero});
  }
  if (F(one, zero, zero).is_zero()) out.emplace_back(ProjectivePoint{one, zero, zero});
  return out;
}

std::vector<AffinePoint> affine_rational_points(const CurveModel& c) {
  std::vector<AffinePoint> out;
  for (const auto& p : enumerate_rational_points(c)) {
    if (const auto* q = std::get_if<ProjectivePoint>(&p); q != nullptr && q->at_infinity()) continue;
    out.push_back(affine_part(p));
  }
  return out;
}

std::size_t rational_points_at_infinity(const CurveModel& c) {
  if (const auto* h = c.hyperelliptic_model()) {
    if (c.field().is_rational()) {
      throw Error(ErrorCode::kUnsupportedEnumeration, "point enumeration needs a prime field");
    }
    if (h->odd_degree()) return 1;
    return sqrt(h->f().leading()) ? 2 : 0;
  }
  std::size_t n = 0;
  for (const auto& p : enumerate_rational_points(c)) {
    if (std::get<ProjectivePoint>(p).at_infinity()) ++n;
  }
  return n;
}

namespace {

Matrix permutation_to_z(Field field, int var) {
  // Swaps `var` with Z so that the chart var = 1 becomes Z = 1.
  Matrix m = Matrix::identity(field, 3);
  if (var == 2) return m;
  const auto v = static_cast<std::size_t>(var);
  m.set(v, v, field.zero());
  m.set(2, 2, field.zero());
  m.set(v, 2, field.one());
  m.set(2, v, field.one());
  return m;
}

Poly projected_common_zeros(const BivariatePoly& a, const BivariatePoly& b, const BivariatePoly& c) {
  const auto ay = a.coefficients_in(1);
  const auto by = b.coefficients_in(1);
  const auto cy = c.coefficients_in(1);
  const Field field = a.field();
  auto res = [&](const std::vector<Poly>& u, const std::vector<Poly>& v) {
    if (u.empty() || v.empty()) return Poly(field);
    return resultant(u, v);
  };
  return gcd(gcd(res(ay, by), res(ay, cy)), res(by, cy));
}

// No common zero of the gradient on the chart Z = 1.
bool chart_is_clean(const TrivariatePoly& G) {
  const Field field = G.field();
  const std::uint64_t p = field.characteristic();
  const int shears = p == 0 ? 7 : static_cast<int>(std::min<std::uint64_t>(p, 7));
  for (int k = 0; k < shears; ++k) {
    Matrix shear = Matrix::identity(field, 3);
    shear.set(0, 1, field.from_int(k));
    const TrivariatePoly H = k == 0 ? G : G.substitute_linear(shear);
    const BivariatePoly a = H.partial(0).dehomogenize(2);
    const BivariatePoly b = H.partial(1).dehomogenize(2);
    const BivariatePoly c = H.partial(2).dehomogenize(2);
    if (projected_common_zeros(a, b, c).degree() == 0) return true;
  }
  return false;
}

}  // namespace

bool check_smooth_plane(const TrivariatePoly& F) {
  if (!F.is_homogeneous()) throw Error(ErrorCode::kValidation, "plane polynomial is not homogeneous");
  if (F.total_degree() < 4) throw Error(ErrorCode::kValidation, "plane degree must be at least 4");
  for (int var = 2; var >= 0; --var) {
    const TrivariatePoly G = var == 2 ? F : F.substitute_linear(permutation_to_z(F.field(), var));
    if (!chart_is_clean(G)) return false;
  }
  return true;
}

CurveModel projective_change(const CurveModel& c, const Matrix& m) {
  const auto* pm = c.plane_model();
  if (pm == nullptr) throw Error(ErrorCode::kNotApplicable, "projective change needs a plane model");
  if (!inverse(m)) throw Error(ErrorCode::kValidation, "coordinate change is not invertible");
  return CurveModel::plane(pm->F().substitute_linear(m));
}

ProjectivePoint transform_point(const Matrix& m, const ProjectivePoint& p) {
  const auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::kValidation, "coordinate change is not invertible");
  const Field field = m.field();
  const Scalar v[3] = {p.X, p.Y, p.Z};
  Scalar w[3] = {field.zero(), field.zero(), field.zero()};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) w[i] += (*inv)(i, j) * v[j];
  }
  return ProjectivePoint::normalized(w[0], w[1], w[2]);
}

}  // namespace symcan
