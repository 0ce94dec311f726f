#include "symcan/classes.hpp"

#include "symcan/error.hpp"

namespace symcan {
namespace {

void require_range(int g, int d) {
  if (g < 2 || d < 1) {
    throw Error(ErrorCode::kValidation,
                "classes need g >= 2 and d >= 1, got g=" + std::to_string(g) + " d=" + std::to_string(d));
  }
}

void require_same(int a, int b) {
  if (a != b) throw Error(ErrorCode::kValidation, "classes on different symmetric products");
}

}  // namespace

NSClassCd operator+(const NSClassCd& u, const NSClassCd& v) {
  require_same(u.g, v.g);
  require_same(u.d, v.d);
  return {u.g, u.d, u.a + v.a, u.b + v.b};
}

NSClassCd operator*(const Rational& k, const NSClassCd& u) { return {u.g, u.d, k * u.a, k * u.b}; }

NSClassC2Product operator+(const NSClassC2Product& u, const NSClassC2Product& v) {
  require_same(u.g, v.g);
  return {u.g, u.f1 + v.f1, u.f2 + v.f2, u.delta + v.delta};
}

NSClassC2Product operator*(const Rational& k, const NSClassC2Product& u) {
  return {u.g, k * u.f1, k * u.f2, k * u.delta};
}

NSClassCd class_x(int g, int d) {
  require_range(g, d);
  return {g, d, 1, 0};
}

NSClassCd class_theta(int g, int d) {
  require_range(g, d);
  return {g, d, 0, 1};
}

NSClassCd canonical_class(int g, int d) {
  require_range(g, d);
  const auto k = canonical_class_coefficients<long long>(g, d);
  return {g, d, k.x, k.theta};
}

NSClassCd delta_prime_half_class(int g, int d) {
  require_range(g, d);
  const auto k = delta_prime_half_coefficients<long long>(g, d);
  return {g, d, k.x, k.theta};
}

Nefness is_nef_sufficient(const NSClassCd& cl) {
  if (cl.g < 2 || cl.d < 1) return Nefness::kNotApplicable;
  return cl.a >= 0 && cl.b >= 0 ? Nefness::kNef : Nefness::kUnknown;
}

std::uint64_t macdonald_h0_canonical(int g, int d) {
  require_range(g, d);
  if (d > g) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= d; ++i) {
    out = out * static_cast<std::uint64_t>(g - d + i) / static_cast<std::uint64_t>(i);
  }
  return out;
}

NSClassC2Product c2_pullback(const NSClassCd& cl) {
  if (cl.d != 2) throw Error(ErrorCode::kNotApplicable, "pullback to C x C needs d = 2");
  const Rational theta_f = cl.g + 1;
  return {cl.g, cl.a + cl.b * theta_f, cl.a + cl.b * theta_f, -cl.b};
}

Rational c2product_intersect(const NSClassC2Product& u, const NSClassC2Product& v) {
  if (u.g != v.g) throw Error(ErrorCode::kValidation, "genus mismatch in intersection");
  const Rational delta2 = 2 - 2 * u.g;
  return u.f1 * v.f2 + u.f2 * v.f1 + u.delta * (v.f1 + v.f2) + v.delta * (u.f1 + u.f2) +
         u.delta * v.delta * delta2;
}

Rational c2_intersect(const NSClassCd& u, const NSClassCd& v) {
  if (u.d != 2 || v.d != 2) throw Error(ErrorCode::kNotApplicable, "intersection pairing only on C_2");
  if (u.g != v.g) throw Error(ErrorCode::kValidation, "genus mismatch in intersection");
  return c2product_intersect(c2_pullback(u), c2_pullback(v)) / 2;
}

GammaSelfIntersection gamma_self_intersection_detail(int g) {
  if (g < 2) throw Error(ErrorCode::kValidation, "Gamma needs g >= 2");
  const int graph = 2 - 2 * g;
  return {graph, graph / 2};
}

int gamma_self_intersection(int g) { return gamma_self_intersection_detail(g).gamma_self_intersection; }

NegativeDefiniteReport negative_definite_base_component(int g) {
  if (g < 3) throw Error(ErrorCode::kValidation, "base component analysis needs g >= 3");
  NegativeDefiniteReport r;
  const int entry = gamma_self_intersection(g);
  r.matrix = {{entry}};
  r.by_minors = -entry > 0;
  r.by_sign = entry < 0;
  r.negative_definite = r.by_minors && r.by_sign;
  return r;
}

}  // namespace symcan
