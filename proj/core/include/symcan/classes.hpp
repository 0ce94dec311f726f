#pragma once

// Numerical divisor classes on the symmetric product C_d in the span of
//   x     = class of C_{d-1} + p,
//   theta = pullback of the theta divisor under the Albanese map,
// and on C x C in the basis f1 = {pt} x C, f2 = C x {pt}, Delta.

#include <cstdint>
#include <vector>

#include "symcan/scalar.hpp"

namespace symcan {

/// a*x + b*theta. The coefficient type is a template parameter so the same
/// formulas can be evaluated on integers or on symbolic expressions in g, d.
template <class T>
struct ClassCoefficients {
  T x;
  T theta;
};

/// K_{C_d} = (g - d - 1) x + theta.
template <class T>
ClassCoefficients<T> canonical_class_coefficients(const T& g, const T& d) {
  return {g - d - T(1), T(1)};
}

/// Delta'/2 = (d + g - 1) x - theta.
template <class T>
ClassCoefficients<T> delta_prime_half_coefficients(const T& g, const T& d) {
  return {d + g - T(1), T(0) - T(1)};
}

struct NSClassCd {
  int g = 0;
  int d = 0;
  Rational a;  // coefficient of x
  Rational b;  // coefficient of theta

  friend bool operator==(const NSClassCd&, const NSClassCd&) = default;
};

struct NSClassC2Product {
  int g = 0;
  Rational f1;
  Rational f2;
  Rational delta;

  friend bool operator==(const NSClassC2Product&, const NSClassC2Product&) = default;
};

NSClassCd operator+(const NSClassCd& u, const NSClassCd& v);
NSClassCd operator*(const Rational& k, const NSClassCd& u);
NSClassC2Product operator+(const NSClassC2Product& u, const NSClassC2Product& v);
NSClassC2Product operator*(const Rational& k, const NSClassC2Product& u);

/// Throws kValidation unless g >= 2 and d >= 1.
NSClassCd class_x(int g, int d);
NSClassCd class_theta(int g, int d);
NSClassCd canonical_class(int g, int d);
NSClassCd delta_prime_half_class(int g, int d);

enum class Nefness { kNef, kUnknown, kNotApplicable };

/// Sufficient rule only: nef when both coefficients are nonnegative (theta is
/// nef and x is ample). Never concludes non-nefness.
Nefness is_nef_sufficient(const NSClassCd& cl);

/// h^0(C_d, K) = dim wedge^d H^0(K_C) = binomial(g, d); zero for d > g.
std::uint64_t macdonald_h0_canonical(int g, int d);

/// pi^* along C x C -> C_2: x -> f1 + f2, theta -> (g+1)(f1 + f2) - Delta.
/// Throws kNotApplicable when d != 2.
NSClassC2Product c2_pullback(const NSClassCd& cl);

/// f1^2 = f2^2 = 0, f1.f2 = Delta.f1 = Delta.f2 = 1, Delta^2 = 2 - 2g.
/// Throws kValidation on a genus mismatch.
Rational c2product_intersect(const NSClassC2Product& u, const NSClassC2Product& v);

/// Intersection on C_2 through the degree-2 quotient map:
/// (pi^* u . pi^* v) / 2.
Rational c2_intersect(const NSClassCd& u, const NSClassCd& v);

/// Self-intersection of Gamma = {P + sigma(P)} on C_2 for hyperelliptic C:
/// its preimage is the graph of sigma, which has the self-intersection of
/// the diagonal, and pi_* of the graph is 2 Gamma.
struct GammaSelfIntersection {
  int graph_self_intersection;  // on C x C
  int gamma_self_intersection;  // on C_2
};
GammaSelfIntersection gamma_self_intersection_detail(int g);
int gamma_self_intersection(int g);

struct NegativeDefiniteReport {
  std::vector<std::vector<int>> matrix;
  bool by_minors = false;  // (-1)^k * leading minor_k > 0 for all k
  bool by_sign = false;    // direct sign rule for a 1x1 matrix
  bool negative_definite = false;
};

/// Intersection matrix of the base component Gamma of |K_{C_2}| for a
/// hyperelliptic curve of genus g >= 3 (kValidation otherwise).
NegativeDefiniteReport negative_definite_base_component(int g);

}  // namespace symcan
