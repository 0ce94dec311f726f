#pragma once

// Linear systems attached to an effective divisor z of degree d on C:
// the restriction map gamma: H^0(K_C) -> H^0(K_C|_z) as a d x g jet matrix,
// and the dimensions it determines.
//
// With r = rank(gamma):
//   h^0(K_C - z) = g - r               (kernel of gamma)
//   h^0(O_C(z))  = 1 + d - r           (gamma is dual to the coboundary
//                                        H^0(O(z)|_z) -> H^1(O_C))
// so z is a base point of |K_{C_d}| exactly when r < d.

#include <cstdint>
#include <vector>

#include "symcan/curve.hpp"
#include "symcan/matrix.hpp"

namespace symcan {

struct DivisorTerm {
  AffinePoint point;
  int multiplicity;

  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// A point of C_d: an unordered sum of affine points with multiplicities.
/// Repeated points are merged and terms are sorted canonically, so two
/// divisors are equal iff they are the same subscheme.
class EffectiveDivisor {
 public:
  /// Throws kValidation for an empty sum, a multiplicity below 1, or mixed
  /// fields.
  explicit EffectiveDivisor(std::vector<DivisorTerm> terms);

  const std::vector<DivisorTerm>& terms() const noexcept { return terms_; }
  int degree() const noexcept { return degree_; }
  Field field() const noexcept { return terms_.front().point.x.field(); }

  friend bool operator==(const EffectiveDivisor&, const EffectiveDivisor&) = default;

 private:
  std::vector<DivisorTerm> terms_;
  int degree_ = 0;
};

struct JetMatrix {
  /// d rows grouped by point in divisor order, g columns in basis order.
  Matrix matrix;
  EffectiveDivisor divisor;
};

/// Row r of the block for a point P of multiplicity k (r < k) holds the
/// r-th jet coefficient of every basis form at P.
JetMatrix gamma_matrix(const CurveModel& c, const EffectiveDivisor& z);

struct LinearSystemReport {
  int degree = 0;
  int genus = 0;
  int rank_gamma = 0;
  int h0_K_minus_z = 0;
  int h0_z = 0;
  int albanese_fiber_dim = 0;
  bool is_base_point = false;

  friend bool operator==(const LinearSystemReport&, const LinearSystemReport&) = default;
};

/// Builds the report from a precomputed gamma rank.
LinearSystemReport report_from_rank(int degree, int genus, int rank_gamma);

/// Throws kOutOfRange when deg z > g.
LinearSystemReport linear_system_report(const CurveModel& c, const EffectiveDivisor& z);

/// True iff the evaluation map wedge^d gamma is nonzero, i.e. rank = d.
/// Requires 1 <= deg z <= g - 1 (kOutOfRange otherwise).
bool evaluation_rank_test(const CurveModel& c, const EffectiveDivisor& z);

/// A d-dimensional subspace S of H^0(K_C), given by d rows of coordinates in
/// the canonical basis.
class SubspaceSpec {
 public:
  /// Throws kValidation unless the rows are independent.
  explicit SubspaceSpec(Matrix basis);

  const Matrix& basis() const noexcept { return basis_; }
  int dimension() const noexcept { return static_cast<int>(basis_.rows()); }

 private:
  Matrix basis_;
};

/// True iff some nonzero form in S vanishes on y, i.e. y lies on the divisor
/// D_S of C_d. Throws kValidation unless deg y = dim S <= g and the ambient
/// dimension matches the genus.
bool ds_contains(const CurveModel& c, const SubspaceSpec& s, const EffectiveDivisor& y);

/// Fiber of the degree-2 map x: C -> P^1 over b, as a point of C_2.
/// Requires an odd-degree hyperelliptic model (kNotApplicable otherwise) and
/// f(b) a square in the base field (kIrrationalFiber otherwise).
EffectiveDivisor pencil_fiber(const CurveModel& c, const Scalar& b);

/// h^0(O_C(z)) on a hyperelliptic curve by counting g^1_2 sub-fibers:
/// 1 + sum over conjugate pairs of min(mult P, mult sigma P) + sum over
/// Weierstrass points of floor(mult / 2). No linear algebra. Requires
/// deg z <= g (kOutOfRange otherwise).
int hyperelliptic_h0_oracle(const CurveModel& c, const EffectiveDivisor& z);

/// Number of multisets of size d drawn from n items, saturating at
/// UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t d) noexcept;

}  // namespace symcan
