#pragma once

#include <vector>

#include "symcan/poly.hpp"
#include "symcan/scalar.hpp"

namespace symcan {

/// Power series in t known modulo t^precision. Results of binary operations
/// carry the smaller operand precision.
class Series {
 public:
  /// precision = coeffs.size(), which must be at least 1.
  Series(Field field, std::vector<Scalar> coeffs);

  static Series constant(const Scalar& c, int precision);
  /// t, known to the given precision.
  static Series variable(Field field, int precision);
  static Series from_poly(const Poly& p, int precision);

  Field field() const noexcept { return field_; }
  int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  Series truncated(int precision) const;
  /// Pads with zeros up to the requested precision (used when lifting).
  Series padded(int precision) const;
  /// d/dt; loses one term of precision. Needs precision >= 2.
  Series derivative() const;
  /// Divides by t^k. The first k coefficients must vanish; loses k terms.
  Series shifted_down(int k) const;
  /// Multiplicative inverse; the constant term must be nonzero.
  Series inverse() const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Scalar& rhs);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Series& rhs) { return lhs *= rhs; }
  friend Series operator*(Series lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Series operator/(const Series& lhs, const Series& rhs) { return lhs * rhs.inverse(); }
  friend bool operator==(const Series& lhs, const Series& rhs) {
    return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void require_same_field(const Series& rhs) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// p(s) by Horner's rule, at the precision of s.
Series evaluate(const Poly& p, const Series& s);

/// Polynomial in one unknown Y with series coefficients; index = power of Y.
using SeriesPoly = std::vector<Series>;

/// E(s) at the precision of s.
Series evaluate(const SeriesPoly& equation, const Series& s);

/// The unique series s with s(0) = initial and equation(s) = 0 mod
/// t^precision, by Newton iteration with doubling precision.
///
/// Throws kValidation if initial is not a root of the constant-term
/// specialization or coefficients are known to less than `precision`, and
/// kSingularBranch if dE/dY does not vanish to order zero at initial.
Series series_newton_root(const SeriesPoly& equation, const Scalar& initial, int precision);

}  // namespace symcan
