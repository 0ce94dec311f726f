#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "symcan/scalar.hpp"

namespace symcan {

/// Dense univariate polynomial over a single field. Trailing zero
/// coefficients are never stored; the zero polynomial has no coefficients.
class Poly {
 public:
  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, std::vector<Scalar> coeffs);

  static Poly from_ints(Field field, std::initializer_list<std::int64_t> coeffs);
  static Poly constant(const Scalar& c);
  /// c * X^k
  static Poly monomial(const Scalar& c, int k);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of X^i; zero beyond the degree.
  Scalar coeff(int i) const;
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  /// Throws kValidation on the zero polynomial.
  const Scalar& leading() const;

  Scalar operator()(const Scalar& x) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(a + X)
  Poly taylor_shift(const Scalar& a) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Scalar& lhs, Poly rhs) { return rhs *= lhs; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  void require_same_field(const Poly& rhs) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division. Throws kDivisionByZero for a zero divisor.
PolyDivMod divmod(const Poly& a, const Poly& b);
/// Quotient of an exact division; throws kValidation if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// True iff gcd(f, f') is a nonzero constant.
/// Requires characteristic 0 or p > deg f (throws kValidation otherwise).
bool poly_is_squarefree(const Poly& f);

/// Resultant with respect to an outer variable. Each argument is a polynomial
/// in that variable whose coefficients are polynomials in the inner variable
/// (index = outer degree). Computed as the Sylvester determinant by
/// fraction-free elimination over the inner polynomial ring.
Poly resultant(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace symcan
