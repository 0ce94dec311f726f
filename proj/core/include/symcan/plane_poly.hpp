#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "symcan/matrix.hpp"
#include "symcan/poly.hpp"
#include "symcan/scalar.hpp"
#include "symcan/series.hpp"

namespace symcan {

using Exponent2 = std::array<int, 2>;
using Exponent3 = std::array<int, 3>;

/// Sparse polynomial in two variables (x, y).
class BivariatePoly {
 public:
  explicit BivariatePoly(Field field) : field_(field) {}

  Field field() const noexcept { return field_; }
  const std::map<Exponent2, Scalar>& terms() const noexcept { return terms_; }
  void add_term(Exponent2 exponent, const Scalar& c);
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar operator()(const Scalar& x, const Scalar& y) const;
  Series operator()(const Series& x, const Series& y) const;
  /// var 0 = x, var 1 = y.
  BivariatePoly partial(int var) const;
  /// Polynomial in `var` whose coefficients are polynomials in the other
  /// variable (index = degree in var).
  std::vector<Poly> coefficients_in(int var) const;
  /// Substitutes a series for the variable other than `unknown`, leaving a
  /// polynomial in `unknown` with series coefficients.
  SeriesPoly specialize(int unknown, const Series& other) const;

 private:
  Field field_;
  std::map<Exponent2, Scalar> terms_;
};

/// Sparse polynomial in X, Y, Z with monomials kept in lexicographically
/// descending order (X > Y > Z).
class TrivariatePoly {
 public:
  using TermMap = std::map<Exponent3, Scalar, std::greater<>>;

  explicit TrivariatePoly(Field field) : field_(field) {}

  Field field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  void add_term(Exponent3 exponent, const Scalar& c);
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Scalar operator()(const Scalar& x, const Scalar& y, const Scalar& z) const;
  TrivariatePoly partial(int var) const;
  /// Sets `var` to 1; the remaining two variables keep their order.
  BivariatePoly dehomogenize(int var) const;
  /// F(M v): each variable is replaced by the corresponding row of M applied
  /// to (X, Y, Z).
  TrivariatePoly substitute_linear(const Matrix& m) const;

  friend TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b);
  friend bool operator==(const TrivariatePoly& a, const TrivariatePoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  TermMap terms_;
};

/// All monomials of total degree `degree` in X, Y, Z, lexicographically
/// descending.
std::vector<Exponent3> monomials_of_degree(int degree);

}  // namespace symcan
