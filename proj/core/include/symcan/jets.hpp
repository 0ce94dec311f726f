#pragma once

// Canonical differentials and their local expansions.
//
// Every basis form is written as  N(x, y) dx / D(x, y)  on the affine chart:
//   hyperelliptic  y^2 = f(x):   N = x^(i-1),     D = y
//   plane          F(x, y) = 0:  N = A(x, y, 1),  D = dF/dy
// where A runs over the degree m-3 monomials. A jet of a form at P is the
// list of the first n Taylor coefficients of omega/dt in a local parameter
// t at P.

#include <string>
#include <vector>

#include "symcan/curve.hpp"
#include "symcan/scalar.hpp"

namespace symcan {

struct CanonicalForm {
  /// Exponents (a, b) of the numerator x^a y^b.
  Exponent2 numerator;
  std::string label;
};

struct CanonicalBasis {
  std::vector<CanonicalForm> forms;

  std::size_t size() const noexcept { return forms.size(); }
};

/// Exactly genus(c) forms. Hyperelliptic: x^(i-1) dx/y for i = 1..g.
/// Plane: adjoint monomials of degree m-3 in lexicographically descending
/// order.
CanonicalBasis canonical_basis(const CurveModel& c);

enum class Uniformizer {
  kXMinusX0,  // t = x - x0, requires dF/dy(P) != 0
  kYMinusY0,  // t = y - y0, requires dF/dx(P) != 0 (t = y at Weierstrass points)
};

enum class ChartPreference { kAuto, kX, kY };

struct LocalChart {
  AffinePoint point;
  Uniformizer uniformizer;
  int precision;
};

/// Auto picks t = x - x0 whenever dF/dy(P) != 0, else t = y - y0.
/// Throws kValidation if P is off the curve or the preferred chart is not a
/// local parameter at P.
LocalChart choose_chart(const CurveModel& c, const AffinePoint& p, int n,
                        ChartPreference preference = ChartPreference::kAuto);

/// Coefficients c_0..c_{n-1} of omega/dt at P.
std::vector<Scalar> jet(const CurveModel& c, const CanonicalForm& form, const AffinePoint& p, int n,
                        ChartPreference preference = ChartPreference::kAuto);

/// Jets of every basis form at P, sharing one local expansion.
/// Result is indexed [form][coefficient].
std::vector<std::vector<Scalar>> jets_at(const CurveModel& c, const AffinePoint& p, int n,
                                         ChartPreference preference = ChartPreference::kAuto);

}  // namespace symcan
