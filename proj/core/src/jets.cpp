#include "symcan/jets.hpp"

#include "symcan/error.hpp"
#include "symcan/series.hpp"

namespace symcan {
namespace {

std::string monomial_label(const Exponent3& e) {
  std::string out;
  const char* names[3] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

struct LocalExpansion {
  Series x;
  Series y;
  /// omega/dt = N(x, y) * scale for every basis form.
  Series scale;
};

LocalExpansion expand(const CurveModel& c, const LocalChart& chart) {
  const Field field = c.field();
  const int n = chart.precision;
  const BivariatePoly& F = c.affine_equation();
  const bool hyperelliptic = c.hyperelliptic_model() != nullptr;
  const Series t = Series::variable(field, n);

  if (chart.uniformizer == Uniformizer::kXMinusX0) {
    Series x = Series::constant(chart.point.x, n) + t;
    Series y = series_newton_root(F.specialize(1, x), chart.point.y, n);
    Series denom = hyperelliptic ? y : F.partial(1)(x, y);
    Series scale = denom.inverse();
    return {std::move(x), std::move(y), std::move(scale)};
  }
  // dx/dt = -F_y/F_x, so omega/dt = -N * (F_y / D) / F_x with F_y / D equal
  // to 2 (hyperelliptic) or 1 (plane).
  Series y = Series::constant(chart.point.y, n) + t;
  Series x = series_newton_root(F.specialize(0, y), chart.point.x, n);
  Series scale = F.partial(0)(x, y).inverse() * field.from_int(hyperelliptic ? -2 : -1);
  return {std::move(x), std::move(y), std::move(scale)};
}

}  // namespace

CanonicalBasis canonical_basis(const CurveModel& c) {
  CanonicalBasis basis;
  if (c.hyperelliptic_model() != nullptr) {
    for (int i = 0; i < c.genus(); ++i) {
      std::string label = i == 0 ? "dx/y" : (i == 1 ? "x*dx/y" : "x^" + std::to_string(i) + "*dx/y");
      basis.forms.push_back({{i, 0}, std::move(label)});
    }
    return basis;
  }
  const int m = c.plane_model()->degree();
  for (const auto& e : monomials_of_degree(m - 3)) {
    basis.forms.push_back({{e[0], e[1]}, monomial_label(e) + "*dx/F_y"});
  }
  return basis;
}

LocalChart choose_chart(const CurveModel& c, const AffinePoint& p, int n, ChartPreference preference) {
  if (n < 1) throw Error(ErrorCode::kValidation, "jet order must be at least 1");
  if (!c.contains(p)) throw Error(ErrorCode::kValidation, "point is not on the curve");
  const BivariatePoly& F = c.affine_equation();
  const bool x_ok = !F.partial(1)(p.x, p.y).is_zero();
  const bool y_ok = !F.partial(0)(p.x, p.y).is_zero();
  switch (preference) {
    case ChartPreference::kAuto:
      if (x_ok) return {p, Uniformizer::kXMinusX0, n};
      if (y_ok) return {p, Uniformizer::kYMinusY0, n};
      throw Error(ErrorCode::kSingularBranch, "singular point on the affine chart");
    case ChartPreference::kX:
      if (!x_ok) throw Error(ErrorCode::kValidation, "x - x0 is not a local parameter here");
      return {p, Uniformizer::kXMinusX0, n};
    case ChartPreference::kY:
      if (!y_ok) throw Error(ErrorCode::kValidation, "y - y0 is not a local parameter here");
      return {p, Uniformizer::kYMinusY0, n};
  }
  throw Error(ErrorCode::kValidation, "unknown chart preference");
}

std::vector<std::vector<Scalar>> jets_at(const CurveModel& c, const AffinePoint& p, int n,
                                         ChartPreference preference) {
  const LocalChart chart = choose_chart(c, p, n, preference);
  const LocalExpansion local = expand(c, chart);
  const CanonicalBasis basis = canonical_basis(c);

  std::vector<Series> x_powers{Series::constant(c.field().one(), n)};
  std::vector<Series> y_powers{Series::constant(c.field().one(), n)};
  std::vector<std::vector<Scalar>> out;
  out.reserve(basis.size());
  for (const auto& form : basis.forms) {
    while (static_cast<int>(x_powers.size()) <= form.numerator[0]) x_powers.push_back(x_powers.back() * local.x);
    while (static_cast<int>(y_powers.size()) <= form.numerator[1]) y_powers.push_back(y_powers.back() * local.y);
    const Series value = x_powers[static_cast<std::size_t>(form.numerator[0])] *
                         y_powers[static_cast<std::size_t>(form.numerator[1])] * local.scale;
    out.push_back(value.coefficients());
  }
  return out;
}

std::vector<Scalar> jet(const CurveModel& c, const CanonicalForm& form, const AffinePoint& p, int n,
                        ChartPreference preference) {
  const LocalChart chart = choose_chart(c, p, n, preference);
  const LocalExpansion local = expand(c, chart);
  Series value = local.scale;
  for (int i = 0; i < form.numerator[0]; ++i) value *= local.x;
  for (int i = 0; i < form.numerator[1]; ++i) value *= local.y;
  return value.coefficients();
}

}  // namespace symcan
