#include "symcan/series.hpp"

#include <algorithm>
#include <utility>

#include "symcan/error.hpp"

namespace symcan {

Series::Series(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kValidation, "series precision must be at least 1");
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) {
      throw Error(ErrorCode::kFieldMismatch, "series coefficient over " + c.field().name());
    }
  }
}

Series Series::constant(const Scalar& c, int precision) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(std::max(precision, 1)), c.field().zero());
  coeffs[0] = c;
  return Series(c.field(), std::move(coeffs));
}

Series Series::variable(Field field, int precision) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(std::max(precision, 1)), field.zero());
  if (coeffs.size() > 1) coeffs[1] = field.one();
  return Series(field, std::move(coeffs));
}

Series Series::from_poly(const Poly& p, int precision) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(std::max(precision, 1)), p.field().zero());
  for (int i = 0; i < precision && i <= p.degree(); ++i) coeffs[static_cast<std::size_t>(i)] = p.coeff(i);
  return Series(p.field(), std::move(coeffs));
}

bool Series::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

void Series::require_same_field(const Series& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorCode::kFieldMismatch, "series over " + field_.name() + " and " + rhs.field_.name());
  }
}

Series Series::truncated(int precision) const {
  if (precision < 1 || precision > this->precision()) {
    throw Error(ErrorCode::kValidation, "cannot truncate series to precision " + std::to_string(precision));
  }
  return Series(field_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + precision));
}

Series Series::padded(int precision) const {
  Series out = *this;
  if (precision > this->precision()) out.coeffs_.resize(static_cast<std::size_t>(precision), field_.zero());
  return out;
}

Series Series::derivative() const {
  if (precision() < 2) throw Error(ErrorCode::kValidation, "derivative needs precision >= 2");
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  }
  return Series(field_, std::move(out));
}

Series Series::shifted_down(int k) const {
  if (k < 0 || k >= precision()) throw Error(ErrorCode::kValidation, "shift exceeds series precision");
  for (int i = 0; i < k; ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
      throw Error(ErrorCode::kValidation, "series is not divisible by t^" + std::to_string(k));
    }
  }
  return Series(field_, std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
}

Series Series::inverse() const {
  if (coeffs_[0].is_zero()) throw Error(ErrorCode::kDivisionByZero, "series with zero constant term");
  const std::size_t n = coeffs_.size();
  const Scalar c0_inv = coeffs_[0].inverse();
  std::vector<Scalar> out(n, field_.zero());
  out[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc = field_.zero();
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
    out[k] = -acc * c0_inv;
  }
  return Series(field_, std::move(out));
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_field(rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_field(rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  require_same_field(rhs);
  const std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
  std::vector<Scalar> out(n, field_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

Series& Series::operator*=(const Scalar& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Series evaluate(const Poly& p, const Series& s) {
  Series acc = Series::constant(p.field().zero(), s.precision());
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= s;
    acc += Series::constant(*it, s.precision());
  }
  return acc;
}

Series evaluate(const SeriesPoly& equation, const Series& s) {
  Series acc = Series::constant(s.field().zero(), s.precision());
  for (auto it = equation.rbegin(); it != equation.rend(); ++it) {
    acc *= s;
    acc += it->precision() > s.precision() ? it->truncated(s.precision()) : *it;
  }
  return acc;
}

namespace {

SeriesPoly derivative_in_unknown(const SeriesPoly& equation) {
  SeriesPoly out;
  for (std::size_t k = 1; k < equation.size(); ++k) {
    out.push_back(equation[k] * equation[k].field().from_int(static_cast<std::int64_t>(k)));
  }
  return out;
}

}  // namespace

Series series_newton_root(const SeriesPoly& equation, const Scalar& initial, int precision) {
  if (precision < 1) throw Error(ErrorCode::kValidation, "newton precision must be at least 1");
  if (equation.empty()) throw Error(ErrorCode::kValidation, "empty equation");
  for (const auto& c : equation) {
    if (c.precision() < precision) {
      throw Error(ErrorCode::kValidation, "equation coefficients known to less than requested precision");
    }
  }
  const SeriesPoly deriv = derivative_in_unknown(equation);

  Series s = Series::constant(initial, 1);
  if (!evaluate(equation, s)[0].is_zero()) {
    throw Error(ErrorCode::kValidation, "initial value " + initial.to_string() + " is not a root");
  }
  if (deriv.empty() || evaluate(deriv, s)[0].is_zero()) {
    throw Error(ErrorCode::kSingularBranch, "derivative vanishes at " + initial.to_string());
  }

  int current = 1;
  while (current < precision) {
    current = std::min(2 * current, precision);
    s = s.padded(current);
    const Series value = evaluate(equation, s);
    const Series slope = evaluate(deriv, s);
    s -= value * slope.inverse();
  }
  return s;
}

}  // namespace symcan
