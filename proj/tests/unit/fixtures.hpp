#pragma once

#include <cstdint>
#include <vector>

#include "symcan/curve.hpp"

namespace fixtures {

inline symcan::CurveModel hyperelliptic(std::uint64_t p, std::initializer_list<std::int64_t> f) {
  const auto field = p == 0 ? symcan::Field::rationals() : symcan::Field::prime(p);
  return symcan::CurveModel::hyperelliptic(symcan::Poly::from_ints(field, f));
}

// y^2 = x^7 - 1
inline symcan::CurveModel x7_minus_1(std::uint64_t p) { return hyperelliptic(p, {-1, 0, 0, 0, 0, 0, 0, 1}); }

inline symcan::TrivariatePoly trivariate(std::uint64_t p, const std::vector<std::pair<symcan::Exponent3, std::int64_t>>& terms) {
  const auto field = p == 0 ? symcan::Field::rationals() : symcan::Field::prime(p);
  symcan::TrivariatePoly f(field);
  for (const auto& [e, c] : terms) f.add_term(e, field.from_int(c));
  return f;
}

inline symcan::TrivariatePoly fermat_quartic_poly(std::uint64_t p) {
  return trivariate(p, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
}

inline symcan::TrivariatePoly klein_quartic_poly(std::uint64_t p) {
  return trivariate(p, {{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}});
}

inline symcan::CurveModel fermat_quartic(std::uint64_t p) { return symcan::CurveModel::plane(fermat_quartic_poly(p)); }
inline symcan::CurveModel klein_quartic(std::uint64_t p) { return symcan::CurveModel::plane(klein_quartic_poly(p)); }

}  // namespace fixtures
