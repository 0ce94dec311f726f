#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcan/curve.hpp"
#include "symcan/linear_system.hpp"

namespace symcan {

enum class GonalityMethod { kHyperellipticModel, kSmoothPlaneFormula, kGenericFloorReference, kUserAsserted };

std::string_view gonality_method_name(GonalityMethod m) noexcept;

struct GonalityInfo {
  int lower = 2;
  int upper = 2;
  std::optional<int> exact;
  GonalityMethod method = GonalityMethod::kGenericFloorReference;
  /// floor((g + 3) / 2); informational only, never used as a bound.
  int generic_floor = 2;
  std::vector<std::string> notes;
};

/// floor((g + 3) / 2).
int generic_gonality_floor(int g) noexcept;

struct GonalityOptions {
  /// Divisor budget for the exhaustive degree-(m-2) check on plane curves.
  std::uint64_t max_divisors = 2'000'000;
};

/// Hyperelliptic models: exact 2. Smooth plane curves of degree m: exact
/// m - 1 only when witnessed over F_p (a rational line section gives a
/// residual divisor of degree m - 1 with h^0 = 2, and no rational affine
/// divisor of degree m - 2 moves); otherwise the interval [2, m - 1].
GonalityInfo gonality_info(const CurveModel& c, const GonalityOptions& options = {});

/// No curve: the interval [2, g + 1] (Brill-Noether upper bound).
GonalityInfo gonality_unknown(int g);

/// Trusted user value; throws kValidation unless 2 <= gon <= g + 1.
GonalityInfo gonality_asserted(int g, int gon);

/// A residual line-section divisor of degree m - 1 with h^0 = 2, if the
/// search over lines through rational affine points finds one.
std::optional<EffectiveDivisor> plane_gonality_witness(const CurveModel& c);

}  // namespace symcan
