#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symcan/curve.hpp"
#include "symcan/linear_system.hpp"
#include "symcan/matrix.hpp"

namespace symcan {

inline constexpr std::uint64_t kDefaultDivisorBudget = 2'000'000;

/// Visits every non-decreasing index tuple of length d over [0, n) in
/// lexicographic order.
template <class Visit>
void for_each_multiset(std::size_t n, int d, Visit&& visit) {
  if (n == 0 || d < 1) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 1) --k;
    if (k < 0) return;
    const std::size_t next = idx[static_cast<std::size_t>(k)] + 1;
    for (auto i = static_cast<std::size_t>(k); i < idx.size(); ++i) idx[i] = next;
  }
}

/// Jets of every canonical form at a fixed list of points, up to a fixed
/// order, so gamma matrices of many divisors can be assembled without
/// re-expanding.
class JetTable {
 public:
  JetTable(const CurveModel& c, std::vector<AffinePoint> points, int order);

  const std::vector<AffinePoint>& points() const noexcept { return points_; }
  int order() const noexcept { return order_; }

  /// Divisor sum of points[i] over a sorted index multiset.
  EffectiveDivisor divisor(const std::vector<std::size_t>& multiset) const;
  /// Same matrix as gamma_matrix(c, divisor(multiset)).
  Matrix gamma(const std::vector<std::size_t>& multiset) const;

 private:
  Field field_;
  int genus_;
  int order_;
  std::vector<AffinePoint> points_;
  std::vector<std::vector<std::vector<Scalar>>> jets_;  // [point][form][k]
};

enum class SurveyMode { kExhaustive, kSampled };

struct SurveyOptions {
  SurveyMode mode = SurveyMode::kExhaustive;
  std::uint64_t max_divisors = kDefaultDivisorBudget;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct SurveyRecord {
  EffectiveDivisor divisor;
  LinearSystemReport report;
};

/// Hyperelliptic d = 2: the base set must be exactly the divisors P + sigma(P)
/// (conjugate pairs and doubled Weierstrass points).
struct GammaLocusCheck {
  std::uint64_t expected = 0;
  std::uint64_t found = 0;
  std::uint64_t mismatches = 0;
};

struct SurveyReport {
  int genus = 0;
  int degree = 0;
  SurveyMode mode = SurveyMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t point_count = 0;
  std::uint64_t divisor_count = 0;
  std::uint64_t base_count = 0;
  std::vector<SurveyRecord> records;
  std::optional<GammaLocusCheck> gamma_check;
};

/// Flags degree-d divisors supported on rational affine points as base or
/// non-base points of |K_{C_d}|. Records are sorted by divisor.
///
/// Requires a prime field (kUnsupportedEnumeration) and 1 <= d <= g - 1
/// (kOutOfRange). An exhaustive run whose divisor count exceeds
/// max_divisors, or a sampled run asking for more samples than that, is
/// refused with kBudgetExceeded naming the required budget.
SurveyReport base_locus_survey(const CurveModel& c, int d, const SurveyOptions& options = {});

/// Whether z = P + sigma(P) for some P.
bool is_hyperelliptic_pencil_divisor(const EffectiveDivisor& z);

}  // namespace symcan
