#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symcan/gonality.hpp"

namespace symcan {

enum class SodOutcome { kNoSOD, kHasSOD, kToda, kConjecturalNone, kConditionalNone, kUnknown };

std::string_view outcome_name(SodOutcome o) noexcept;

struct SodVerdict {
  int g = 0;
  int d = 0;
  SodOutcome outcome = SodOutcome::kUnknown;
  std::string rule;
  std::vector<std::string> components;
  std::vector<std::string> notes;

  friend bool operator==(const SodVerdict&, const SodVerdict&) = default;
};

namespace rules {
inline constexpr std::string_view kOkawa = "Okawa curve theorem";
inline constexpr std::string_view kToda = "Toda decomposition";
inline constexpr std::string_view kBlowUp = "Blow-up remark";
inline constexpr std::string_view kC2 = "Theorem c2-sod";
inline constexpr std::string_view kBelowGonality = "Corollary cor:cd-sod";
inline constexpr std::string_view kConjecture = "Conjecture symmetric-power";
inline constexpr std::string_view kConditional = "Lemma usingconj";
}  // namespace rules

/// Decision tree over (g, d). The first matching rule wins:
///   d = 1                         NoSOD       (Okawa)
///   g = 2, d = 2                  HasSOD      (blow-up of J at a point)
///   d >= g                        Toda        (d - g + 1 copies of D(J), D(C_{2g-2-d}))
///   g >= 3, d = 2                 NoSOD       (c2-sod, any gonality)
///   3 <= d <= g - 1, gon.lower > d NoSOD      (below gonality)
///   otherwise                     ConjecturalNone, with a ConditionalNone
///                                 note once K nef and h^0(K) > 0 check out.
/// The g = 2, d = 2 case is also covered by the Toda rule; both give
/// <D(J), D(pt)>, and the blow-up citation is reported.
///
/// Throws kOutOfScope for g < 2 and kValidation for d < 1.
SodVerdict verdict(int g, int d, const GonalityInfo& gon, bool hyperelliptic);

}  // namespace symcan
