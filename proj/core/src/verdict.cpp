#include "symcan/verdict.hpp"

#include "symcan/classes.hpp"
#include "symcan/error.hpp"

namespace symcan {
namespace {

std::string rational_string(const Rational& q) {
  return q.str();
}

SodVerdict no_sod(int g, int d, std::string_view rule) {
  return {g, d, SodOutcome::kNoSOD, std::string(rule), {}, {}};
}

SodVerdict toda(int g, int d) {
  SodVerdict v{g, d, SodOutcome::kToda, std::string(rules::kToda), {}, {}};
  for (int i = 0; i < d - g + 1; ++i) v.components.emplace_back("D(J)");
  const int k = 2 * g - 2 - d;
  v.components.push_back("D(C_" + std::to_string(k) + ")");
  if (k == 0) v.notes.emplace_back("C_0 is a point");
  if (k < 0) {
    v.notes.push_back("caveat: 2g-2-d = " + std::to_string(k) +
                      " < 0; the last component is an empty symmetric power and is listed formally");
  }
  return v;
}

SodVerdict c2_no_sod(int g, bool hyperelliptic) {
  SodVerdict v = no_sod(g, 2, rules::kC2);
  const NSClassCd k = canonical_class(g, 2);
  v.notes.push_back("K^2 = " + rational_string(c2_intersect(k, k)) +
                    " > 0, h^0(K) = " + std::to_string(macdonald_h0_canonical(g, 2)) + " > 1");
  if (hyperelliptic) {
    const auto nd = negative_definite_base_component(g);
    v.notes.push_back("Bs|K| = Gamma, intersection matrix [" + std::to_string(nd.matrix[0][0]) + "]" +
                      (nd.negative_definite ? " negative definite" : " not negative definite"));
  } else {
    v.notes.emplace_back("C not hyperelliptic: |K| is base-point free");
  }
  return v;
}

}  // namespace

std::string_view outcome_name(SodOutcome o) noexcept {
  switch (o) {
    case SodOutcome::kNoSOD:
      return "NoSOD";
    case SodOutcome::kHasSOD:
      return "HasSOD";
    case SodOutcome::kToda:
      return "Toda";
    case SodOutcome::kConjecturalNone:
      return "ConjecturalNone";
    case SodOutcome::kConditionalNone:
      return "ConditionalNone";
    case SodOutcome::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

SodVerdict verdict(int g, int d, const GonalityInfo& gon, bool hyperelliptic) {
  if (g < 2) throw Error(ErrorCode::kOutOfScope, "verdicts need g >= 2");
  if (d < 1) throw Error(ErrorCode::kValidation, "verdicts need d >= 1");

  if (d == 1) return no_sod(g, d, rules::kOkawa);
  if (g == 2 && d == 2) {
    SodVerdict v{g, d, SodOutcome::kHasSOD, std::string(rules::kBlowUp), {"D(pt)", "D(J)"}, {}};
    v.notes.emplace_back("C_2 is the blow-up of J(C) at a point; the exceptional curve gives an exceptional object");
    v.notes.emplace_back("agrees with the Toda decomposition <D(J), D(C_0)>");
    return v;
  }
  if (d >= g) return toda(g, d);
  if (d == 2) return c2_no_sod(g, hyperelliptic);
  if (d >= 3 && gon.lower > d) {
    SodVerdict v = no_sod(g, d, rules::kBelowGonality);
    v.notes.push_back("gon >= " + std::to_string(gon.lower) + " > d (" +
                      std::string(gonality_method_name(gon.method)) + "), so |K| has no base points");
    return v;
  }

  SodVerdict v{g, d, SodOutcome::kConjecturalNone, std::string(rules::kConjecture), {}, {}};
  const NSClassCd k = canonical_class(g, d);
  const std::uint64_t h0 = macdonald_h0_canonical(g, d);
  if (is_nef_sufficient(k) == Nefness::kNef && h0 > 0) {
    v.notes.push_back("ConditionalNone (" + std::string(rules::kConditional) + "): K = " + rational_string(k.a) +
                      "x + " + rational_string(k.b) + "theta is nef, h^0(K) = " + std::to_string(h0) + " > 0");
  }
  return v;
}

}  // namespace symcan
