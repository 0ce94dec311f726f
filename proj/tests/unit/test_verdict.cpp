#include <doctest.h>

#include "fixtures.hpp"
#include "symcan/error.hpp"
#include "symcan/gonality.hpp"
#include "symcan/survey.hpp"
#include "symcan/verdict.hpp"

using namespace symcan;

TEST_CASE("gonality of model families") {
  const auto h = gonality_info(fixtures::x7_minus_1(29));
  CHECK(h.exact == 2);
  CHECK(h.method == GonalityMethod::kHyperellipticModel);
  CHECK(h.generic_floor == 3);

  for (const auto& c : {fixtures::fermat_quartic(11), fixtures::klein_quartic(11)}) {
    const auto q = gonality_info(c);
    CHECK(q.exact == 3);
    CHECK(q.lower == 3);
    CHECK(q.method == GonalityMethod::kSmoothPlaneFormula);
    const auto w = plane_gonality_witness(c);
    REQUIRE(w);
    CHECK(w->degree() == 3);
    CHECK(linear_system_report(c, *w).h0_z == 2);
  }

  const auto overq = gonality_info(fixtures::fermat_quartic(0));
  CHECK_FALSE(overq.exact);
  CHECK(overq.lower == 2);
  CHECK(overq.upper == 3);
}

TEST_CASE("gonality without a curve") {
  CHECK(generic_gonality_floor(5) == 4);
  const auto u = gonality_unknown(5);
  CHECK(u.lower == 2);
  CHECK(u.upper == 6);
  CHECK_FALSE(u.exact);
  CHECK(u.generic_floor == 4);
  CHECK(gonality_asserted(5, 4).exact == 4);
  CHECK_THROWS_AS(gonality_asserted(5, 7), Error);
  CHECK_THROWS_AS(gonality_unknown(1), Error);
}

TEST_CASE("verdict examples") {
  const auto unknown = gonality_unknown(2);
  const auto v22 = verdict(2, 2, unknown, false);
  CHECK(v22.outcome == SodOutcome::kHasSOD);
  CHECK(v22.rule == rules::kBlowUp);

  const auto v32 = verdict(3, 2, gonality_unknown(3), false);
  CHECK(v32.outcome == SodOutcome::kNoSOD);
  CHECK(v32.rule == "Theorem c2-sod");

  const auto v57 = verdict(5, 7, gonality_unknown(5), false);
  CHECK(v57.outcome == SodOutcome::kToda);
  CHECK(v57.components == std::vector<std::string>{"D(J)", "D(J)", "D(J)", "D(C_1)"});

  const auto v53 = verdict(5, 3, gonality_asserted(5, 2), true);
  CHECK(v53.outcome == SodOutcome::kConjecturalNone);

  CHECK(verdict(4, 1, gonality_unknown(4), false).rule == rules::kOkawa);
  CHECK_THROWS_AS(verdict(1, 1, gonality_unknown(2), false), Error);
  CHECK_THROWS_AS(verdict(3, 0, gonality_unknown(3), false), Error);
}

TEST_CASE("rule 5 fires only above witnessed gonality") {
  CHECK(verdict(6, 3, gonality_asserted(6, 4), false).rule == rules::kBelowGonality);
  CHECK(verdict(6, 4, gonality_asserted(6, 4), false).outcome == SodOutcome::kConjecturalNone);
  CHECK(verdict(6, 3, gonality_unknown(6), false).outcome == SodOutcome::kConjecturalNone);
  // d = 2 is always cited to the surface theorem, whatever the gonality.
  CHECK(verdict(6, 2, gonality_asserted(6, 4), false).rule == rules::kC2);
}

TEST_CASE("Toda component counts") {
  for (int g = 2; g <= 8; ++g) {
    for (int d = g; d <= 2 * g + 2; ++d) {
      const auto v = verdict(g, d, gonality_unknown(g), false);
      if (g == 2 && d == 2) continue;
      REQUIRE(v.outcome == SodOutcome::kToda);
      CHECK(v.components.size() == static_cast<std::size_t>(d - g + 2));
      CHECK(std::count(v.components.begin(), v.components.end(), "D(J)") == d - g + 1);
      CHECK(v.components.back() == "D(C_" + std::to_string(2 * g - 2 - d) + ")");
      const bool caveat = std::any_of(v.notes.begin(), v.notes.end(),
                                      [](const auto& n) { return n.find("caveat") != std::string::npos; });
      CHECK(caveat == (2 * g - 2 - d < 0));
    }
    const auto eq = verdict(g, g, gonality_unknown(g), false);
    if (g > 2) CHECK(eq.components == std::vector<std::string>{"D(J)", "D(C_" + std::to_string(g - 2) + ")"});
  }
}

TEST_CASE("conditional note is always attachable below g") {
  for (int g = 3; g <= 10; ++g) {
    for (int d = 3; d < g; ++d) {
      const auto v = verdict(g, d, gonality_unknown(g), false);
      REQUIRE(v.outcome == SodOutcome::kConjecturalNone);
      REQUIRE(v.notes.size() == 1);
      CHECK(v.notes[0].rfind("ConditionalNone (Lemma usingconj)", 0) == 0);
    }
  }
}

TEST_CASE("verdicts are deterministic") {
  for (int g = 2; g <= 8; ++g) {
    for (int d = 1; d <= 2 * g; ++d) {
      CHECK(verdict(g, d, gonality_unknown(g), true) == verdict(g, d, gonality_unknown(g), true));
    }
  }
}

TEST_CASE("below-gonality verdicts agree with surveys on concrete curves") {
  for (const auto& c : {fixtures::fermat_quartic(11), fixtures::klein_quartic(13)}) {
    const auto gon = gonality_info(c);
    REQUIRE(gon.exact == 3);
    for (int d = 1; d < gon.lower && d <= c.genus() - 1; ++d) {
      CHECK(base_locus_survey(c, d).base_count == 0);
    }
  }
}

TEST_CASE("outcome names") {
  CHECK(outcome_name(SodOutcome::kNoSOD) == "NoSOD");
  CHECK(outcome_name(SodOutcome::kConditionalNone) == "ConditionalNone");
  CHECK(gonality_method_name(GonalityMethod::kGenericFloorReference) == "generic-floor-reference");
}
