#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "io.hpp"
#include "symcan/classes.hpp"
#include "symcan/error.hpp"
#include "symcan/gonality.hpp"
#include "symcan/linear_system.hpp"
#include "symcan/survey.hpp"
#include "symcan/verdict.hpp"

namespace {

using symcan::io::Json;

constexpr int kExitError = 2;

int fail(std::string_view code, const std::string& message) {
  std::cerr << symcan::io::dump(Json{{"error", std::string(code)}, {"message", message}});
  return kExitError;
}

symcan::NSClassCd parse_class(int g, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw symcan::Error(symcan::ErrorCode::kParse, "class must be given as a,b (coefficients of x and theta)");
  }
  const symcan::Field q = symcan::Field::rationals();
  const auto a = q.parse(text.substr(0, comma)).rational();
  const auto b = q.parse(text.substr(comma + 1)).rational();
  return symcan::Rational(a) * symcan::class_x(g, 2) + symcan::Rational(b) * symcan::class_theta(g, 2);
}

struct Options {
  std::string curve;
  std::string divisor;
  int g = 0;
  int d = 0;
  std::optional<int> gon;
  bool hyperelliptic = false;
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_divisors = symcan::kDefaultDivisorBudget;
  unsigned jobs = 1;
  std::string u;
  std::string v;
  bool pretty = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical linear systems on symmetric products of curves"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable table instead of JSON");

  auto* genus = app.add_subcommand("genus", "Genus of a curve model");
  genus->add_option("--curve", o.curve, "Curve JSON file")->required()->check(CLI::ExistingFile);

  auto* h0 = app.add_subcommand("h0", "Riemann-Roch report for an effective divisor");
  auto* base = app.add_subcommand("base-point", "Whether a divisor is a base point of |K_{C_d}|");
  for (auto* cmd : {h0, base}) {
    cmd->add_option("--curve", o.curve, "Curve JSON file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--divisor", o.divisor, "Divisor JSON file")->required()->check(CLI::ExistingFile);
  }

  auto* survey = app.add_subcommand("survey", "Base-locus survey over rational divisors");
  survey->add_option("--curve", o.curve, "Curve JSON file")->required()->check(CLI::ExistingFile);
  survey->add_option("--d", o.d, "Divisor degree")->required();
  survey->add_option("--mode", o.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  survey->add_option("--samples", o.samples, "Sample count in sampled mode");
  survey->add_option("--seed", o.seed, "Seed for sampled mode");
  survey->add_option("--max-divisors", o.max_divisors, "Refuse runs needing more divisors");
  survey->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* classes = app.add_subcommand("classes", "Canonical class data on C_d");
  auto* macdonald = app.add_subcommand("macdonald", "h^0(C_d, K)");
  for (auto* cmd : {classes, macdonald}) {
    cmd->add_option("--g", o.g, "Genus")->required();
    cmd->add_option("--d", o.d, "Degree")->required();
  }
  classes->add_flag("--hyperelliptic", o.hyperelliptic, "Include Gamma^2");

  auto* intersect = app.add_subcommand("intersect", "Intersection of a*x + b*theta classes on C_2");
  intersect->add_option("--g", o.g, "Genus")->required();
  intersect->add_option("--u", o.u, "First class as a,b")->required();
  intersect->add_option("--v", o.v, "Second class as a,b")->required();

  auto* gamma2 = app.add_subcommand("gamma2", "Self-intersection of Gamma on C_2");
  gamma2->add_option("--g", o.g, "Genus")->required();

  auto* gonality = app.add_subcommand("gonality", "Gonality bounds");
  auto* gon_curve = gonality->add_option("--curve", o.curve, "Curve JSON file")->check(CLI::ExistingFile);
  auto* gon_g = gonality->add_option("--g", o.g, "Genus (no curve)");
  gon_curve->excludes(gon_g);
  gonality->add_option("--max-divisors", o.max_divisors, "Budget for the plane lower-bound check");

  auto* verdict = app.add_subcommand("verdict", "Semi-orthogonal decomposition verdict for D(C_d)");
  auto* v_g = verdict->add_option("--g", o.g, "Genus");
  verdict->add_option("--d", o.d, "Degree")->required();
  auto* v_curve = verdict->add_option("--curve", o.curve, "Curve JSON file")->check(CLI::ExistingFile);
  auto* v_gon = verdict->add_option("--gon", o.gon, "Asserted gonality");
  auto* v_hyp = verdict->add_flag("--hyperelliptic", o.hyperelliptic, "Curve is hyperelliptic");
  v_curve->excludes(v_gon)->excludes(v_hyp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  try {
    Json out;
    if (genus->parsed()) {
      const auto c = symcan::io::curve_from_json(symcan::io::read_json_file(o.curve));
      out = Json{{"curve", symcan::io::to_json(c)}, {"genus", symcan::genus(c)}};
    } else if (h0->parsed() || base->parsed()) {
      const auto c = symcan::io::curve_from_json(symcan::io::read_json_file(o.curve));
      const auto z = symcan::io::divisor_from_json(symcan::io::read_json_file(o.divisor), c.field());
      for (const auto& t : z.terms()) {
        if (!c.contains(t.point)) {
          throw symcan::Error(symcan::ErrorCode::kValidation,
                              "point (" + t.point.x.to_string() + ", " + t.point.y.to_string() + ") is not on the curve");
        }
      }
      const auto r = symcan::linear_system_report(c, z);
      if (h0->parsed()) {
        out = symcan::io::to_json(r);
      } else {
        out = Json{{"divisor", symcan::io::to_json(z)},
                   {"degree", r.degree},
                   {"rank_gamma", r.rank_gamma},
                   {"is_base_point", r.is_base_point}};
      }
    } else if (survey->parsed()) {
      const auto c = symcan::io::curve_from_json(symcan::io::read_json_file(o.curve));
      symcan::SurveyOptions so;
      so.mode = o.mode == "sampled" ? symcan::SurveyMode::kSampled : symcan::SurveyMode::kExhaustive;
      if (so.mode == symcan::SurveyMode::kSampled && !o.seed) return fail("usage", "sampled mode requires --seed");
      so.samples = o.samples;
      so.seed = o.seed.value_or(0);
      so.max_divisors = o.max_divisors;
      so.jobs = o.jobs;
      out = symcan::io::to_json(symcan::base_locus_survey(c, o.d, so));
    } else if (classes->parsed()) {
      out = symcan::io::classes_table(o.g, o.d, o.hyperelliptic);
    } else if (macdonald->parsed()) {
      out = symcan::macdonald_h0_canonical(o.g, o.d);
    } else if (intersect->parsed()) {
      const auto u = parse_class(o.g, o.u);
      const auto v = parse_class(o.g, o.v);
      out = Json{{"g", o.g},
                 {"u", Json::array({u.a.str(), u.b.str()})},
                 {"v", Json::array({v.a.str(), v.b.str()})},
                 {"intersection", symcan::c2_intersect(u, v).str()}};
    } else if (gamma2->parsed()) {
      const auto detail = symcan::gamma_self_intersection_detail(o.g);
      out = Json{{"g", o.g},
                 {"graph_self_intersection", detail.graph_self_intersection},
                 {"gamma2", detail.gamma_self_intersection}};
      if (o.g >= 3) {
        const auto nd = symcan::negative_definite_base_component(o.g);
        out["matrix"] = nd.matrix;
        out["negative_definite"] = nd.negative_definite;
      }
    } else if (gonality->parsed()) {
      if (!o.curve.empty()) {
        const auto c = symcan::io::curve_from_json(symcan::io::read_json_file(o.curve));
        symcan::GonalityOptions go;
        go.max_divisors = o.max_divisors;
        out = symcan::io::to_json(symcan::gonality_info(c, go));
      } else if (gon_g->count() > 0) {
        out = symcan::io::to_json(symcan::gonality_unknown(o.g));
      } else {
        return fail("usage", "gonality needs --curve or --g");
      }
    } else if (verdict->parsed()) {
      symcan::GonalityInfo gon;
      bool hyperelliptic = o.hyperelliptic;
      int g = o.g;
      if (!o.curve.empty()) {
        const auto c = symcan::io::curve_from_json(symcan::io::read_json_file(o.curve));
        if (v_g->count() > 0 && o.g != c.genus()) {
          throw symcan::Error(symcan::ErrorCode::kValidation, "--g does not match the curve genus");
        }
        g = c.genus();
        gon = symcan::gonality_info(c);
        hyperelliptic = c.hyperelliptic_model() != nullptr;
      } else if (v_g->count() == 0) {
        return fail("usage", "verdict needs --g or --curve");
      } else if (o.gon) {
        gon = symcan::gonality_asserted(g, *o.gon);
        if (hyperelliptic && *o.gon != 2) {
          throw symcan::Error(symcan::ErrorCode::kValidation, "a hyperelliptic curve has gonality 2");
        }
      } else {
        gon = hyperelliptic ? symcan::gonality_asserted(g, 2) : symcan::gonality_unknown(g);
      }
      out = symcan::io::to_json(symcan::verdict(g, o.d, gon, hyperelliptic));
    }
    std::cout << (o.pretty ? symcan::io::render_table(out) : symcan::io::dump(out));
    return EXIT_SUCCESS;
  } catch (const symcan::Error& e) {
    return fail(symcan::error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}
