#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "symcan/classes.hpp"
#include "symcan/error.hpp"

namespace symcan::io {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) parse_fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const Json& j, std::ostringstream& out, const std::string& indent) {
  if (!j.is_object()) {
    out << indent << cell(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    const bool table = v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) {
      return e.is_object();
    });
    if (v.is_object()) {
      out << indent << k << ":\n";
      render(v, out, indent + "  ");
    } else if (table) {
      out << indent << k << ":\n";
      std::vector<std::string> cols;
      for (const auto& [c, _] : v.front().items()) cols.push_back(c);
      std::vector<std::vector<std::string>> rows{cols};
      for (const auto& e : v) {
        std::vector<std::string> row;
        for (const auto& c : cols) row.push_back(e.contains(c) ? cell(e.at(c)) : "");
        rows.push_back(std::move(row));
      }
      std::vector<std::size_t> w(cols.size(), 0);
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      }
      for (const auto& r : rows) {
        out << indent << "  ";
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << r[i];
          if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << '\n';
      }
    } else {
      out << indent << k << std::string(width - k.size() + 2, ' ') << cell(v) << '\n';
    }
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Field field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    const Json& p = member(j, "p");
    if (!p.is_number_unsigned()) parse_fail("field 'p' must be a positive integer");
    return Field::prime(p.get<std::uint64_t>());
  }
  parse_fail("field kind must be \"Q\" or \"Fp\"");
}

Json to_json(const Field& f) {
  if (f.is_rational()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

Scalar scalar_from_json(const Json& j, const Field& f) {
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  parse_fail("scalars must be decimal strings or integers");
}

Json to_json(const Scalar& s) { return s.to_string(); }

CurveModel curve_from_json(const Json& j) {
  const Json& model = member(j, "model");
  const Field f = field_from_json(member(j, "field"));
  if (model == "hyperelliptic") {
    const Json& coeffs = member(j, "f");
    if (!coeffs.is_array()) parse_fail("'f' must be an array");
    std::vector<Scalar> c;
    for (const auto& e : coeffs) c.push_back(scalar_from_json(e, f));
    return CurveModel::hyperelliptic(Poly(f, std::move(c)));
  }
  if (model == "plane") {
    const int degree = int_member(j, "degree");
    const Json& terms = member(j, "F");
    if (!terms.is_array()) parse_fail("'F' must be an array");
    TrivariatePoly poly(f);
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer()) {
        parse_fail("plane terms must be [i, j, k, coeff]");
      }
      poly.add_term({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}, scalar_from_json(t[3], f));
    }
    if (poly.total_degree() != degree) {
      throw Error(ErrorCode::kValidation, "declared degree " + std::to_string(degree) +
                                              " does not match F of degree " + std::to_string(poly.total_degree()));
    }
    return CurveModel::plane(std::move(poly));
  }
  parse_fail("model must be \"hyperelliptic\" or \"plane\"");
}

Json to_json(const CurveModel& c) {
  Json j;
  if (const auto* h = c.hyperelliptic_model()) {
    j["model"] = "hyperelliptic";
    j["field"] = to_json(c.field());
    Json f = Json::array();
    for (const auto& s : h->f().coefficients()) f.push_back(to_json(s));
    j["f"] = std::move(f);
    return j;
  }
  const auto* p = c.plane_model();
  j["model"] = "plane";
  j["field"] = to_json(c.field());
  j["degree"] = p->degree();
  Json terms = Json::array();
  for (const auto& [e, s] : p->F().terms()) terms.push_back(Json::array({e[0], e[1], e[2], to_json(s)}));
  j["F"] = std::move(terms);
  return j;
}

EffectiveDivisor divisor_from_json(const Json& j, const Field& f) {
  const Json& points = member(j, "points");
  if (!points.is_array()) parse_fail("'points' must be an array");
  std::vector<DivisorTerm> terms;
  for (const auto& p : points) {
    terms.push_back({AffinePoint{scalar_from_json(member(p, "x"), f), scalar_from_json(member(p, "y"), f)},
                     int_member(p, "mult")});
  }
  return EffectiveDivisor(std::move(terms));
}

Json to_json(const EffectiveDivisor& z) {
  Json points = Json::array();
  for (const auto& t : z.terms()) {
    points.push_back(Json{{"x", to_json(t.point.x)}, {"y", to_json(t.point.y)}, {"mult", t.multiplicity}});
  }
  return Json{{"points", std::move(points)}};
}

Json to_json(const LinearSystemReport& r) {
  return Json{{"degree", r.degree},
              {"genus", r.genus},
              {"rank_gamma", r.rank_gamma},
              {"h0_K_minus_z", r.h0_K_minus_z},
              {"h0_z", r.h0_z},
              {"albanese_fiber_dim", r.albanese_fiber_dim},
              {"is_base_point", r.is_base_point}};
}

Json to_json(const SurveyReport& r) {
  Json summary{{"genus", r.genus},
               {"degree", r.degree},
               {"mode", r.mode == SurveyMode::kExhaustive ? "exhaustive" : "sampled"}};
  if (r.mode == SurveyMode::kSampled) summary["seed"] = r.seed;
  summary["point_count"] = r.point_count;
  summary["divisor_count"] = r.divisor_count;
  summary["base_count"] = r.base_count;
  if (r.gamma_check) {
    summary["gamma_check"] = Json{{"expected", r.gamma_check->expected},
                                  {"found", r.gamma_check->found},
                                  {"mismatches", r.gamma_check->mismatches}};
  }
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json row{{"divisor", to_json(rec.divisor)}};
    const Json report = to_json(rec.report);
    for (const auto& [k, v] : report.items()) {
      if (k != "degree" && k != "genus") row[k] = v;
    }
    records.push_back(std::move(row));
  }
  return Json{{"summary", std::move(summary)}, {"records", std::move(records)}};
}

Json to_json(const GonalityInfo& g) {
  Json j{{"lower", g.lower}, {"upper", g.upper}};
  j["exact"] = g.exact ? Json(*g.exact) : Json(nullptr);
  j["method"] = std::string(gonality_method_name(g.method));
  j["generic_floor"] = g.generic_floor;
  j["notes"] = g.notes;
  return j;
}

Json to_json(const SodVerdict& v) {
  return Json{{"g", v.g},
              {"d", v.d},
              {"outcome", std::string(outcome_name(v.outcome))},
              {"rule", v.rule},
              {"components", v.components},
              {"notes", v.notes}};
}

Json classes_table(int g, int d, bool hyperelliptic) {
  const NSClassCd k = canonical_class(g, d);
  Json j{{"g", g}, {"d", d}, {"K", Json::array({k.a.str(), k.b.str()})}};
  if (d == 2) j["K2"] = c2_intersect(k, k).str();
  j["h0K"] = macdonald_h0_canonical(g, d);
  j["nef"] = is_nef_sufficient(k) == Nefness::kNef ? "nef" : "unknown";
  if (hyperelliptic) j["gamma2"] = gamma_self_intersection(g);
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string render_table(const Json& j) {
  std::ostringstream out;
  render(j, out, "");
  return out.str();
}

}  // namespace symcan::io
