#include "symcan/survey.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <utility>

#include "symcan/error.hpp"
#include "symcan/jets.hpp"

namespace symcan {

JetTable::JetTable(const CurveModel& c, std::vector<AffinePoint> points, int order)
    : field_(c.field()), genus_(c.genus()), order_(order), points_(std::move(points)) {
  if (order_ < 1) throw Error(ErrorCode::kValidation, "jet order must be at least 1");
  jets_.reserve(points_.size());
  for (const auto& p : points_) jets_.push_back(jets_at(c, p, order_));
}

EffectiveDivisor JetTable::divisor(const std::vector<std::size_t>& multiset) const {
  std::vector<DivisorTerm> terms;
  for (std::size_t i = 0; i < multiset.size();) {
    std::size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    terms.push_back({points_.at(multiset[i]), static_cast<int>(j - i)});
    i = j;
  }
  return EffectiveDivisor(std::move(terms));
}

Matrix JetTable::gamma(const std::vector<std::size_t>& multiset) const {
  // Rows must follow the canonical divisor order, not the index order.
  const EffectiveDivisor z = divisor(multiset);
  const auto g = static_cast<std::size_t>(genus_);
  Matrix m(field_, static_cast<std::size_t>(z.degree()), g);
  std::size_t row = 0;
  for (const auto& term : z.terms()) {
    if (term.multiplicity > order_) throw Error(ErrorCode::kOutOfRange, "multiplicity exceeds table order");
    const auto it = std::find(points_.begin(), points_.end(), term.point);
    const auto& jets = jets_[static_cast<std::size_t>(it - points_.begin())];
    for (int r = 0; r < term.multiplicity; ++r, ++row) {
      for (std::size_t i = 0; i < g; ++i) m.set(row, i, jets[i][static_cast<std::size_t>(r)]);
    }
  }
  return m;
}

bool is_hyperelliptic_pencil_divisor(const EffectiveDivisor& z) {
  if (z.degree() != 2) return false;
  const auto& t = z.terms();
  if (t.size() == 1) return t[0].point.y.is_zero();
  return t[0].point.x == t[1].point.x && t[0].point.y == -t[1].point.y && !t[0].point.y.is_zero();
}

SurveyReport base_locus_survey(const CurveModel& c, int d, const SurveyOptions& options) {
  if (c.field().is_rational()) {
    throw Error(ErrorCode::kUnsupportedEnumeration, "survey needs a prime field");
  }
  if (d < 1 || d > c.genus() - 1) {
    throw Error(ErrorCode::kOutOfRange, "survey needs 1 <= d <= g - 1");
  }
  const std::vector<AffinePoint> points = affine_rational_points(c);

  std::vector<std::vector<std::size_t>> multisets;
  if (options.mode == SurveyMode::kExhaustive) {
    const std::uint64_t needed = multiset_count(points.size(), static_cast<std::uint64_t>(d));
    if (needed > options.max_divisors) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "exhaustive survey needs a budget of " + std::to_string(needed) + " divisors (limit " +
                      std::to_string(options.max_divisors) + ")");
    }
    multisets.reserve(needed);
    for_each_multiset(points.size(), d, [&](const auto& idx) { multisets.push_back(idx); });
  } else {
    if (options.samples > options.max_divisors) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "sampled survey needs a budget of " + std::to_string(options.samples) + " divisors (limit " +
                      std::to_string(options.max_divisors) + ")");
    }
    if (!points.empty()) {
      // Plain modular reduction keeps the sample sequence identical across
      // standard library implementations.
      std::mt19937_64 rng(options.seed);
      for (std::uint64_t s = 0; s < options.samples; ++s) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(d));
        for (auto& i : idx) i = static_cast<std::size_t>(rng() % points.size());
        std::sort(idx.begin(), idx.end());
        multisets.push_back(std::move(idx));
      }
      std::sort(multisets.begin(), multisets.end());
    }
  }

  const JetTable table(c, points, d);
  std::vector<std::optional<SurveyRecord>> slots(multisets.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      EffectiveDivisor z = table.divisor(multisets[i]);
      const auto r = static_cast<int>(rank(table.gamma(multisets[i])));
      slots[i] = SurveyRecord{std::move(z), report_from_rank(d, c.genus(), r)};
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, multisets.size()));
  if (jobs <= 1) {
    work(0, multisets.size());
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (multisets.size() + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = j * chunk;
      const std::size_t end = std::min(multisets.size(), begin + chunk);
      if (begin < end) threads.emplace_back(work, begin, end);
    }
  }

  SurveyReport out;
  out.genus = c.genus();
  out.degree = d;
  out.mode = options.mode;
  out.seed = options.seed;
  out.point_count = points.size();
  out.records.reserve(slots.size());
  for (auto& s : slots) out.records.push_back(std::move(*s));
  out.divisor_count = out.records.size();
  for (const auto& r : out.records) out.base_count += r.report.is_base_point ? 1 : 0;

  if (c.hyperelliptic_model() != nullptr && d == 2) {
    GammaLocusCheck check;
    for (const auto& r : out.records) {
      const bool expected = is_hyperelliptic_pencil_divisor(r.divisor);
      check.expected += expected ? 1 : 0;
      check.found += r.report.is_base_point ? 1 : 0;
      check.mismatches += expected != r.report.is_base_point ? 1 : 0;
    }
    out.gamma_check = check;
  }
  return out;
}

}  // namespace symcan
