#include "symcan/linear_system.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "symcan/error.hpp"
#include "symcan/jets.hpp"

namespace symcan {

EffectiveDivisor::EffectiveDivisor(std::vector<DivisorTerm> terms) {
  if (terms.empty()) throw Error(ErrorCode::kValidation, "effective divisor must have positive degree");
  const Field field = terms.front().point.x.field();
  for (const auto& t : terms) {
    if (t.multiplicity < 1) throw Error(ErrorCode::kValidation, "multiplicity must be at least 1");
    if (!(t.point.x.field() == field) || !(t.point.y.field() == field)) {
      throw Error(ErrorCode::kFieldMismatch, "divisor points over different fields");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const DivisorTerm& a, const DivisorTerm& b) { return canonical_compare(a.point, b.point) < 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().point == t.point) {
      terms_.back().multiplicity += t.multiplicity;
    } else {
      terms_.push_back(std::move(t));
    }
    degree_ += t.multiplicity;
  }
}

JetMatrix gamma_matrix(const CurveModel& c, const EffectiveDivisor& z) {
  const auto g = static_cast<std::size_t>(c.genus());
  Matrix m(c.field(), static_cast<std::size_t>(z.degree()), g);
  std::size_t row = 0;
  for (const auto& term : z.terms()) {
    const auto jets = jets_at(c, term.point, term.multiplicity);
    for (int r = 0; r < term.multiplicity; ++r, ++row) {
      for (std::size_t i = 0; i < g; ++i) m.set(row, i, jets[i][static_cast<std::size_t>(r)]);
    }
  }
  return {std::move(m), z};
}

LinearSystemReport report_from_rank(int degree, int genus, int rank_gamma) {
  if (rank_gamma < 0 || rank_gamma > degree || rank_gamma > genus) {
    throw Error(ErrorCode::kValidation, "rank of Gamma must lie in [0, min(d, g)]");
  }
  LinearSystemReport r;
  r.degree = degree;
  r.genus = genus;
  r.rank_gamma = rank_gamma;
  r.h0_K_minus_z = genus - rank_gamma;
  r.h0_z = 1 + degree - rank_gamma;
  r.albanese_fiber_dim = r.h0_z - 1;
  r.is_base_point = rank_gamma < degree;
  if (r.h0_z - r.h0_K_minus_z != degree - genus + 1 || r.is_base_point != (r.h0_z > 1)) {
    throw Error(ErrorCode::kValidation, "Riemann-Roch bookkeeping violated");
  }
  return r;
}

LinearSystemReport linear_system_report(const CurveModel& c, const EffectiveDivisor& z) {
  if (z.degree() > c.genus()) {
    throw Error(ErrorCode::kOutOfRange, "divisor degree " + std::to_string(z.degree()) +
                                            " exceeds genus " + std::to_string(c.genus()));
  }
  const JetMatrix jm = gamma_matrix(c, z);
  return report_from_rank(z.degree(), c.genus(), static_cast<int>(rank(jm.matrix)));
}

bool evaluation_rank_test(const CurveModel& c, const EffectiveDivisor& z) {
  if (z.degree() > c.genus() - 1) {
    throw Error(ErrorCode::kOutOfRange, "evaluation test needs 1 <= deg z <= g - 1");
  }
  const JetMatrix jm = gamma_matrix(c, z);
  return static_cast<int>(rank(jm.matrix)) == z.degree();
}

SubspaceSpec::SubspaceSpec(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || rank(basis_) != basis_.rows()) {
    throw Error(ErrorCode::kValidation, "subspace rows must be linearly independent");
  }
}

bool ds_contains(const CurveModel& c, const SubspaceSpec& s, const EffectiveDivisor& y) {
  const int d = s.dimension();
  if (y.degree() != d) throw Error(ErrorCode::kValidation, "divisor degree must equal dim S");
  if (d > c.genus()) throw Error(ErrorCode::kValidation, "dim S exceeds the genus");
  if (static_cast<int>(s.basis().cols()) != c.genus()) {
    throw Error(ErrorCode::kValidation, "subspace coordinates must have genus many entries");
  }
  const JetMatrix jm = gamma_matrix(c, y);
  // Column j of (jets * S^T) is the jet vector of the j-th basis form of S.
  return static_cast<int>(rank(jm.matrix * s.basis().transpose())) < d;
}

EffectiveDivisor pencil_fiber(const CurveModel& c, const Scalar& b) {
  const auto* h = c.hyperelliptic_model();
  if (h == nullptr || !h->odd_degree()) {
    throw Error(ErrorCode::kNotApplicable, "pencil fibers need an odd-degree hyperelliptic model");
  }
  const Scalar v = h->f()(b);
  const auto s = sqrt(v);
  if (!s) throw Error(ErrorCode::kIrrationalFiber, "f(" + b.to_string() + ") is not a square");
  if (s->is_zero()) return EffectiveDivisor({{AffinePoint{b, *s}, 2}});
  return EffectiveDivisor({{AffinePoint{b, *s}, 1}, {AffinePoint{b, -*s}, 1}});
}

int hyperelliptic_h0_oracle(const CurveModel& c, const EffectiveDivisor& z) {
  if (c.hyperelliptic_model() == nullptr) {
    throw Error(ErrorCode::kNotApplicable, "oracle needs a hyperelliptic model");
  }
  if (z.degree() > c.genus()) throw Error(ErrorCode::kOutOfRange, "oracle needs deg z <= g");
  int pencils = 0;
  const auto& terms = z.terms();
  for (const auto& t : terms) {
    if (!c.contains(t.point)) throw Error(ErrorCode::kValidation, "point is not on the curve");
    if (t.point.y.is_zero()) {
      pencils += t.multiplicity / 2;
      continue;
    }
    // Count each conjugate pair once, from its member with the smaller y.
    const AffinePoint conj{t.point.x, -t.point.y};
    if (canonical_compare(conj, t.point) < 0) continue;
    for (const auto& u : terms) {
      if (u.point == conj) pencils += std::min(t.multiplicity, u.multiplicity);
    }
  }
  return 1 + pencils;
}

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t d) noexcept {
  // C(n + d - 1, d), computed incrementally; each partial product is an
  // exact binomial coefficient.
  if (d == 0) return 1;
  if (n == 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= d; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace symcan
