#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "symcan/error.hpp"
#include "symcan/jets.hpp"
#include "symcan/matrix.hpp"

using namespace symcan;

namespace {

// Weierstrass expansion at a root a of f: with f(a + s) = f1 s + f2 s^2 + ...
// and t = y, solving t^2 = f(x(t)) gives x(t) = a + c2 t^2 + c4 t^4 + O(t^6)
// where c2 = 1/f1 and c4 = -f2 c2^2 / f1. Then dx/y = x'(t) dt / t.
struct WeierstrassOracle {
  Scalar c2;
  Scalar c4;
};

WeierstrassOracle weierstrass_oracle(const Poly& f, const Scalar& a) {
  const Poly shifted = f.taylor_shift(a);
  const Scalar f1 = shifted.coeff(1);
  const Scalar f2 = shifted.coeff(2);
  const Scalar c2 = f1.inverse();
  return {c2, -(f2 * c2 * c2) / f1};
}

Matrix gamma_with(const CurveModel& c, const std::vector<std::pair<AffinePoint, int>>& z, ChartPreference pref) {
  int d = 0;
  for (const auto& [p, m] : z) d += m;
  Matrix out(c.field(), static_cast<std::size_t>(d), static_cast<std::size_t>(c.genus()));
  std::size_t row = 0;
  for (const auto& [p, m] : z) {
    const auto jets = jets_at(c, p, m, pref);
    for (int r = 0; r < m; ++r, ++row) {
      for (std::size_t i = 0; i < jets.size(); ++i) out.set(row, i, jets[i][static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("canonical bases") {
  const auto hyp = canonical_basis(fixtures::x7_minus_1(0));
  REQUIRE(hyp.size() == 3);
  CHECK(hyp.forms[0].label == "dx/y");
  CHECK(hyp.forms[1].label == "x*dx/y");
  CHECK(hyp.forms[2].label == "x^2*dx/y");
  const auto plane = canonical_basis(fixtures::fermat_quartic(0));
  REQUIRE(plane.size() == 3);
  CHECK(plane.forms[0].label == "X*dx/F_y");
  CHECK(plane.forms[1].label == "Y*dx/F_y");
  CHECK(plane.forms[2].label == "Z*dx/F_y");
  CHECK(canonical_basis(fixtures::hyperelliptic(0, {1, 0, 0, 0, 0, 1})).size() == 2);
  const auto quintic = CurveModel::plane(fixtures::trivariate(0, {{{5, 0, 0}, 1}, {{0, 5, 0}, 1}, {{0, 0, 5}, 1}}));
  CHECK(canonical_basis(quintic).size() == 6);
}

TEST_CASE("first-order jets at ordinary hyperelliptic points") {
  const auto c = fixtures::x7_minus_1(29);
  const auto basis = canonical_basis(c);
  for (const auto& p : affine_rational_points(c)) {
    if (p.y.is_zero()) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto j = jet(c, basis.forms[i], p, 1);
      REQUIRE(j.size() == 1);
      CHECK(j[0] == p.x.pow(i) / p.y);
    }
  }
}

TEST_CASE("Weierstrass jets over Q at (1, 0) on y^2 = x^7 - 1") {
  // f(1 + s) = 7 s + 21 s^2 + ...: c2 = 1/7, c4 = -3/49.
  const auto c = fixtures::x7_minus_1(0);
  const Field q = c.field();
  const AffinePoint w{q.one(), q.zero()};
  const auto basis = canonical_basis(c);
  const auto j0 = jet(c, basis.forms[0], w, 3);
  CHECK(j0 == std::vector<Scalar>{q.parse("2/7"), q.zero(), q.parse("-12/49")});
  // x dx/y = (1 + c2 t^2)(2 c2 + 4 c4 t^2) dt.
  const auto j1 = jet(c, basis.forms[1], w, 3);
  CHECK(j1 == std::vector<Scalar>{q.parse("2/7"), q.zero(), q.parse("-10/49")});
  CHECK(jet(c, basis.forms[0], w, 2) == std::vector<Scalar>{q.parse("2/7"), q.zero()});
}

TEST_CASE("Weierstrass jets over F_29 match the expansion oracle") {
  const auto c = fixtures::x7_minus_1(29);
  const Poly& f = c.hyperelliptic_model()->f();
  const auto basis = canonical_basis(c);
  int seen = 0;
  for (const auto& p : affine_rational_points(c)) {
    if (!p.y.is_zero()) continue;
    ++seen;
    const auto o = weierstrass_oracle(f, p.x);
    const Scalar two = c.field().from_int(2);
    const Scalar four = c.field().from_int(4);
    const auto jets = jets_at(c, p, 3);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      // x^i (2 c2 + 4 c4 t^2) with x^i = a^i + i a^(i-1) c2 t^2 + O(t^4).
      const Scalar ai = p.x.pow(i);
      const Scalar dai = i == 0 ? c.field().zero() : c.field().from_int(static_cast<std::int64_t>(i)) * p.x.pow(i - 1);
      CHECK(jets[i][0] == two * o.c2 * ai);
      CHECK(jets[i][1].is_zero());
      CHECK(jets[i][2] == four * o.c4 * ai + two * o.c2 * dai * o.c2);
    }
  }
  CHECK(seen == 7);
}

TEST_CASE("jets are prefix-stable") {
  for (const auto& c : {fixtures::x7_minus_1(29), fixtures::fermat_quartic(13), fixtures::klein_quartic(11)}) {
    for (const auto& p : affine_rational_points(c)) {
      for (int n = 1; n <= 4; ++n) {
        const auto lo = jets_at(c, p, n);
        const auto hi = jets_at(c, p, n + 1);
        for (std::size_t i = 0; i < lo.size(); ++i) {
          CHECK(std::equal(lo[i].begin(), lo[i].end(), hi[i].begin()));
        }
      }
    }
  }
}

TEST_CASE("K_C has no base points") {
  for (const auto& c : {fixtures::x7_minus_1(31), fixtures::fermat_quartic(13), fixtures::klein_quartic(11)}) {
    for (const auto& p : affine_rational_points(c)) {
      const auto jets = jets_at(c, p, 1);
      CHECK(std::any_of(jets.begin(), jets.end(), [](const auto& j) { return !j[0].is_zero(); }));
    }
  }
}

TEST_CASE("chart choice does not change ranks") {
  const auto c = fixtures::fermat_quartic(13);
  const BivariatePoly fx = c.affine_equation().partial(0);
  const BivariatePoly fy = c.affine_equation().partial(1);
  std::vector<AffinePoint> eligible;
  for (const auto& p : affine_rational_points(c)) {
    if (!fx(p.x, p.y).is_zero() && !fy(p.x, p.y).is_zero()) eligible.push_back(p);
  }
  REQUIRE(eligible.size() >= 3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<AffinePoint, int>> z;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& p = eligible[rng() % eligible.size()];
      if (std::none_of(z.begin(), z.end(), [&](const auto& e) { return e.first == p; })) {
        z.emplace_back(p, static_cast<int>(1 + rng() % 3));
      }
    }
    CHECK(rank(gamma_with(c, z, ChartPreference::kX)) == rank(gamma_with(c, z, ChartPreference::kY)));
  }
}

TEST_CASE("chart errors") {
  const auto c = fixtures::x7_minus_1(29);
  const Field f = c.field();
  const AffinePoint w{f.one(), f.zero()};
  CHECK(choose_chart(c, w, 2).uniformizer == Uniformizer::kYMinusY0);
  CHECK_THROWS_AS(choose_chart(c, w, 2, ChartPreference::kX), Error);
  CHECK_THROWS_AS(jet(c, canonical_basis(c).forms[0], {f.from_int(2), f.from_int(2)}, 1), Error);
  CHECK_THROWS_AS(jets_at(c, w, 0), Error);
}
