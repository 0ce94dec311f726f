#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "symcan/error.hpp"
#include "symcan/matrix.hpp"
#include "symcan/poly.hpp"
#include "symcan/scalar.hpp"
#include "symcan/series.hpp"

using namespace symcan;

namespace {

Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (auto v : r) row.push_back(f.from_int(v));
    s.push_back(std::move(row));
  }
  return Matrix::from_rows(f, s);
}

// Leibniz expansion; no elimination involved.
Scalar leibniz_det(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.field().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Scalar term = m.field().one();
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(rows[i], cols[perm[i]]);
    total += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool some_nonzero_minor(const Matrix& m, std::size_t k) {
  std::vector<bool> rsel(m.rows(), false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (rsel[i]) rows.push_back(i);
    }
    std::vector<bool> csel(m.cols(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < m.cols(); ++i) {
        if (csel[i]) cols.push_back(i);
      }
      if (!leibniz_det(m, rows, cols).is_zero()) return true;
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return false;
}

std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    if (some_nonzero_minor(m, k)) return k;
  }
  return 0;
}

// Random matrix of rank at most k, as a product of random factors.
Matrix random_low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  Matrix a(f, r, k);
  Matrix b(f, k, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) a.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 7) - 3));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < c; ++j) b.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 7) - 3));
  }
  return a * b;
}

}  // namespace

TEST_CASE("rank of identity and proportional rows") {
  const Field q = Field::rationals();
  CHECK(rank(Matrix::identity(q, 3)) == 3);
  CHECK(rank(from_ints(q, {{1, 2, 3}, {5, 10, 15}})) == 1);
  CHECK(rank(Matrix(q, 2, 4)) == 0);
}

TEST_CASE("rank of a random 4x6 matrix over F_101 matches minors") {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(7);
  Matrix m(f, 4, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 6; ++j) m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 101)));
  }
  CHECK(rank(m) == rank_by_minors(m));
}

TEST_CASE("rank equals the largest nonzero minor, dimensions up to 5") {
  std::mt19937_64 rng(20261016);
  for (const Field f : {Field::rationals(), Field::prime(5), Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5;
      const std::size_t c = 1 + rng() % 5;
      const std::size_t k = 1 + rng() % 5;
      const Matrix m = random_low_rank(f, r, c, k, rng);
      CAPTURE(m.to_string());
      CHECK(rank(m) == rank_by_minors(m));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("rank rejects mixed fields") {
  Matrix m(Field::prime(7), 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Field::prime(11).one()), Error);
}

TEST_CASE("inverse round-trips") {
  const Field f = Field::prime(13);
  const Matrix m = from_ints(f, {{2, 1, 0}, {0, 1, 4}, {1, 0, 1}});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(f, 3));
  CHECK_FALSE(inverse(from_ints(f, {{1, 2}, {2, 4}})));
}

TEST_CASE("newton root of y^2 = 1 + t is the binomial series") {
  const Field q = Field::rationals();
  const int n = 3;
  const Series one = Series::constant(q.one(), n);
  const SeriesPoly eq{-(one + Series::variable(q, n)), Series::constant(q.zero(), n), one};
  const Series y = series_newton_root(eq, q.one(), n);
  CHECK(y[0] == q.one());
  CHECK(y[1] == q.parse("1/2"));
  CHECK(y[2] == q.parse("-1/8"));

  const Series c = series_newton_root(SeriesPoly{-Series::constant(q.one(), 1), Series::constant(q.zero(), 1),
                                                 Series::constant(q.one(), 1)},
                                      q.one(), 1);
  CHECK(c.precision() == 1);
  CHECK(c[0] == q.one());
}

TEST_CASE("newton root squares back to f(a + t)") {
  // y^2 = x^7 - 1 over F_29 at a non-Weierstrass point (a, b).
  const Field f = Field::prime(29);
  const Poly fx = Poly::from_ints(f, {-1, 0, 0, 0, 0, 0, 0, 1});
  for (std::int64_t a = 0; a < 29; ++a) {
    const auto b = sqrt(fx(f.from_int(a)));
    if (!b || b->is_zero()) continue;
    const int n = 6;
    const Series rhs = Series::from_poly(fx.taylor_shift(f.from_int(a)), n);
    const SeriesPoly eq{-rhs, Series::constant(f.zero(), n), Series::constant(f.one(), n)};
    const Series y = series_newton_root(eq, *b, n);
    CHECK(y * y == rhs);
  }
}

TEST_CASE("newton root refuses a singular branch") {
  const Field q = Field::rationals();
  const int n = 3;
  const Series t = Series::variable(q, n);
  // y^2 = t at y(0) = 0: derivative 2y vanishes.
  const SeriesPoly eq{-t, Series::constant(q.zero(), n), Series::constant(q.one(), n)};
  try {
    series_newton_root(eq, q.zero(), n);
    FAIL("expected singular-branch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingularBranch);
  }
}

TEST_CASE("series arithmetic is associative") {
  const Field f = Field::prime(31);
  std::mt19937_64 rng(3);
  auto random_series = [&] {
    std::vector<Scalar> c;
    for (int i = 0; i < 5; ++i) c.push_back(f.from_int(static_cast<std::int64_t>(rng() % 31)));
    return Series(f, c);
  };
  for (int i = 0; i < 20; ++i) {
    const Series a = random_series();
    const Series b = random_series();
    const Series c = random_series();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("squarefree examples") {
  const Field q = Field::rationals();
  CHECK(poly_is_squarefree(Poly::from_ints(q, {-1, 0, 0, 0, 0, 0, 0, 1})));
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  CHECK_FALSE(poly_is_squarefree(Poly::from_ints(q, {2, -3, 0, 1})));
}

TEST_CASE("x^5 + x + 1 over F_13 against a hand-run Euclid") {
  // f' = 5x^4 + 1. 5f - x f' = 4x + 5, whose root is x = -5/4 = 2 in F_13.
  // f(2) = 32 + 2 + 1 = 35 = 9 != 0, so gcd(f, f') = 1.
  const Field f = Field::prime(13);
  const Poly p = Poly::from_ints(f, {1, 1, 0, 0, 0, 1});
  CHECK((p * f.from_int(5) - Poly::monomial(f.one(), 1) * p.derivative()) == Poly::from_ints(f, {5, 4}));
  CHECK(p(f.from_int(2)) == f.from_int(9));
  CHECK(poly_is_squarefree(p));
  CHECK(gcd(p, p.derivative()).degree() == 0);
}

TEST_CASE("squarefree needs p above the degree") {
  CHECK_THROWS_AS(poly_is_squarefree(Poly::from_ints(Field::prime(5), {1, 0, 0, 0, 0, 1, 1})), Error);
}

TEST_CASE("rational arithmetic stays exact") {
  const Field q = Field::rationals();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t c = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 1000);
    const Scalar lhs = q.from_int(a) / q.from_int(b) + q.from_int(c) / q.from_int(d);
    CHECK(lhs == q.from_int(a * d + c * b) / q.from_int(b * d));
    CHECK(q.parse(lhs.to_string()) == lhs);
  }
}

TEST_CASE("prime field basics") {
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::prime(2), Error);
  const Field f = Field::prime(29);
  CHECK(f.parse("1/2") * f.from_int(2) == f.one());
  CHECK(f.from_int(-1).to_string() == "28");
  CHECK(f.from_int(5).inverse() * f.from_int(5) == f.one());
  for (std::int64_t a = 1; a < 29; ++a) {
    const auto r = sqrt(f.from_int(a));
    if (r) CHECK(*r * *r == f.from_int(a));
  }
  CHECK_THROWS_AS(f.one() + Field::prime(31).one(), Error);
  CHECK_THROWS_AS(f.zero().inverse(), Error);
}

TEST_CASE("resultant detects a common root") {
  // Treat a(x, y) = y - x and b(x, y) = y + x - 2 as polynomials in y over F[x];
  // the resultant vanishes where they share y, i.e. at x = 1.
  const Field q = Field::rationals();
  const std::vector<Poly> a{Poly::from_ints(q, {0, -1}), Poly::from_ints(q, {1})};
  const std::vector<Poly> b{Poly::from_ints(q, {-2, 1}), Poly::from_ints(q, {1})};
  const Poly r = resultant(a, b);
  CHECK(r.degree() == 1);
  CHECK(r(q.one()).is_zero());
}
