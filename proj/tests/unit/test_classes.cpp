#include <doctest.h>

#include <random>

#include "symcan/classes.hpp"
#include "symcan/error.hpp"

using namespace symcan;

namespace {

// Integer-linear form c + a*g + b*d, enough to run the class formulas
// symbolically in g and d.
struct Linear {
  long long c = 0;
  long long g = 0;
  long long d = 0;

  Linear() = default;
  explicit Linear(long long k) : c(k) {}
  Linear(long long c_, long long g_, long long d_) : c(c_), g(g_), d(d_) {}

  friend Linear operator+(const Linear& u, const Linear& v) { return {u.c + v.c, u.g + v.g, u.d + v.d}; }
  friend Linear operator-(const Linear& u, const Linear& v) { return {u.c - v.c, u.g - v.g, u.d - v.d}; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

NSClassC2Product product(int g, long long f1, long long f2, long long delta) { return {g, f1, f2, delta}; }

}  // namespace

TEST_CASE("K + Delta'/2 = (2g - 2) x as an identity in g and d") {
  const Linear g(0, 1, 0);
  const Linear d(0, 0, 1);
  const auto k = canonical_class_coefficients(g, d);
  const auto h = delta_prime_half_coefficients(g, d);
  CHECK(k.x == Linear(-1, 1, -1));
  CHECK(k.theta == Linear(1));
  CHECK(k.x + h.x == Linear(-2, 2, 0));
  CHECK(k.theta + h.theta == Linear(0));
}

TEST_CASE("canonical class values") {
  CHECK(canonical_class(4, 2) == NSClassCd{4, 2, 1, 1});
  CHECK(canonical_class(2, 2) == NSClassCd{2, 2, -1, 1});
  for (int g = 2; g <= 10; ++g) {
    CHECK(canonical_class(g, g - 1).a == 0);
    for (int d = 1; d <= g; ++d) {
      const auto k = canonical_class(g, d);
      CHECK(k == NSClassCd{g, d, g - d - 1, 1});
      CHECK(k + delta_prime_half_class(g, d) == Rational(2 * g - 2) * class_x(g, d));
    }
  }
  CHECK(delta_prime_half_class(3, 2) == NSClassCd{3, 2, 4, -1});
  CHECK(delta_prime_half_class(2, 2) == NSClassCd{2, 2, 3, -1});
  CHECK_THROWS_AS(canonical_class(1, 1), Error);
  CHECK_THROWS_AS(canonical_class(3, 0), Error);
}

TEST_CASE("nefness rule") {
  for (int g = 3; g <= 10; ++g) {
    for (int d = 2; d < g; ++d) CHECK(is_nef_sufficient(canonical_class(g, d)) == Nefness::kNef);
  }
  CHECK(is_nef_sufficient(NSClassCd{3, 2, -1, 1}) == Nefness::kUnknown);
  CHECK(is_nef_sufficient(NSClassCd{3, 2, 0, 0}) == Nefness::kNef);
  CHECK(is_nef_sufficient(NSClassCd{}) == Nefness::kNotApplicable);
}

TEST_CASE("Macdonald dimensions") {
  CHECK(macdonald_h0_canonical(4, 2) == 6);
  CHECK(macdonald_h0_canonical(3, 2) == 3);
  CHECK(macdonald_h0_canonical(2, 3) == 0);
  for (int g = 2; g <= 10; ++g) {
    CHECK(macdonald_h0_canonical(g, g) == 1);
    CHECK((macdonald_h0_canonical(g, 2) > 1) == (g >= 3));
    for (int d = 1; d <= g; ++d) CHECK(macdonald_h0_canonical(g, d) == static_cast<std::uint64_t>(binomial(g, d)));
  }
}

TEST_CASE("pullback to C x C") {
  for (int g = 2; g <= 10; ++g) {
    CHECK(c2_pullback(class_x(g, 2)) == product(g, 1, 1, 0));
    CHECK(c2_pullback(class_theta(g, 2)) == product(g, g + 1, g + 1, -1));
    CHECK(c2_pullback(canonical_class(g, 2)) == product(g, 2 * g - 2, 2 * g - 2, -1));
  }
  CHECK_THROWS_AS(c2_pullback(class_x(4, 3)), Error);
}

TEST_CASE("intersections on C x C") {
  CHECK(c2product_intersect(product(3, 0, 0, 1), product(3, 0, 0, 1)) == -4);
  CHECK(c2product_intersect(product(3, 1, 0, 0), product(3, 0, 1, 0)) == 1);
  CHECK(c2product_intersect(product(3, 1, 0, 0), product(3, 1, 0, 0)) == 0);
  for (int g = 2; g <= 10; ++g) {
    const auto k = product(g, 2 * g - 2, 2 * g - 2, -1);
    CHECK(c2product_intersect(k, k) == Rational((2 * g - 2) * (4 * g - 9)));
  }
  CHECK_THROWS_AS(c2product_intersect(product(3, 1, 0, 0), product(4, 1, 0, 0)), Error);
}

TEST_CASE("intersections on C_2") {
  for (int g = 2; g <= 10; ++g) {
    const auto x = class_x(g, 2);
    const auto t = class_theta(g, 2);
    CHECK(c2_intersect(x, x) == 1);
    CHECK(c2_intersect(x, t) == g);
    CHECK(c2_intersect(t, t) == g * (g - 1));
    const auto k = canonical_class(g, 2);
    CHECK(c2_intersect(k, k) == Rational((g - 1) * (4 * g - 9)));
    CHECK((c2_intersect(k, k) > 0) == (g >= 3));
  }
  CHECK(c2_intersect(canonical_class(3, 2), canonical_class(3, 2)) == 6);
  CHECK(c2_intersect(canonical_class(2, 2), canonical_class(2, 2)) == -1);
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(42);
  auto small = [&] { return Rational(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 3)); };
  for (int trial = 0; trial < 200; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 9);
    const NSClassCd u{g, 2, small(), small()};
    const NSClassCd v{g, 2, small(), small()};
    const NSClassCd w{g, 2, small(), small()};
    const Rational k = small();
    CHECK(c2_intersect(u, v) == c2_intersect(v, u));
    CHECK(c2_intersect(u + v, w) == c2_intersect(u, w) + c2_intersect(v, w));
    CHECK(c2_intersect(k * u, v) == k * c2_intersect(u, v));
    CHECK(c2_pullback(u + v) == c2_pullback(u) + c2_pullback(v));
    CHECK(c2product_intersect(c2_pullback(u), c2_pullback(v)) == 2 * c2_intersect(u, v));
  }
}

TEST_CASE("Gamma") {
  CHECK(gamma_self_intersection(3) == -2);
  CHECK(gamma_self_intersection(2) == -1);
  for (int g = 2; g <= 10; ++g) {
    const auto detail = gamma_self_intersection_detail(g);
    CHECK(detail.gamma_self_intersection == 1 - g);
    CHECK(2 * detail.gamma_self_intersection == detail.graph_self_intersection);
  }
  for (int g = 3; g <= 10; ++g) {
    const auto r = negative_definite_base_component(g);
    CHECK(r.matrix == std::vector<std::vector<int>>{{1 - g}});
    CHECK(r.negative_definite);
    CHECK(r.by_minors == r.by_sign);
  }
  CHECK(negative_definite_base_component(10).matrix[0][0] == -9);
  CHECK_THROWS_AS(negative_definite_base_component(2), Error);
}
