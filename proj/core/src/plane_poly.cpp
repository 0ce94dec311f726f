#include "symcan/plane_poly.hpp"

#include <algorithm>

#include "symcan/error.hpp"

namespace symcan {
namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_field(Field expected, const Scalar& c) {
  if (!(c.field() == expected)) {
    throw Error(ErrorCode::kFieldMismatch,
                "coefficient over " + c.field().name() + " in polynomial over " + expected.name());
  }
}

}  // namespace

void BivariatePoly::add_term(Exponent2 exponent, const Scalar& c) {
  require_field(field_, c);
  if (exponent[0] < 0 || exponent[1] < 0) throw Error(ErrorCode::kValidation, "negative exponent");
  accumulate(terms_, exponent, c);
}

Scalar BivariatePoly::operator()(const Scalar& x, const Scalar& y) const {
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    acc += c * x.pow(static_cast<std::uint64_t>(e[0])) * y.pow(static_cast<std::uint64_t>(e[1]));
  }
  return acc;
}

Series BivariatePoly::operator()(const Series& x, const Series& y) const {
  const int n = std::min(x.precision(), y.precision());
  int max_x = 0;
  int max_y = 0;
  for (const auto& [e, c] : terms_) {
    max_x = std::max(max_x, e[0]);
    max_y = std::max(max_y, e[1]);
  }
  std::vector<Series> xp{Series::constant(field_.one(), n)};
  std::vector<Series> yp{Series::constant(field_.one(), n)};
  for (int i = 1; i <= max_x; ++i) xp.push_back(xp.back() * x);
  for (int i = 1; i <= max_y; ++i) yp.push_back(yp.back() * y);
  Series acc = Series::constant(field_.zero(), n);
  for (const auto& [e, c] : terms_) {
    acc += xp[static_cast<std::size_t>(e[0])] * yp[static_cast<std::size_t>(e[1])] * c;
  }
  return acc;
}

BivariatePoly BivariatePoly::partial(int var) const {
  BivariatePoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] == 0) continue;
    Exponent2 d = e;
    d[static_cast<std::size_t>(var)] -= 1;
    out.add_term(d, c * field_.from_int(e[static_cast<std::size_t>(var)]));
  }
  return out;
}

std::vector<Poly> BivariatePoly::coefficients_in(int var) const {
  const auto outer = static_cast<std::size_t>(var);
  const std::size_t inner = 1 - outer;
  std::vector<Poly> out;
  for (const auto& [e, c] : terms_) {
    const auto k = static_cast<std::size_t>(e[outer]);
    while (out.size() <= k) out.emplace_back(field_);
    out[k] += Poly::monomial(c, e[inner]);
  }
  return out;
}

SeriesPoly BivariatePoly::specialize(int unknown, const Series& other) const {
  const auto u = static_cast<std::size_t>(unknown);
  const std::size_t o = 1 - u;
  const int n = other.precision();
  std::vector<Series> powers{Series::constant(field_.one(), n)};
  SeriesPoly out;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[o]) powers.push_back(powers.back() * other);
    const auto k = static_cast<std::size_t>(e[u]);
    while (out.size() <= k) out.push_back(Series::constant(field_.zero(), n));
    out[k] += powers[static_cast<std::size_t>(e[o])] * c;
  }
  return out;
}

void TrivariatePoly::add_term(Exponent3 exponent, const Scalar& c) {
  require_field(field_, c);
  if (exponent[0] < 0 || exponent[1] < 0 || exponent[2] < 0) {
    throw Error(ErrorCode::kValidation, "negative exponent");
  }
  accumulate(terms_, exponent, c);
}

int TrivariatePoly::total_degree() const noexcept {
  int out = -1;
  for (const auto& [e, c] : terms_) out = std::max(out, e[0] + e[1] + e[2]);
  return out;
}

bool TrivariatePoly::is_homogeneous() const noexcept {
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

Scalar TrivariatePoly::operator()(const Scalar& x, const Scalar& y, const Scalar& z) const {
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    acc += c * x.pow(static_cast<std::uint64_t>(e[0])) * y.pow(static_cast<std::uint64_t>(e[1])) *
           z.pow(static_cast<std::uint64_t>(e[2]));
  }
  return acc;
}

TrivariatePoly TrivariatePoly::partial(int var) const {
  const auto v = static_cast<std::size_t>(var);
  TrivariatePoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent3 d = e;
    d[v] -= 1;
    out.add_term(d, c * field_.from_int(e[v]));
  }
  return out;
}

BivariatePoly TrivariatePoly::dehomogenize(int var) const {
  BivariatePoly out(field_);
  for (const auto& [e, c] : terms_) {
    Exponent2 d{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (static_cast<int>(i) != var) d[k++] = e[i];
    }
    out.add_term(d, c);
  }
  return out;
}

TrivariatePoly TrivariatePoly::substitute_linear(const Matrix& m) const {
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorCode::kValidation, "expected a 3x3 matrix");
  if (!(m.field() == field_)) throw Error(ErrorCode::kFieldMismatch, "substitution across fields");
  std::array<TrivariatePoly, 3> forms{TrivariatePoly(field_), TrivariatePoly(field_), TrivariatePoly(field_)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent3 e{0, 0, 0};
      e[j] = 1;
      forms[i].add_term(e, m(i, j));
    }
  }
  TrivariatePoly out(field_);
  for (const auto& [e, c] : terms_) {
    TrivariatePoly term(field_);
    term.add_term({0, 0, 0}, c);
    for (std::size_t i = 0; i < 3; ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * forms[i];
    }
    out = out + term;
  }
  return out;
}

TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::kFieldMismatch, "sum across fields");
  TrivariatePoly out = a;
  for (const auto& [e, c] : b.terms_) accumulate(out.terms_, e, c);
  return out;
}

TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::kFieldMismatch, "product across fields");
  TrivariatePoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      accumulate(out.terms_, Exponent3{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

std::vector<Exponent3> monomials_of_degree(int degree) {
  std::vector<Exponent3> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

}  // namespace symcan
