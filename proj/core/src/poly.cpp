#include "symcan/poly.hpp"

#include <algorithm>
#include <utility>

#include "symcan/error.hpp"

namespace symcan {

Poly::Poly(Field field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) {
      throw Error(ErrorCode::kFieldMismatch,
                  "coefficient over " + c.field().name() + " in polynomial over " +
                      field_.name());
    }
  }
  trim();
}

Poly Poly::from_ints(Field field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.push_back(field.from_int(c));
  return Poly(field, std::move(out));
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> out(static_cast<std::size_t>(k) + 1, c.field().zero());
  out.back() = c;
  return Poly(c.field(), std::move(out));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorCode::kFieldMismatch,
                "polynomials over " + field_.name() + " and " + rhs.field_.name());
  }
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kValidation, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::taylor_shift(const Scalar& a) const {
  // Horner in the ring: ((c_n)(X + a) + c_{n-1})(X + a) + ...
  const Poly shift(field_, {a, field_.one()});
  Poly acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= shift;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
  const Field field = a.field();
  std::vector<Scalar> rem = a.coefficients();
  const auto& den = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(field), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db) + 1, field.zero());
  const Scalar lead_inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * den[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::kValidation, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool poly_is_squarefree(const Poly& f) {
  const std::uint64_t p = f.field().characteristic();
  if (p != 0 && f.degree() >= 0 && static_cast<std::uint64_t>(f.degree()) >= p) {
    throw Error(ErrorCode::kValidation,
                "squarefree test needs characteristic above the degree");
  }
  if (f.is_zero()) return false;
  const Poly g = gcd(f, f.derivative());
  return g.degree() == 0;
}

namespace {

std::vector<Poly> trimmed(std::vector<Poly> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

Poly poly_pow(const Poly& p, int e) {
  Poly out = Poly::constant(p.field().one());
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

}  // namespace

Poly resultant(const std::vector<Poly>& a_in, const std::vector<Poly>& b_in) {
  if (a_in.empty() && b_in.empty()) {
    throw Error(ErrorCode::kValidation, "resultant of two empty coefficient lists");
  }
  const Field field = a_in.empty() ? b_in.front().field() : a_in.front().field();
  const auto a = trimmed(a_in);
  const auto b = trimmed(b_in);
  if (a.empty() || b.empty()) return Poly(field);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0) return poly_pow(a[0], n);
  if (n == 0) return poly_pow(b[0], m);

  // Sylvester matrix: n shifted rows of a, m shifted rows of b, highest
  // outer degree first.
  const int size = m + n;
  std::vector<std::vector<Poly>> mat(static_cast<std::size_t>(size),
                                     std::vector<Poly>(static_cast<std::size_t>(size), Poly(field)));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) mat[r][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(n - k)];
    }
  }

  // Bareiss fraction-free elimination.
  bool negate = false;
  Poly prev = Poly::constant(field.one());
  for (int k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r) {
        if (!mat[r][k].is_zero()) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Poly(field);
      std::swap(mat[k], mat[static_cast<std::size_t>(swap)]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = exact_quotient(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
      }
      mat[i][k] = Poly(field);
    }
    prev = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace symcan
