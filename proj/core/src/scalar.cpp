#include "symcan/scalar.hpp"

#include <cctype>

#include "symcan/error.hpp"

namespace symcan {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const BigInt& n, std::uint64_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::kParse, "empty integer in '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
      throw Error(ErrorCode::kParse, "not a decimal integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p <= 2 || p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
    throw Error(ErrorCode::kValidation,
                "field characteristic must be an odd prime below 2^31, got " +
                    std::to_string(p));
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_rational()) return Scalar(Rational(n));
  auto r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Scalar(Scalar::Residue{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_bigint(const BigInt& n) const {
  if (is_rational()) return Scalar(Rational(n));
  return Scalar(Scalar::Residue{reduce(n, p_), p_});
}

Scalar Field::from_rational(const Rational& q) const {
  if (is_rational()) return Scalar(q);
  return from_bigint(boost::multiprecision::numerator(q)) /
         from_bigint(boost::multiprecision::denominator(q));
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_bigint(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  return from_bigint(num) / from_bigint(den);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Field Scalar::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorCode::kFieldMismatch, "scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorCode::kFieldMismatch, "scalar is not a residue");
}

void Scalar::require_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw Error(ErrorCode::kFieldMismatch,
                "scalars over " + field().name() + " and " + rhs.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  }
  return Scalar(Rational(1) / std::get<Rational>(value_));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->p;
  } else {
    std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + r->p - std::get<Residue>(rhs.value_).value) % r->p;
  } else {
    std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->p);
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  const auto* a = std::get_if<Scalar::Residue>(&lhs.value_);
  const auto* b = std::get_if<Scalar::Residue>(&rhs.value_);
  if (a != nullptr && b != nullptr) return a->p == b->p && a->value == b->value;
  if (a != nullptr || b != nullptr) return false;
  return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
}

std::strong_ordering canonical_compare(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  if (const auto* a = std::get_if<Scalar::Residue>(&lhs.value_)) {
    return a->value <=> std::get<Scalar::Residue>(rhs.value_).value;
  }
  const auto& a = std::get<Rational>(lhs.value_);
  const auto& b = std::get<Rational>(rhs.value_);
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  const auto& q = std::get<Rational>(value_);
  std::string out = boost::multiprecision::numerator(q).str();
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den != 1) out += "/" + den.str();
  return out;
}

std::optional<Scalar> sqrt(const Scalar& s) {
  const Field field = s.field();
  if (s.is_zero()) return s;
  if (field.is_rational()) {
    const auto& q = s.rational();
    if (q < 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return field.from_rational(Rational(rn, rd));
  }
  // Tonelli-Shanks.
  const std::uint64_t p = field.characteristic();
  const std::uint64_t a = s.residue();
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  std::uint64_t e = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++e;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = e;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return field.from_int(static_cast<std::int64_t>(std::min(r, p - r)));
}

}  // namespace symcan
