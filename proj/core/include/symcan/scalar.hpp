#pragma once

// Exact scalars over Q or a prime field F_p.
//
// Rationals are kept reduced with a positive denominator (boost's
// cpp_rational normalizes on every operation). Residues are stored in
// [0, p) with p an odd prime below 2^31, so a product of two residues fits
// in 64 bits.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Scalar;

class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws kValidation unless p is an odd prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_bigint(const BigInt& n) const;
  Scalar from_rational(const Rational& q) const;
  /// Accepts "n" or "n/m" with optional sign. Over F_p the value is reduced
  /// and the denominator inverted.
  Scalar parse(std::string_view text) const;

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only valid on Q scalars.
  const Rational& rational() const;
  /// Only valid on F_p scalars.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact equality; scalars over different fields compare unequal.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical total order used for sorting (numeric order on Q, residue
  /// order on F_p). Throws kFieldMismatch across fields.
  friend std::strong_ordering canonical_compare(const Scalar& lhs,
                                                const Scalar& rhs);

  /// Decimal string: "-3/4", "7". Round-trips through Field::parse.
  std::string to_string() const;

 private:
  friend class Field;
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void require_same_field(const Scalar& rhs) const;

  std::variant<Rational, Residue> value_;
};

/// A square root if one exists in the base field. Over F_p the smaller of the
/// two residues is returned; over Q the nonnegative root.
std::optional<Scalar> sqrt(const Scalar& s);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace symcan
