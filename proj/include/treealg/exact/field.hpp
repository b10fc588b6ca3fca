#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "treealg/exact/bigint.hpp"

namespace treealg::exact {

// Ground field: characteristic 0 means the rationals, otherwise GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);  // throws unless p is prime

  // Accepts "q", "Q", "rationals", "gf2", "GF(3)", "3", ...
  static FieldSpec parse(std::string const& text);

  std::uint32_t characteristic() const noexcept { return _char; }
  bool is_rational() const noexcept { return _char == 0; }
  bool is_gf2() const noexcept { return _char == 2; }

  std::string name() const;  // "Q" or "GF(p)"

  friend bool operator==(FieldSpec const&, FieldSpec const&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : _char(p) {}
  std::uint32_t _char = 0;
};

// An element of a FieldSpec in canonical form: a residue in [0, p) or a
// reduced fraction with positive denominator.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(FieldSpec field, std::int64_t value);
  Scalar(FieldSpec field, BigInt const& value);
  Scalar(FieldSpec field, Rational const& value);  // throws if den ≡ 0 mod p

  static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }

  FieldSpec field() const noexcept { return _field; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Valid only for prime fields.
  std::uint32_t residue() const;
  // Valid only for the rationals.
  Rational const& rational() const;

  Scalar inverse() const;  // throws on zero
  Scalar operator-() const;

  friend Scalar operator+(Scalar const& a, Scalar const& b);
  friend Scalar operator-(Scalar const& a, Scalar const& b);
  friend Scalar operator*(Scalar const& a, Scalar const& b);
  friend Scalar operator/(Scalar const& a, Scalar const& b);
  Scalar& operator+=(Scalar const& b) { return *this = *this + b; }
  Scalar& operator-=(Scalar const& b) { return *this = *this - b; }
  Scalar& operator*=(Scalar const& b) { return *this = *this * b; }

  friend bool operator==(Scalar const& a, Scalar const& b);

  std::string to_string() const;

 private:
  FieldSpec                             _field;
  std::variant<std::uint32_t, Rational> _value = Rational(0);
};

}  // namespace treealg::exact
