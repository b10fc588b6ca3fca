#include "treealg/exact/field.hpp"

#include <algorithm>
#include <cctype>

#include "treealg/error.hpp"

namespace treealg::exact {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw_invalid("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string const& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') {
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (t == "q" || t == "rationals" || t == "rational" || t == "0") {
    return rationals();
  }
  if (t.rfind("gf", 0) == 0) {
    t = t.substr(2);
  } else if (t.rfind("f", 0) == 0) {
    t = t.substr(1);
  }
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw_invalid("cannot parse field '" + text + "'");
  }
  unsigned long p = std::stoul(t);
  if (p > 0xFFFFFFFFUL) {
    throw_invalid("field characteristic too large");
  }
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(_char) + ")";
}

namespace {

std::uint32_t reduce_mod(BigInt const& v, std::uint32_t p) {
  BigInt r = v % p;
  if (r < 0) {
    r += p;
  }
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1U) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(FieldSpec field, std::int64_t value) : _field(field) {
  if (field.is_rational()) {
    _value = Rational(BigInt(static_cast<long>(value)));
  } else {
    std::int64_t p = field.characteristic();
    std::int64_t r = value % p;
    _value         = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
}

Scalar::Scalar(FieldSpec field, BigInt const& value) : _field(field) {
  if (field.is_rational()) {
    _value = Rational(value);
  } else {
    _value = reduce_mod(value, field.characteristic());
  }
}

Scalar::Scalar(FieldSpec field, Rational const& value) : _field(field) {
  if (field.is_rational()) {
    Rational r = value;
    r.canonicalize();
    _value = r;
  } else {
    std::uint32_t p   = field.characteristic();
    std::uint32_t den = reduce_mod(value.get_den(), p);
    if (den == 0) {
      throw_invalid("denominator vanishes in " + field.name());
    }
    std::uint64_t num = reduce_mod(value.get_num(), p);
    _value = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
  }
}

bool Scalar::is_zero() const noexcept {
  if (auto const* r = std::get_if<std::uint32_t>(&_value)) {
    return *r == 0;
  }
  return sgn(std::get<Rational>(_value)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto const* r = std::get_if<std::uint32_t>(&_value)) {
    return *r == 1;
  }
  return std::get<Rational>(_value) == 1;
}

std::uint32_t Scalar::residue() const {
  if (auto const* r = std::get_if<std::uint32_t>(&_value)) {
    return *r;
  }
  throw_invalid("residue() on a rational scalar");
}

Rational const& Scalar::rational() const {
  if (auto const* r = std::get_if<Rational>(&_value)) {
    return *r;
  }
  throw_invalid("rational() on a prime-field scalar");
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw_invalid("inverse of zero");
  }
  Scalar out = *this;
  if (_field.is_rational()) {
    out._value = Rational(1) / std::get<Rational>(_value);
  } else {
    out._value = inverse_mod(std::get<std::uint32_t>(_value), _field.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (_field.is_rational()) {
    out._value = Rational(-std::get<Rational>(_value));
  } else {
    std::uint32_t r = std::get<std::uint32_t>(_value);
    out._value      = r == 0 ? 0U : _field.characteristic() - r;
  }
  return out;
}

namespace {

void require_same(Scalar const& a, Scalar const& b) {
  if (!(a.field() == b.field())) {
    throw_invalid("mixing scalars of " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Scalar operator+(Scalar const& a, Scalar const& b) {
  require_same(a, b);
  Scalar out = a;
  if (a._field.is_rational()) {
    out._value = Rational(a.rational() + b.rational());
  } else {
    std::uint64_t p = a._field.characteristic();
    out._value = static_cast<std::uint32_t>((std::uint64_t{a.residue()} + b.residue()) % p);
  }
  return out;
}

Scalar operator-(Scalar const& a, Scalar const& b) { return a + (-b); }

Scalar operator*(Scalar const& a, Scalar const& b) {
  require_same(a, b);
  Scalar out = a;
  if (a._field.is_rational()) {
    out._value = Rational(a.rational() * b.rational());
  } else {
    std::uint64_t p = a._field.characteristic();
    out._value = static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p);
  }
  return out;
}

Scalar operator/(Scalar const& a, Scalar const& b) { return a * b.inverse(); }

bool operator==(Scalar const& a, Scalar const& b) {
  return a._field == b._field && a._value == b._value;
}

std::string Scalar::to_string() const {
  if (_field.is_rational()) {
    return exact::to_string(std::get<Rational>(_value));
  }
  return std::to_string(std::get<std::uint32_t>(_value));
}

}  // namespace treealg::exact
