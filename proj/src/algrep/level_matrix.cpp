#include "treealg/algrep/level_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "treealg/error.hpp"
#include "treealg/linalg/gf2_basis.hpp"
#include "treealg/permgrp/levels.hpp"

namespace treealg::algrep {

using exact::FieldSpec;
using exact::Rational;
using exact::Scalar;
using linalg::get_bit;
using linalg::set_bit;
using linalg::Word;
using linalg::words_for;

namespace {

std::uint32_t byte_prime(FieldSpec field) {
  auto const p = field.characteristic();
  if (p >= 256) {
    throw_invalid("dense matrices over GF(p) need p < 256, got " + field.name());
  }
  return p;
}

std::uint8_t to_byte(Scalar const& s, std::uint32_t) { return static_cast<std::uint8_t>(s.residue()); }

}  // namespace

LevelMatrix::LevelMatrix(FieldSpec field, std::uint32_t q, std::size_t level)
    : _field(field), _q(q), _level(level) {
  auto const n = permgrp::degree_at_level(q, level);
  if (n > (std::uint64_t{1} << 20)) {
    throw_resource("level " + std::to_string(level) + " matrices are too large");
  }
  _n                  = static_cast<std::size_t>(n);
  std::size_t const e = _n * _n;
  if (field.is_gf2()) {
    if (e / 8 > max_bytes) {
      throw_resource("matrix needs more than 1 GiB");
    }
    _data = Bits(words_for(e), 0);
  } else if (!field.is_rational()) {
    byte_prime(field);
    if (e > max_bytes) {
      throw_resource("matrix needs more than 1 GiB");
    }
    _data = Bytes(e, 0);
  } else {
    if (e * sizeof(Rational) > max_bytes) {
      throw_resource("matrix needs more than 1 GiB");
    }
    _data = std::vector<Rational>(e);
  }
}

LevelMatrix LevelMatrix::identity(FieldSpec field, std::uint32_t q, std::size_t level) {
  LevelMatrix m(field, q, level);
  m.add_permutation(Scalar::one(field), permgrp::Permutation(m._n));
  return m;
}

LevelMatrix LevelMatrix::permutation(FieldSpec field, std::uint32_t q, std::size_t level,
                                     permgrp::Permutation const& p) {
  LevelMatrix m(field, q, level);
  m.add_permutation(Scalar::one(field), p);
  return m;
}

LevelMatrix LevelMatrix::from_bits(std::uint32_t q, std::size_t level, Bits bits) {
  LevelMatrix m(FieldSpec::prime(2), q, level);
  if (bits.size() != m.bits().size()) {
    throw_invalid("bit vector length does not match the level");
  }
  m._data = std::move(bits);
  return m;
}

LevelMatrix LevelMatrix::from_bytes(FieldSpec field, std::uint32_t q, std::size_t level,
                                    Bytes bytes) {
  LevelMatrix m(field, q, level);
  if (bytes.size() != m.bytes().size()) {
    throw_invalid("byte vector length does not match the level");
  }
  m._data = std::move(bytes);
  return m;
}

LevelMatrix LevelMatrix::from_rationals(std::uint32_t q, std::size_t level,
                                        std::vector<Rational> entries) {
  LevelMatrix m(FieldSpec::rationals(), q, level);
  if (entries.size() != m.rationals().size()) {
    throw_invalid("entry count does not match the level");
  }
  m._data = std::move(entries);
  return m;
}

Scalar LevelMatrix::at(std::size_t i, std::size_t j) const {
  std::size_t const t = i * _n + j;
  if (_field.is_gf2()) {
    return Scalar(_field, static_cast<std::int64_t>(get_bit(bits().data(), t)));
  }
  if (_field.is_rational()) {
    return Scalar(_field, rationals()[t]);
  }
  return Scalar(_field, static_cast<std::int64_t>(bytes()[t]));
}

void LevelMatrix::set(std::size_t i, std::size_t j, Scalar const& value) {
  if (value.field() != _field) {
    throw_invalid("scalar field does not match the matrix");
  }
  std::size_t const t = i * _n + j;
  if (_field.is_gf2()) {
    auto& b = std::get<Bits>(_data);
    if (get_bit(b.data(), t) != value.is_one()) {
      linalg::flip_bit(b.data(), t);
    }
  } else if (_field.is_rational()) {
    std::get<std::vector<Rational>>(_data)[t] = value.rational();
  } else {
    std::get<Bytes>(_data)[t] = to_byte(value, _field.characteristic());
  }
}

bool LevelMatrix::is_zero() const {
  return std::visit(
      [](auto const& d) {
        return std::all_of(d.begin(), d.end(), [](auto const& x) { return x == 0; });
      },
      _data);
}

void LevelMatrix::add_permutation(Scalar const& c, permgrp::Permutation const& p) {
  if (p.degree() != _n) {
    throw_invalid("permutation degree does not match the level");
  }
  if (c.field() != _field) {
    throw_invalid("scalar field does not match the matrix");
  }
  if (c.is_zero()) {
    return;
  }
  if (_field.is_gf2()) {
    auto& b = std::get<Bits>(_data);
    for (std::size_t v = 0; v < _n; ++v) {
      linalg::flip_bit(b.data(), v * _n + p[v]);
    }
  } else if (_field.is_rational()) {
    auto& d = std::get<std::vector<Rational>>(_data);
    for (std::size_t v = 0; v < _n; ++v) {
      d[v * _n + p[v]] += c.rational();
    }
  } else {
    auto&         d  = std::get<Bytes>(_data);
    auto const    pr = _field.characteristic();
    auto const    r  = c.residue();
    for (std::size_t v = 0; v < _n; ++v) {
      auto& x = d[v * _n + p[v]];
      x       = static_cast<std::uint8_t>((x + r) % pr);
    }
  }
}

LevelMatrix LevelMatrix::left_permuted(permgrp::Permutation const& g) const {
  if (g.degree() != _n) {
    throw_invalid("permutation degree does not match the level");
  }
  LevelMatrix out(_field, _q, _level);
  if (_field.is_gf2()) {
    auto const& src = bits();
    auto&       dst = std::get<Bits>(out._data);
    if (_n % 64 == 0) {
      std::size_t const w = _n / 64;
      for (std::size_t i = 0; i < _n; ++i) {
        std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(g[i] * w), w,
                    dst.begin() + static_cast<std::ptrdiff_t>(i * w));
      }
    } else {
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          if (get_bit(src.data(), g[i] * _n + j)) {
            set_bit(dst.data(), i * _n + j);
          }
        }
      }
    }
    return out;
  }
  std::visit(
      [&](auto const& src) {
        using V   = std::decay_t<decltype(src)>;
        auto& dst = std::get<V>(out._data);
        for (std::size_t i = 0; i < _n; ++i) {
          std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(g[i] * _n), _n,
                      dst.begin() + static_cast<std::ptrdiff_t>(i * _n));
        }
      },
      _data);
  return out;
}

LevelMatrix LevelMatrix::right_permuted(permgrp::Permutation const& g) const {
  if (g.degree() != _n) {
    throw_invalid("permutation degree does not match the level");
  }
  LevelMatrix out(_field, _q, _level);
  if (_field.is_gf2()) {
    auto const& src = bits();
    auto&       dst = std::get<Bits>(out._data);
    for (std::size_t k = 0; k < src.size(); ++k) {
      Word w = src[k];
      while (w != 0) {
        std::size_t const t = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        set_bit(dst.data(), (t / _n) * _n + g[t % _n]);
      }
    }
    return out;
  }
  std::visit(
      [&](auto const& src) {
        using V   = std::decay_t<decltype(src)>;
        auto& dst = std::get<V>(out._data);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t k = 0; k < _n; ++k) {
            dst[i * _n + g[k]] = src[i * _n + k];
          }
        }
      },
      _data);
  return out;
}

void LevelMatrix::check_compatible(LevelMatrix const& other) const {
  if (other._field != _field || other._q != _q || other._level != _level) {
    throw_invalid("matrices live at different levels or over different fields");
  }
}

LevelMatrix& LevelMatrix::operator+=(LevelMatrix const& other) {
  check_compatible(other);
  if (_field.is_gf2()) {
    linalg::xor_into(std::get<Bits>(_data).data(), other.bits().data(), bits().size());
  } else if (_field.is_rational()) {
    auto& d = std::get<std::vector<Rational>>(_data);
    for (std::size_t t = 0; t < d.size(); ++t) {
      d[t] += other.rationals()[t];
    }
  } else {
    auto&      d = std::get<Bytes>(_data);
    auto const p = _field.characteristic();
    for (std::size_t t = 0; t < d.size(); ++t) {
      auto const s = static_cast<std::uint32_t>(d[t]) + other.bytes()[t];
      d[t]         = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
  }
  return *this;
}

LevelMatrix& LevelMatrix::operator-=(LevelMatrix const& other) {
  return *this += other.scaled(-Scalar::one(_field));
}

LevelMatrix LevelMatrix::scaled(Scalar const& c) const {
  if (c.field() != _field) {
    throw_invalid("scalar field does not match the matrix");
  }
  if (c.is_zero()) {
    return LevelMatrix(_field, _q, _level);
  }
  LevelMatrix out = *this;
  if (_field.is_gf2() || c.is_one()) {
    return out;
  }
  if (_field.is_rational()) {
    for (auto& x : std::get<std::vector<Rational>>(out._data)) {
      x *= c.rational();
    }
  } else {
    auto const p = _field.characteristic();
    for (auto& x : std::get<Bytes>(out._data)) {
      x = static_cast<std::uint8_t>(x * c.residue() % p);
    }
  }
  return out;
}

bool operator==(LevelMatrix const& a, LevelMatrix const& b) {
  return a._field == b._field && a._q == b._q && a._level == b._level && a._data == b._data;
}

LevelMatrix LevelMatrix::multiply(LevelMatrix const& other, Exec exec) const {
  check_compatible(other);
  if (_field.is_gf2()) {
    return from_bits(_q, _level, linalg::gf2_matmul(bits(), other.bits(), _n, exec));
  }
  if (!_field.is_rational()) {
    return from_bytes(_field, _q, _level,
                      linalg::gfp_matmul(bytes(), other.bytes(), _n, _field.characteristic(), exec));
  }
  LevelMatrix out(_field, _q, _level);
  auto&       c = std::get<std::vector<Rational>>(out._data);
  auto const& a = rationals();
  auto const& b = other.rationals();
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t k = 0; k < _n; ++k) {
      if (a[i * _n + k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _n; ++j) {
        if (b[k * _n + j] != 0) {
          c[i * _n + j] += a[i * _n + k] * b[k * _n + j];
        }
      }
    }
  }
  return out;
}

LevelMatrix LevelMatrix::power(std::uint64_t k, Exec exec) const {
  LevelMatrix result = identity(_field, _q, _level);
  LevelMatrix base   = *this;
  bool        first  = true;
  while (k > 0) {
    if (k & 1U) {
      result = first ? base : result.multiply(base, exec);
      first  = false;
    }
    k >>= 1U;
    if (k > 0) {
      base = base.multiply(base, exec);
    }
  }
  return result;
}

LevelMatrix LevelMatrix::block(std::uint32_t u, std::uint32_t v) const {
  if (_level == 0 || u >= _q || v >= _q) {
    throw_invalid("block index out of range");
  }
  std::size_t const m = _n / _q;
  LevelMatrix       out(_field, _q, _level - 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const s = (u * m + i) * _n + v * m + j;
      auto const t = i * m + j;
      if (_field.is_gf2()) {
        if (get_bit(bits().data(), s)) {
          set_bit(std::get<Bits>(out._data).data(), t);
        }
      } else if (_field.is_rational()) {
        std::get<std::vector<Rational>>(out._data)[t] = rationals()[s];
      } else {
        std::get<Bytes>(out._data)[t] = bytes()[s];
      }
    }
  }
  return out;
}

LevelMatrix LevelMatrix::unit_block(std::uint32_t u, std::uint32_t v, LevelMatrix const& kappa) {
  if (u >= kappa._q || v >= kappa._q) {
    throw_invalid("block index out of range");
  }
  LevelMatrix       out(kappa._field, kappa._q, kappa._level + 1);
  std::size_t const m = kappa._n;
  std::size_t const n = out._n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const s = i * m + j;
      auto const t = (u * m + i) * n + v * m + j;
      if (kappa._field.is_gf2()) {
        if (get_bit(kappa.bits().data(), s)) {
          set_bit(std::get<Bits>(out._data).data(), t);
        }
      } else if (kappa._field.is_rational()) {
        std::get<std::vector<Rational>>(out._data)[t] = kappa.rationals()[s];
      } else {
        std::get<Bytes>(out._data)[t] = kappa.bytes()[s];
      }
    }
  }
  return out;
}

std::string LevelMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      out << (j == 0 ? "" : " ") << at(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace treealg::algrep
