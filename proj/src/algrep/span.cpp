#include "treealg/algrep/span.hpp"

#include "treealg/error.hpp"
#include "treealg/permgrp/levels.hpp"

namespace treealg::algrep {

using exact::BigInt;
using exact::FieldSpec;
using exact::Rational;

namespace {

std::size_t vector_length(std::uint32_t q, std::size_t level) {
  auto const n = permgrp::degree_at_level(q, level);
  return static_cast<std::size_t>(n * n);
}

std::variant<linalg::Gf2Basis, linalg::GfpBasis, linalg::QBasis> make_basis(FieldSpec field,
                                                                             std::size_t len) {
  if (field.is_gf2()) {
    return linalg::Gf2Basis(len);
  }
  if (field.is_rational()) {
    return linalg::QBasis(len);
  }
  return linalg::GfpBasis(field.characteristic(), len);
}

// Clears denominators; the span only depends on the direction.
linalg::IntVec integral(std::vector<Rational> const& entries) {
  BigInt den = 1;
  for (auto const& x : entries) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  linalg::IntVec out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out[i] = entries[i].get_num() * (den / entries[i].get_den());
  }
  return out;
}

}  // namespace

SpanBasis::SpanBasis(FieldSpec field, std::uint32_t q, std::size_t level, Exec exec)
    : _field(field), _q(q), _level(level), _exec(exec),
      _basis(make_basis(field, vector_length(q, level))) {
  LevelMatrix probe(field, q, level);  // validates field and size limits
}

std::size_t SpanBasis::dim() const {
  return std::visit([](auto const& b) { return b.dim(); }, _basis);
}

std::vector<LevelMatrix> SpanBasis::insert(std::vector<LevelMatrix> const& batch) {
  for (auto const& m : batch) {
    if (m.field() != _field || m.q() != _q || m.level() != _level) {
      throw_invalid("matrix does not belong to this span");
    }
  }
  std::vector<LevelMatrix> out;
  if (auto* b = std::get_if<linalg::Gf2Basis>(&_basis)) {
    std::vector<Bits> vs;
    vs.reserve(batch.size());
    for (auto const& m : batch) {
      vs.push_back(m.bits());
    }
    for (auto& v : b->insert(std::move(vs), _exec)) {
      out.push_back(LevelMatrix::from_bits(_q, _level, std::move(v)));
    }
  } else if (auto* g = std::get_if<linalg::GfpBasis>(&_basis)) {
    std::vector<Bytes> vs;
    vs.reserve(batch.size());
    for (auto const& m : batch) {
      vs.push_back(m.bytes());
    }
    for (auto& v : g->insert(std::move(vs), _exec)) {
      out.push_back(LevelMatrix::from_bytes(_field, _q, _level, std::move(v)));
    }
  } else {
    auto&                       qb = std::get<linalg::QBasis>(_basis);
    std::vector<linalg::IntVec> vs;
    for (auto const& m : batch) {
      vs.push_back(integral(m.rationals()));
    }
    for (auto& v : qb.insert(std::move(vs), _exec)) {
      out.push_back(LevelMatrix::from_rationals(_q, _level, std::vector<Rational>(v.begin(), v.end())));
    }
  }
  return out;
}

bool SpanBasis::insert(LevelMatrix const& m) { return !insert(std::vector<LevelMatrix>{m}).empty(); }

bool SpanBasis::contains(LevelMatrix const& m) const {
  if (m.field() != _field || m.q() != _q || m.level() != _level) {
    throw_invalid("matrix does not belong to this span");
  }
  if (auto const* b = std::get_if<linalg::Gf2Basis>(&_basis)) {
    return b->contains(m.bits().data());
  }
  if (auto const* g = std::get_if<linalg::GfpBasis>(&_basis)) {
    return g->contains(m.bytes());
  }
  return std::get<linalg::QBasis>(_basis).contains(integral(m.rationals()));
}

LevelMatrix SpanBasis::row(std::size_t i) const {
  if (auto const* b = std::get_if<linalg::Gf2Basis>(&_basis)) {
    return LevelMatrix::from_bits(_q, _level, Bits(b->row(i), b->row(i) + b->words()));
  }
  if (auto const* g = std::get_if<linalg::GfpBasis>(&_basis)) {
    return LevelMatrix::from_bytes(_field, _q, _level, g->row(i));
  }
  auto const v = std::get<linalg::QBasis>(_basis).row(i);
  return LevelMatrix::from_rationals(_q, _level, std::vector<Rational>(v.begin(), v.end()));
}

std::vector<LevelMatrix> SpanBasis::rows() const {
  std::vector<LevelMatrix> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    out.push_back(row(i));
  }
  return out;
}

}  // namespace treealg::algrep
