#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "treealg/algrep/level_matrix.hpp"
#include "treealg/linalg/gf2_basis.hpp"
#include "treealg/linalg/gfp_basis.hpp"
#include "treealg/linalg/q_basis.hpp"

namespace treealg::algrep {

// Echelon basis of a subspace of level-n matrices, each matrix read as a
// vector of length q^{2n}.
class SpanBasis {
 public:
  SpanBasis(exact::FieldSpec field, std::uint32_t q, std::size_t level, Exec exec = Exec::parallel);

  exact::FieldSpec field() const noexcept { return _field; }
  std::uint32_t    q() const noexcept { return _q; }
  std::size_t      level() const noexcept { return _level; }
  std::size_t      dim() const;
  Exec             exec() const noexcept { return _exec; }

  // Inserts in order; returns the residues that enlarged the span.
  std::vector<LevelMatrix> insert(std::vector<LevelMatrix> const& batch);
  bool                     insert(LevelMatrix const& m);
  bool                     contains(LevelMatrix const& m) const;
  LevelMatrix              row(std::size_t i) const;
  std::vector<LevelMatrix> rows() const;

 private:
  exact::FieldSpec                                                 _field;
  std::uint32_t                                                    _q;
  std::size_t                                                      _level;
  Exec                                                             _exec;
  std::variant<linalg::Gf2Basis, linalg::GfpBasis, linalg::QBasis> _basis;
};

}  // namespace treealg::algrep
