#pragma once

#include <algorithm>
#include <utility>
#include <cstddef>
#include <vector>

#include "treealg/linalg/bits.hpp"

namespace treealg::linalg::detail {

// Reduced row echelon basis over a ring of coefficients described by `Ops`:
//   Ops::T                         coefficient type
//   ops.eliminate(v, row, p, keep) clear v[p] using row (row[p] != 0); `keep`
//                                  asks for the canonical scaling of a stored row
//   ops.normalize(v, p)            bring a new row into canonical form
template <class Ops>
class DenseBasis {
 public:
  using T   = typename Ops::T;
  using Vec = std::vector<T>;

  DenseBasis(Ops ops, std::size_t length) : _ops(std::move(ops)), _length(length) {}

  std::size_t                     length() const noexcept { return _length; }
  std::size_t                     dim() const noexcept { return _rows.size(); }
  Vec const&                      row(std::size_t i) const { return _rows[i]; }
  std::vector<std::size_t> const& pivots() const noexcept { return _pivots; }
  Ops const&                      ops() const noexcept { return _ops; }

  void reduce(Vec& v) const {
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (v[_pivots[i]] != T(0)) {
        _ops.eliminate(v, _rows[i], _pivots[i], false);
      }
    }
  }

  std::vector<Vec> insert(std::vector<Vec> batch, Exec exec) {
    std::vector<Vec> added;
    if (exec == Exec::parallel) {
      std::size_t const count = batch.size();
#pragma omp parallel for schedule(dynamic, 4)
      for (std::size_t t = 0; t < count; ++t) {
        reduce(batch[t]);
      }
    }
    std::size_t const frozen = _rows.size();
    for (auto& v : batch) {
      if (exec == Exec::parallel) {
        for (std::size_t i = frozen; i < _rows.size(); ++i) {
          if (v[_pivots[i]] != T(0)) {
            _ops.eliminate(v, _rows[i], _pivots[i], false);
          }
        }
      } else {
        reduce(v);
      }
      auto const it = std::find_if(v.begin(), v.end(), [](T const& x) { return x != T(0); });
      if (it == v.end()) {
        continue;
      }
      auto const p = static_cast<std::size_t>(it - v.begin());
      _ops.normalize(v, p);
      for (auto& r : _rows) {
        if (r[p] != T(0)) {
          _ops.eliminate(r, v, p, true);
        }
      }
      added.push_back(v);
      _rows.push_back(std::move(v));
      _pivots.push_back(p);
    }
    return added;
  }

 private:
  Ops                      _ops;
  std::size_t              _length;
  std::vector<Vec>         _rows;
  std::vector<std::size_t> _pivots;
};

}  // namespace treealg::linalg::detail
