#include "treealg/permgrp/schreier_sims.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "treealg/error.hpp"

namespace treealg::permgrp {

namespace {

std::uint32_t first_moved(Permutation const& g) {
  for (std::uint32_t v = 0; v < g.degree(); ++v) {
    if (g[v] != v) {
      return v;
    }
  }
  throw_precondition("identity has no moved point");
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> const& generators, std::size_t degree)
    : _degree(degree) {
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw_invalid("generator degree does not match group degree");
    }
    if (!g.is_identity()) {
      _strong.push_back(g);
      extend_base(g);
    }
  }
  for (std::size_t l = 0; l < _levels.size(); ++l) {
    for (std::size_t s = 0; s < _strong.size(); ++s) {
      bool fixes = true;
      for (std::size_t k = 0; k < l && fixes; ++k) {
        fixes = _strong[s][_levels[k].point] == _levels[k].point;
      }
      if (fixes) {
        _levels[l].gens.push_back(s);
      }
    }
    extend_orbit(l);
  }

  // Schreier generators are tested once per (orbit point, generator) pair:
  // orbits and generator lists only grow by appending and existing coset
  // representatives never change, so a pair that sifted once stays valid.
  auto i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
  while (i >= 0) {
    auto const li     = static_cast<std::size_t>(i);
    bool       jumped = false;
    for (std::size_t k = 0; k < _levels[li].orbit.size() && !jumped; ++k) {
      while (_levels[li].checked[k] < _levels[li].gens.size()) {
        auto&      level = _levels[li];
        auto const gi    = level.gens[level.checked[k]++];
        auto const gamma = _strong[gi][level.orbit[k]];
        auto const slot  = static_cast<std::size_t>(level.slot[gamma]);
        Permutation h    = level.reps[k] * _strong[gi] * level.reps_inv[slot];
        if (h.is_identity()) {
          continue;
        }
        auto [residue, j] = sift(std::move(h), li + 1);
        if (j < _levels.size() || !residue.is_identity()) {
          add_strong(std::move(residue), li + 1, j);
          i      = static_cast<std::ptrdiff_t>(j);
          jumped = true;
          break;
        }
      }
    }
    if (!jumped) {
      --i;
    }
  }
}

void PermGroup::extend_base(Permutation const& g) {
  for (auto const& level : _levels) {
    if (g[level.point] != level.point) {
      return;
    }
  }
  Level level;
  level.point = first_moved(g);
  _levels.push_back(std::move(level));
}

void PermGroup::extend_orbit(std::size_t l) {
  auto& level = _levels[l];
  if (level.orbit.empty()) {
    level.slot.assign(_degree, -1);
    level.slot[level.point] = 0;
    level.orbit.push_back(level.point);
    level.reps.emplace_back(_degree);
    level.reps_inv.emplace_back(_degree);
    level.checked.push_back(0);
  }
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (auto gi : level.gens) {
      auto const y = _strong[gi][level.orbit[k]];
      if (level.slot[y] == -1) {
        level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        Permutation rep = level.reps[k] * _strong[gi];
        level.reps_inv.push_back(rep.inverse());
        level.reps.push_back(std::move(rep));
        level.checked.push_back(0);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < _levels.size(); ++l) {
    auto const& level = _levels[l];
    auto const  slot  = level.slot[g[level.point]];
    if (slot == -1) {
      return {std::move(g), l};
    }
    if (slot != 0) {
      g = g * level.reps_inv[static_cast<std::size_t>(slot)];
    }
  }
  return {std::move(g), _levels.size()};
}

void PermGroup::add_strong(Permutation g, std::size_t from, std::size_t upto) {
  if (upto == _levels.size()) {
    Level level;
    level.point = first_moved(g);
    _levels.push_back(std::move(level));
  }
  _strong.push_back(std::move(g));
  auto const idx = _strong.size() - 1;
  for (std::size_t l = from; l <= upto; ++l) {
    _levels[l].gens.push_back(idx);
    extend_orbit(l);
  }
}

exact::BigInt PermGroup::order() const {
  exact::BigInt n = 1;
  for (auto const& level : _levels) {
    n *= static_cast<unsigned long>(level.orbit.size());
  }
  return n;
}

bool PermGroup::contains(Permutation const& g) const {
  if (g.degree() != _degree) {
    return false;
  }
  auto [residue, j] = sift(g, 0);
  return j == _levels.size() && residue.is_identity();
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> out;
  for (auto const& level : _levels) {
    out.push_back(level.point);
  }
  return out;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (auto const& level : _levels) {
    out.push_back(level.orbit.size());
  }
  return out;
}

std::optional<std::uint64_t> exhaustive_order(std::vector<Permutation> const& generators,
                                              std::size_t degree, std::uint64_t limit) {
  std::set<Permutation>   seen{Permutation(degree)};
  std::deque<Permutation> queue{Permutation(degree)};
  while (!queue.empty()) {
    auto g = std::move(queue.front());
    queue.pop_front();
    for (auto const& s : generators) {
      auto h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > limit) {
          return std::nullopt;
        }
        queue.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

}  // namespace treealg::permgrp
