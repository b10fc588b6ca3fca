#include "treealg/permgrp/levels.hpp"

#include <algorithm>

#include "treealg/error.hpp"

namespace treealg::permgrp {

using selfsim::GroupWord;
using selfsim::WreathRecursion;

LevelTower::LevelTower(WreathRecursion const& rec) : _rec(rec) {
  std::vector<Permutation> level0(rec.rank(), Permutation(1));
  _gens.push_back(level0);
  _inv.push_back(std::move(level0));
}

std::vector<Permutation> const& LevelTower::generators(std::size_t n) {
  while (_gens.size() <= n) {
    std::size_t const m   = _gens.size();
    auto const        low = degree_at_level(_rec.q(), m - 1);
    auto const        deg = degree_at_level(_rec.q(), m);
    std::vector<Permutation> next;
    next.reserve(_rec.rank());
    for (std::uint32_t g = 0; g < _rec.rank(); ++g) {
      auto const&                gen = _rec.generator(g);
      std::vector<std::uint32_t> img(deg);
      for (std::uint32_t x = 0; x < _rec.q(); ++x) {
        Permutation const sec = word(gen.sections[x], m - 1);
        auto const        y   = gen.perm[x];
        for (std::uint64_t w = 0; w < low; ++w) {
          img[x * low + w] = static_cast<std::uint32_t>(y * low + sec[w]);
        }
      }
      next.emplace_back(std::move(img));
    }
    std::vector<Permutation> inv;
    inv.reserve(next.size());
    for (auto const& p : next) {
      inv.push_back(p.inverse());
    }
    _gens.push_back(std::move(next));
    _inv.push_back(std::move(inv));
  }
  return _gens[n];
}

std::vector<Permutation> const& LevelTower::inverse_generators(std::size_t n) {
  generators(n);
  return _inv[n];
}

Permutation LevelTower::word(GroupWord const& w, std::size_t n) {
  generators(n);
  auto const& gens = _gens[n];
  auto const& inv  = _inv[n];
  auto const  deg  = gens.empty() ? degree_at_level(_rec.q(), n) : gens[0].degree();
  Permutation out(deg);
  for (auto s : w.symbols()) {
    out = out * (s.inverse ? inv[s.gen] : gens[s.gen]);
  }
  return out;
}

std::uint64_t degree_at_level(std::uint32_t q, std::size_t n) {
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d > (std::uint64_t{1} << 32) / q) {
      throw_resource("level " + std::to_string(n) + " has more than 2^32 vertices");
    }
    d *= q;
  }
  return d;
}

Permutation level_permutation(WreathRecursion const& rec, GroupWord const& w, std::size_t n) {
  LevelTower tower(rec);
  return tower.word(rec.reduce(w), n);
}

namespace {

void check_cap(std::uint32_t q, std::size_t n, std::uint64_t cap) {
  auto const deg = degree_at_level(q, n);
  if (deg > cap) {
    throw_resource("degree " + std::to_string(deg) + " at level " + std::to_string(n) +
                   " exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace

exact::BigInt group_order_at_level(WreathRecursion const& rec, std::size_t n,
                                   std::uint64_t degree_cap) {
  if (n < 1) {
    throw_invalid("group order needs level >= 1");
  }
  check_cap(rec.q(), n, degree_cap);
  LevelTower tower(rec);
  PermGroup  group(tower.generators(n), degree_at_level(rec.q(), n));
  return group.order();
}

exact::BigInt element_order_at_level(WreathRecursion const& rec, GroupWord const& w,
                                     std::size_t n) {
  return level_permutation(rec, w, n).order();
}

bool is_level_transitive(WreathRecursion const& rec, std::size_t n) {
  LevelTower  tower(rec);
  auto const& gens = tower.generators(n);
  auto const  deg  = degree_at_level(rec.q(), n);
  std::vector<bool>          seen(deg, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const& g : gens) {
      auto const y = g[queue[k]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == deg;
}

std::vector<exact::Rational> group_hausdorff_sequence(WreathRecursion const& rec,
                                                      std::uint32_t p, std::size_t n_max,
                                                      std::uint64_t degree_cap) {
  if (!exact::is_prime(p)) {
    throw_invalid(std::to_string(p) + " is not prime");
  }
  if (rec.q() != p) {
    throw_invalid("relative dimension needs alphabet size equal to p");
  }
  check_cap(rec.q(), n_max, degree_cap);
  LevelTower                   tower(rec);
  std::vector<exact::Rational> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    PermGroup  group(tower.generators(n), degree_at_level(p, n));
    auto const order = group.order();
    auto const k     = exact::exact_log(order, p);
    if (!k) {
      throw_invalid("order " + order.get_str() + " at level " + std::to_string(n) +
                    " is not a power of " + std::to_string(p));
    }
    exact::BigInt const num = exact::BigInt(static_cast<unsigned long>(*k)) * (p - 1);
    exact::BigInt const den = exact::pow(std::uint64_t{p}, n) - 1;
    out.push_back(exact::make_rational(num, den));
  }
  return out;
}

}  // namespace treealg::permgrp
