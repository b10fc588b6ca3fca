#include "treealg/selfsim/contraction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "treealg/error.hpp"

namespace treealg::selfsim {

bool is_trivial(WreathRecursion const& rec, GroupWord const& w, std::size_t max_states) {
  std::set<GroupWord>   seen;
  std::deque<GroupWord> queue;
  auto                  start = rec.reduce(w);
  seen.insert(start);
  queue.push_back(start);
  LetterPerm id(rec.q());
  std::iota(id.begin(), id.end(), 0U);
  while (!queue.empty()) {
    GroupWord cur = std::move(queue.front());
    queue.pop_front();
    if (cur.empty()) {
      continue;
    }
    if (rec.root_permutation(cur) != id) {
      return false;
    }
    for (std::uint32_t x = 0; x < rec.q(); ++x) {
      auto s = rec.section_at(cur, x);
      if (seen.insert(s).second) {
        if (seen.size() > max_states) {
          throw_resource("triviality test exceeded " + std::to_string(max_states) +
                         " section states");
        }
        queue.push_back(std::move(s));
      }
    }
  }
  return true;
}

namespace {

struct Rewriter {
  WreathRecursion const&                              rec;
  std::map<std::pair<Symbol, Symbol>, std::vector<Symbol>> table;

  GroupWord apply(GroupWord w) const {
    for (;;) {
      w            = rec.reduce(w);
      bool changed = false;
      auto s       = w.symbols();
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        auto it = table.find({s[i], s[i + 1]});
        if (it != table.end()) {
          std::vector<Symbol> next(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
          next.insert(next.end(), it->second.begin(), it->second.end());
          next.insert(next.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 2), s.end());
          w       = GroupWord(std::move(next));
          changed = true;
          break;
        }
      }
      if (!changed) {
        return w;
      }
    }
  }
};

std::vector<Symbol> symbol_alphabet(WreathRecursion const& rec) {
  std::vector<Symbol> out;
  for (std::uint32_t g = 0; g < rec.rank(); ++g) {
    out.push_back({g, false});
    if (!rec.generator(g).involutive) {
      out.push_back({g, true});
    }
  }
  return out;
}

}  // namespace

ContractionReport contraction_certificate(WreathRecursion const&   rec,
                                          ContractionParams const& params,
                                          std::size_t              max_len) {
  if (max_len < 1) {
    throw_invalid("max_len must be at least 1");
  }
  if (params.depth < 1) {
    throw_invalid("contraction depth must be at least 1");
  }
  if (sgn(params.lambda) <= 0 || params.lambda >= 1) {
    throw_invalid("lambda must lie strictly between 0 and 1");
  }
  ContractionReport report;
  auto const        symbols = symbol_alphabet(rec);
  Rewriter          rw{rec, {}};
  for (Symbol s : symbols) {
    for (Symbol t : symbols) {
      GroupWord st({s, t});
      if (rec.reduce(st).length() < 2) {
        continue;
      }
      std::optional<std::vector<Symbol>> shorter;
      if (is_trivial(rec, st)) {
        shorter = std::vector<Symbol>{};
      } else {
        for (Symbol u : symbols) {
          auto probe = rec.multiply(st, rec.inverse(GroupWord({u})));
          if (is_trivial(rec, probe)) {
            shorter = std::vector<Symbol>{u};
            break;
          }
        }
      }
      if (shorter) {
        rw.table[{s, t}] = *shorter;
        report.shortening_pairs.push_back(rec.format(st) + "=" +
                                          rec.format(GroupWord(*shorter)));
      }
    }
  }

  exact::BigInt const num = params.lambda.get_num();
  exact::BigInt const den = params.lambda.get_den();

  std::uint64_t vertex_count = 1;
  for (std::size_t i = 0; i < params.depth; ++i) {
    vertex_count *= rec.q();
  }
  std::vector<Vertex> vertices;
  for (std::uint64_t i = 0; i < vertex_count; ++i) {
    vertices.push_back(vertex_from_index(i, params.depth, rec.q()));
  }

  exact::BigInt       worst_excess;
  bool                have_worst = false;
  std::vector<Symbol> stack;

  auto check = [&](GroupWord const& w) {
    ++report.words_checked;
    for (auto const& v : vertices) {
      GroupWord sec = rw.apply(section(rec, w, v));
      // excess = den*|sec| - num*|w| - den*K, violation when > 0
      exact::BigInt excess = den * sec.length() - num * w.length() - den * params.K;
      if (!have_worst || excess > worst_excess) {
        report.worst = ContractionWitness{w, v, sec, w.length(), sec.length()};
        worst_excess = excess;
        have_worst   = true;
      }
      if (excess > 0) {
        report.pass = false;
      }
    }
  };

  auto extend = [&](auto&& self) -> void {
    check(GroupWord(stack));
    if (stack.size() == max_len) {
      return;
    }
    for (Symbol t : symbols) {
      if (!stack.empty()) {
        Symbol const s = stack.back();
        if (s.gen == t.gen && (s.inverse != t.inverse || rec.generator(s.gen).involutive)) {
          continue;
        }
        if (rw.table.count({s, t}) != 0) {
          continue;
        }
      }
      stack.push_back(t);
      self(self);
      stack.pop_back();
    }
  };
  extend(extend);
  return report;
}

std::vector<std::uint64_t> orbit_growth(WreathRecursion const& rec,
                                        Vertex const&          basepoint,
                                        std::size_t            radius) {
  check_vertex(basepoint, rec.q());
  if (basepoint.empty()) {
    throw_invalid("orbit growth needs a basepoint at level >= 1");
  }
  std::vector<GroupWord> gens;
  for (std::uint32_t g = 0; g < rec.rank(); ++g) {
    gens.push_back(GroupWord({Symbol{g, false}}));
  }
  std::set<Vertex>           seen{basepoint};
  std::vector<Vertex>        frontier{basepoint};
  std::vector<std::uint64_t> counts{1};
  for (std::size_t n = 1; n <= radius; ++n) {
    std::vector<Vertex> next;
    for (auto const& v : frontier) {
      for (auto const& g : gens) {
        auto image = act(rec, g, v);
        if (seen.insert(image).second) {
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
    counts.push_back(seen.size());
  }
  return counts;
}

}  // namespace treealg::selfsim
