#include "treealg/linalg/gf2_basis.hpp"

#include <algorithm>

#include "treealg/error.hpp"

namespace treealg::linalg {

namespace {

constexpr std::size_t sub_batch   = 512;
constexpr std::size_t table_bytes = std::size_t{8} << 20;
constexpr std::size_t m4rm_min    = 1024;
constexpr std::size_t omp_min     = 64;

// Gray-code table of all XOR combinations of up to eight rows.
void build_table(Word* table, std::vector<Word const*> const& rows, std::size_t words) {
  std::fill(table, table + words, Word{0});
  std::size_t const entries = std::size_t{1} << rows.size();
  for (std::size_t x = 1; x < entries; ++x) {
    Word*       dst  = table + x * words;
    Word const* prev = table + (x & (x - 1)) * words;
    Word const* add  = rows[static_cast<std::size_t>(std::countr_zero(x))];
    for (std::size_t k = 0; k < words; ++k) {
      dst[k] = prev[k] ^ add[k];
    }
  }
}

// Applies tables built from consecutive groups of eight rows (identified by
// their pivots) to every target vector. The rows of each group vanish at the
// pivots of the others, so the lookup index can be read off the target
// before any group is applied.
template <class Target>
void apply_grouped(std::vector<Word const*> const&   rows,
                   std::vector<std::uint32_t> const& pivots,
                   std::size_t words, std::size_t targets, Target&& target) {
  std::size_t const groups        = (rows.size() + 7) / 8;
  std::size_t const group_bytes   = 256 * words * sizeof(Word);
  std::size_t const groups_per_go = std::max<std::size_t>(1, table_bytes / group_bytes);
  std::vector<Word> tables;
  for (std::size_t g0 = 0; g0 < groups; g0 += groups_per_go) {
    std::size_t const g1 = std::min(groups, g0 + groups_per_go);
    tables.assign((g1 - g0) * 256 * words, 0);
#pragma omp parallel for schedule(static)
    for (std::size_t g = g0; g < g1; ++g) {
      std::size_t const        lo = g * 8;
      std::size_t const        hi = std::min(rows.size(), lo + 8);
      std::vector<Word const*> chunk(rows.begin() + static_cast<std::ptrdiff_t>(lo),
                                     rows.begin() + static_cast<std::ptrdiff_t>(hi));
      build_table(tables.data() + (g - g0) * 256 * words, chunk, words);
    }
#pragma omp parallel for schedule(static)
    for (std::size_t t = 0; t < targets; ++t) {
      Word* v = target(t);
      for (std::size_t g = g0; g < g1; ++g) {
        std::size_t const lo  = g * 8;
        std::size_t const hi  = std::min(rows.size(), lo + 8);
        unsigned          idx = 0;
        for (std::size_t r = lo; r < hi; ++r) {
          idx |= static_cast<unsigned>(get_bit(v, pivots[r])) << (r - lo);
        }
        if (idx != 0) {
          xor_into(v, tables.data() + ((g - g0) * 256 + idx) * words, words);
        }
      }
    }
  }
}

}  // namespace

Gf2Basis::Gf2Basis(std::size_t bits) : _bits(bits), _words(words_for(bits)) {}

void Gf2Basis::reduce(Word* v) const {
  for (std::size_t i = 0; i < _pivots.size(); ++i) {
    if (get_bit(v, _pivots[i])) {
      xor_into(v, row(i), _words);
    }
  }
}

bool Gf2Basis::contains(Word const* v) const {
  Bits tmp(v, v + _words);
  reduce(tmp.data());
  return all_zero(tmp.data(), _words);
}

bool Gf2Basis::insert_one(Bits v) {
  std::vector<Bits> batch;
  batch.push_back(std::move(v));
  return !insert(std::move(batch)).empty();
}

void Gf2Basis::absorb(std::vector<Bits> const& fresh, Exec exec) {
  if (fresh.empty()) {
    return;
  }
  std::vector<Word const*>   rows;
  std::vector<std::uint32_t> pivots;
  for (auto const& f : fresh) {
    rows.push_back(f.data());
    pivots.push_back(static_cast<std::uint32_t>(lowest_bit(f.data(), _words)));
  }
  std::size_t const old = _pivots.size();
  if (exec == Exec::parallel && old >= m4rm_min && rows.size() >= 8) {
    apply_grouped(rows, pivots, _words, old,
                  [&](std::size_t t) { return _rows.data() + t * _words; });
  } else {
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && old >= omp_min)
    for (std::size_t t = 0; t < old; ++t) {
      Word* v = _rows.data() + t * _words;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (get_bit(v, pivots[j])) {
          xor_into(v, rows[j], _words);
        }
      }
    }
  }
  for (std::size_t j = 0; j < fresh.size(); ++j) {
    _rows.insert(_rows.end(), fresh[j].begin(), fresh[j].end());
    _pivots.push_back(pivots[j]);
  }
}

std::vector<Bits> Gf2Basis::insert(std::vector<Bits> batch, Exec exec) {
  for (auto const& v : batch) {
    if (v.size() != _words) {
      throw_invalid("vector length does not match the basis");
    }
  }
  std::vector<Bits> added;
  for (std::size_t b0 = 0; b0 < batch.size(); b0 += sub_batch) {
    std::size_t const b1 = std::min(batch.size(), b0 + sub_batch);
    std::vector<Bits> part(std::make_move_iterator(batch.begin() + static_cast<std::ptrdiff_t>(b0)),
                           std::make_move_iterator(batch.begin() + static_cast<std::ptrdiff_t>(b1)));
    auto const count = static_cast<std::ptrdiff_t>(part.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && part.size() >= omp_min)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      reduce(part[static_cast<std::size_t>(i)].data());
    }
    std::vector<Bits> fresh;
    for (auto& v : part) {
      for (auto const& f : fresh) {
        if (get_bit(v.data(), lowest_bit(f.data(), _words))) {
          xor_into(v.data(), f.data(), _words);
        }
      }
      auto const p = lowest_bit(v.data(), _words);
      if (p == npos) {
        continue;
      }
      for (auto& f : fresh) {
        if (get_bit(f.data(), p)) {
          xor_into(f.data(), v.data(), _words);
        }
      }
      added.push_back(v);
      fresh.push_back(std::move(v));
    }
    absorb(fresh, exec);
  }
  return added;
}

Bits gf2_matmul(Bits const& a, Bits const& b, std::size_t n, Exec exec) {
  std::size_t const total = words_for(n * n);
  if (a.size() != total || b.size() != total) {
    throw_invalid("matrix size mismatch");
  }
  Bits c(total, 0);
  if (n % 64 != 0 || exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!get_bit(a.data(), i * n + k)) {
          continue;
        }
        if (n % 64 == 0) {
          xor_into(c.data() + i * n / 64, b.data() + k * n / 64, n / 64);
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            if (get_bit(b.data(), k * n + j)) {
              flip_bit(c.data(), i * n + j);
            }
          }
        }
      }
    }
    return c;
  }
  std::size_t const w      = n / 64;
  std::size_t const groups = n / 8;
  std::vector<Word> tables(groups * 256 * w);
#pragma omp parallel for schedule(static)
  for (std::size_t g = 0; g < groups; ++g) {
    std::vector<Word const*> rows(8);
    for (std::size_t r = 0; r < 8; ++r) {
      rows[r] = b.data() + (g * 8 + r) * w;
    }
    build_table(tables.data() + g * 256 * w, rows, w);
  }
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    Word const* arow = a.data() + i * w;
    Word*       crow = c.data() + i * w;
    for (std::size_t g = 0; g < groups; ++g) {
      auto const idx = static_cast<std::size_t>((arow[g / 8] >> ((g % 8) * 8)) & 0xFFU);
      if (idx != 0) {
        xor_into(crow, tables.data() + (g * 256 + idx) * w, w);
      }
    }
  }
  return c;
}

}  // namespace treealg::linalg
