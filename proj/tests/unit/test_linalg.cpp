#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "treealg/linalg/gf2_basis.hpp"
#include "treealg/linalg/gfp_basis.hpp"
#include "treealg/linalg/q_basis.hpp"

using namespace treealg;
using namespace treealg::linalg;

namespace {

// Textbook elimination on int rows, used as the rank oracle.
std::size_t naive_rank(std::vector<std::vector<long>> rows, long p) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] % p == 0) {
      ++r;
    }
    if (r == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[rank]);
    long inv = 1;
    while ((rows[rank][c] % p + p) % p * inv % p != 1) {
      ++inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) {
        continue;
      }
      long const f = ((rows[i][c] % p + p) % p) * inv % p;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(std::vector<std::vector<long>> const& rows) {
  std::vector<std::vector<mpq_class>> m;
  for (auto const& r : rows) {
    m.emplace_back(r.begin(), r.end());
  }
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t r = rank;
    while (r < m.size() && m[r][c] == 0) {
      ++r;
    }
    if (r == m.size()) {
      continue;
    }
    std::swap(m[r], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      mpq_class const f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= f * m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// Low-rank random rows: combinations of a few random generators.
std::vector<std::vector<long>> low_rank(std::mt19937_64& rng, std::size_t count, std::size_t len,
                                        std::size_t gens, long lo, long hi) {
  std::uniform_int_distribution<long>           entry(lo, hi);
  std::uniform_int_distribution<long>           coef(-2, 2);
  std::vector<std::vector<long>>                g(gens, std::vector<long>(len));
  for (auto& r : g) {
    for (auto& x : r) {
      x = entry(rng);
    }
  }
  std::vector<std::vector<long>> out(count, std::vector<long>(len, 0));
  for (auto& r : out) {
    for (auto const& gg : g) {
      long const c = coef(rng);
      for (std::size_t j = 0; j < len; ++j) {
        r[j] += c * gg[j];
      }
    }
  }
  return out;
}

Bits to_bits(std::vector<long> const& r) {
  Bits b(words_for(r.size()), 0);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] % 2 != 0) {
      set_bit(b.data(), j);
    }
  }
  return b;
}

}  // namespace

TEST_CASE("gf2 basis rank matches textbook elimination", "[linalg]") {
  std::mt19937_64 rng(11);
  for (std::size_t len : {7UL, 64UL, 130UL, 700UL}) {
    for (std::size_t gens : {1UL, 5UL, 40UL}) {
      auto rows = low_rank(rng, 60, len, gens, 0, 1);
      std::vector<Bits> batch;
      for (auto const& r : rows) {
        batch.push_back(to_bits(r));
      }
      Gf2Basis serial(len);
      Gf2Basis parallel(len);
      auto     a = serial.insert(batch, Exec::serial);
      auto     b = parallel.insert(batch, Exec::parallel);
      REQUIRE(serial.dim() == naive_rank(rows, 2));
      REQUIRE(a == b);
      REQUIRE(serial.pivots() == parallel.pivots());
      for (std::size_t i = 0; i < serial.dim(); ++i) {
        REQUIRE(std::equal(serial.row(i), serial.row(i) + serial.words(), parallel.row(i)));
      }
      for (auto const& v : batch) {
        REQUIRE(serial.contains(v.data()));
      }
    }
  }
}

TEST_CASE("gf2 basis is independent of insertion order", "[linalg][property]") {
  std::mt19937_64 rng(12);
  auto            rows = low_rank(rng, 300, 1000, 120, 0, 1);
  std::vector<Bits> batch;
  for (auto const& r : rows) {
    batch.push_back(to_bits(r));
  }
  Gf2Basis forward(1000);
  forward.insert(batch, Exec::parallel);
  std::shuffle(batch.begin(), batch.end(), rng);
  Gf2Basis shuffled(1000);
  for (auto const& v : batch) {
    shuffled.insert_one(v);
  }
  REQUIRE(forward.dim() == shuffled.dim());
  std::vector<Bits> x;
  std::vector<Bits> y;
  for (std::size_t i = 0; i < forward.dim(); ++i) {
    x.emplace_back(forward.row(i), forward.row(i) + forward.words());
    y.emplace_back(shuffled.row(i), shuffled.row(i) + shuffled.words());
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  REQUIRE(x == y);
}

TEST_CASE("gf2 residues clear every pivot", "[linalg]") {
  std::mt19937_64 rng(13);
  auto            rows = low_rank(rng, 40, 200, 30, 0, 1);
  Gf2Basis        basis(200);
  for (std::size_t i = 0; i < 20; ++i) {
    basis.insert_one(to_bits(rows[i]));
  }
  for (std::size_t i = 20; i < 40; ++i) {
    auto v = to_bits(rows[i]);
    basis.reduce(v.data());
    for (auto p : basis.pivots()) {
      REQUIRE_FALSE(get_bit(v.data(), p));
    }
  }
}

TEST_CASE("gfp basis rank and canonical rows", "[linalg]") {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {3U, 5U, 7U, 251U}) {
    for (std::size_t gens : {1UL, 8UL, 50UL}) {
      auto rows = low_rank(rng, 70, 90, gens, 0, static_cast<long>(p) - 1);
      std::vector<Bytes> batch;
      for (auto const& r : rows) {
        Bytes b(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) {
          b[j] = static_cast<std::uint8_t>(((r[j] % p) + p) % p);
        }
        batch.push_back(b);
      }
      GfpBasis serial(p, 90);
      GfpBasis parallel(p, 90);
      auto     a = serial.insert(batch, Exec::serial);
      auto     b = parallel.insert(batch, Exec::parallel);
      REQUIRE(serial.dim() == naive_rank(rows, p));
      REQUIRE(a == b);
      for (std::size_t i = 0; i < serial.dim(); ++i) {
        REQUIRE(serial.row(i) == parallel.row(i));
        REQUIRE(serial.row(i)[serial.pivots()[i]] == 1);
      }
      for (auto const& v : batch) {
        REQUIRE(serial.contains(v));
      }
    }
  }
  CHECK_THROWS(GfpBasis(2, 4));
  CHECK_THROWS(GfpBasis(257, 4));
}

TEST_CASE("rational basis rank, including the bigint fallback", "[linalg]") {
  std::mt19937_64 rng(31);
  for (long bound : {1L, 1000L, 1L << 28}) {
    auto rows = low_rank(rng, 30, 25, 12, -bound, bound);
    std::vector<IntVec> batch;
    for (auto const& r : rows) {
      batch.emplace_back(r.begin(), r.end());
    }
    QBasis serial(25);
    QBasis parallel(25);
    auto   a = serial.insert(batch, Exec::serial);
    auto   b = parallel.insert(batch, Exec::parallel);
    REQUIRE(serial.dim() == rational_rank(rows));
    REQUIRE(a == b);
    for (auto const& v : batch) {
      REQUIRE(serial.contains(v));
    }
    if (bound > 1000) {
      CHECK(serial.uses_bigint());
    }
  }
  QBasis       q(3);
  IntVec const huge{exact::pow(10, 40), 1, 0};
  q.insert({huge});
  CHECK(q.uses_bigint());
  CHECK(q.contains(IntVec{exact::pow(10, 40) * 3, 3, 0}));
  CHECK_FALSE(q.contains(IntVec{0, 1, 0}));
}

TEST_CASE("dense products agree across kernels", "[linalg]") {
  std::mt19937_64 rng(41);
  for (std::size_t n : {4UL, 27UL, 64UL, 128UL, 192UL}) {
    Bits a(words_for(n * n), 0);
    Bits b(words_for(n * n), 0);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (coin(rng)) {
        set_bit(a.data(), i);
      }
      if (coin(rng)) {
        set_bit(b.data(), i);
      }
    }
    auto const c1 = gf2_matmul(a, b, n, Exec::serial);
    auto const c2 = gf2_matmul(a, b, n, Exec::parallel);
    REQUIRE(c1 == c2);
    for (std::size_t i = 0; i < n; i += 7) {
      for (std::size_t j = 0; j < n; j += 5) {
        bool x = false;
        for (std::size_t k = 0; k < n; ++k) {
          x ^= get_bit(a.data(), i * n + k) && get_bit(b.data(), k * n + j);
        }
        REQUIRE(get_bit(c1.data(), i * n + j) == x);
      }
    }
    for (std::uint32_t p : {3U, 7U}) {
      std::uniform_int_distribution<int> e(0, static_cast<int>(p) - 1);
      Bytes                              x(n * n);
      Bytes                              y(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        x[i] = static_cast<std::uint8_t>(e(rng));
        y[i] = static_cast<std::uint8_t>(e(rng));
      }
      auto const z1 = gfp_matmul(x, y, n, p, Exec::serial);
      auto const z2 = gfp_matmul(x, y, n, p, Exec::parallel);
      REQUIRE(z1 == z2);
      std::size_t const i = n / 2;
      std::size_t const j = n / 3;
      unsigned          s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        s += x[i * n + k] * y[k * n + j];
      }
      REQUIRE(z1[i * n + j] == s % p);
    }
  }
}
