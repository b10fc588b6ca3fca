#include <catch2/catch.hpp>

#include <random>
#include <sstream>

#include "treealg/error.hpp"
#include "treealg/selfsim/contraction.hpp"
#include "treealg/selfsim/zoo.hpp"

using namespace treealg;
using namespace treealg::selfsim;

namespace {

GroupWord random_word(WreathRecursion const& rec, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t>   len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rec.rank() - 1));
  std::bernoulli_distribution                  inv(0.5);
  std::vector<Symbol>                          s(len(rng));
  for (auto& x : s) {
    x = {gen(rng), inv(rng)};
  }
  return GroupWord(std::move(s));
}

Vertex random_vertex(std::uint32_t q, std::mt19937_64& rng, std::size_t max_level) {
  std::uniform_int_distribution<std::size_t>   len(0, max_level);
  std::uniform_int_distribution<std::uint32_t> letter(0, q - 1);
  Vertex                                       v(len(rng));
  for (auto& x : v) {
    x = letter(rng);
  }
  return v;
}

Vertex concat(Vertex a, Vertex const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("zoo recursions", "[selfsim]") {
  auto g = builtin_group("grigorchuk");
  CHECK(g.q() == 2);
  CHECK(g.rank() == 4);
  auto const& d = g.generator(g.index("d"));
  CHECK(d.perm == LetterPerm{0, 1});
  CHECK(g.format(d.sections[0]) == "1");
  CHECK(g.format(d.sections[1]) == "b");
  for (auto const& gen : g.generators()) {
    CHECK(gen.involutive);
  }

  auto bas = builtin_group("basilica");
  auto const& a = bas.generator(bas.index("a"));
  CHECK(format_cycles(a.perm) == "(1,2)");
  CHECK(bas.format(a.sections[1]) == "b");
  CHECK(bas.format(bas.generator(bas.index("b")).sections[1]) == "a");

  auto odo = builtin_group("odometer");
  CHECK(odo.rank() == 1);
  CHECK(odo.format(odo.generator(0).sections[1]) == "tau");

  auto gs = builtin_group("gupta-sidki");
  for (auto const& gen : gs.generators()) {
    CHECK_FALSE(gen.involutive);
  }
  CHECK(gs.format(gs.generator(gs.index("gamma")).sections[2]) == "x'");

  CHECK_THROWS_AS(builtin_group("nosuch"), Error);
  try {
    builtin_group("nosuch");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_found);
  }
}

TEST_CASE("section and action examples", "[selfsim]") {
  auto g = builtin_group("grigorchuk");
  CHECK(g.format(section(g, g.parse_word("b"), {1})) == "c");
  CHECK(g.format(section(g, g.parse_word("bd"), {1})) == "cb");
  auto w = g.parse_word("abacad");
  CHECK(section(g, w, {}) == w);
  CHECK(act(g, g.parse_word("a"), {0, 0, 1}) == Vertex{1, 0, 1});
  CHECK(act(g, g.parse_word("d"), {1, 0}) == Vertex{1, 0});
  CHECK(act(g, GroupWord(), {1, 1, 0}) == Vertex{1, 1, 0});
  CHECK_THROWS_AS(section(g, w, {2}), Error);
  CHECK_THROWS_AS(parse_vertex("13", 2), Error);
  CHECK(parse_vertex("1 2 1", 2) == Vertex{0, 1, 0});
}

TEST_CASE("word parsing and free reduction", "[selfsim]") {
  auto g = builtin_group("grigorchuk");
  CHECK(g.parse_word("a a b b") == GroupWord());
  CHECK(g.format(g.parse_word("a*b'*b*c")) == "ac");
  CHECK(g.format(g.parse_word("b'")) == "b");
  auto gs = builtin_group("gupta_sidki");
  CHECK(gs.format(gs.parse_word("x gamma gamma' x")) == "x*x");
  CHECK(gs.format(gs.parse_word("xx'")) == "1");
  CHECK(gs.format(gs.inverse(gs.parse_word("x*gamma"))) == "gamma'*x'");
  CHECK_THROWS_AS(g.parse_word("abz"), Error);
}

TEST_CASE("free reduction is confluent", "[selfsim][property]") {
  std::mt19937_64 rng(11);
  for (auto const& name : builtin_names()) {
    auto rec = builtin_group(name);
    for (int t = 0; t < 300; ++t) {
      auto                w = random_word(rec, rng, 16);
      std::vector<Symbol> s = w.symbols();
      for (auto& x : s) {
        if (rec.generator(x.gen).involutive) {
          x.inverse = false;
        }
      }
      // Cancel randomly chosen adjacent pairs until none remain.
      for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
          bool const inv = rec.generator(s[i].gen).involutive;
          if (s[i].gen == s[i + 1].gen && (s[i].inverse != s[i + 1].inverse || inv)) {
            spots.push_back(i);
          }
        }
        if (spots.empty()) {
          break;
        }
        auto i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i),
                s.begin() + static_cast<std::ptrdiff_t>(i + 2));
      }
      REQUIRE(GroupWord(s) == rec.reduce(w));
    }
  }
}

TEST_CASE("bimodule identities", "[selfsim][property]") {
  std::mt19937_64 rng(12345);
  for (auto const& name : builtin_names()) {
    auto rec = builtin_group(name);
    for (int t = 0; t < 1000; ++t) {
      auto g = random_word(rec, rng, 12);
      auto h = random_word(rec, rng, 12);
      auto v = random_vertex(rec.q(), rng, 3);
      auto u = random_vertex(rec.q(), rng, 3);
      // (g@v)@u = g@(vu)
      REQUIRE(section(rec, section(rec, g, v), u) == section(rec, g, concat(v, u)));
      // (gh)@v = (g@v)(h@v^g)
      REQUIRE(section(rec, rec.multiply(g, h), v) ==
              rec.multiply(section(rec, g, v), section(rec, h, act(rec, g, v))));
      // (vu)^g = v^g u^{g@v}
      REQUIRE(act(rec, g, concat(v, u)) ==
              concat(act(rec, g, v), act(rec, section(rec, g, v), u)));
      // v^{gh} = (v^g)^h
      REQUIRE(act(rec, rec.multiply(g, h), v) == act(rec, h, act(rec, g, v)));
    }
  }
}

TEST_CASE("involutive generators square to the identity up to level 8", "[selfsim]") {
  for (auto const& name : builtin_names()) {
    auto rec = builtin_group(name);
    CHECK_NOTHROW(rec.validate_involutions(8));
  }
  std::istringstream bad("alphabet 2\nt inv (1,2) 1 t\n");
  CHECK_THROWS_AS(read_group_file(bad), Error);
}

TEST_CASE("group file round trip", "[selfsim]") {
  for (auto const& name : builtin_names()) {
    auto               rec = builtin_group(name);
    std::ostringstream out;
    write_group_file(out, rec);
    std::istringstream in(out.str());
    auto               back = read_group_file(in);
    std::ostringstream again;
    write_group_file(again, back);
    CHECK(out.str() == again.str());
  }
  std::ostringstream out;
  write_group_file(out, builtin_group("bsv"));
  CHECK(out.str() == "alphabet 2\ntau - (1,2) 1 tau\nmu - (1,2) 1 mu'\n");
  std::istringstream bad("alphabet 2\na - (1,3) 1 1\n");
  CHECK_THROWS_AS(read_group_file(bad), Error);
}

TEST_CASE("triviality test", "[selfsim]") {
  auto g = builtin_group("grigorchuk");
  CHECK(is_trivial(g, g.parse_word("bcd")));
  CHECK(is_trivial(g, g.power(g.parse_word("ad"), 4)));
  CHECK_FALSE(is_trivial(g, g.power(g.parse_word("ad"), 2)));
  CHECK_FALSE(is_trivial(g, g.parse_word("bc")));
  auto gs = builtin_group("gupta_sidki");
  CHECK(is_trivial(gs, gs.power(gs.parse_word("gamma"), 3)));
}

TEST_CASE("contraction certificates", "[selfsim]") {
  auto g = builtin_group("grigorchuk");
  auto r = contraction_certificate(g, {exact::make_rational(1, 2), 1, 1}, 10);
  CHECK(r.pass);
  CHECK(r.shortening_pairs.size() == 6);

  auto e = contraction_certificate(g, {exact::make_rational(1, 2), 1, 0}, 1);
  CHECK_FALSE(e.pass);  // |a@1| = 0 but |b@2| = 1 > 1/2

  // The Basilica element b^5 has section a^5 at vertex 2, so depth one
  // cannot be certified with lambda = 3/4 and K = 1; depth two can.
  auto bas = builtin_group("basilica");
  auto r1  = contraction_certificate(bas, {exact::make_rational(3, 4), 1, 1}, 10);
  CHECK_FALSE(r1.pass);
  auto r2 = contraction_certificate(bas, {exact::make_rational(3, 4), 2, 1}, 10);
  CHECK(r2.pass);

  CHECK_THROWS_AS(contraction_certificate(g, {exact::make_rational(1, 1), 1, 1}, 3), Error);
  CHECK_THROWS_AS(contraction_certificate(g, {exact::make_rational(1, 2), 1, 1}, 0), Error);
}

TEST_CASE("orbit growth", "[selfsim]") {
  auto odo = builtin_group("odometer");
  for (std::size_t m = 1; m <= 6; ++m) {
    auto f = orbit_growth(odo, Vertex(m, 0), 70);
    for (std::size_t n = 0; n < f.size(); ++n) {
      REQUIRE(f[n] == std::min<std::uint64_t>(n + 1, std::uint64_t{1} << m));
    }
  }
  auto g = builtin_group("grigorchuk");
  CHECK(orbit_growth(g, {0}, 0) == std::vector<std::uint64_t>{1});
  auto f = orbit_growth(g, Vertex(8, 0), 40);
  REQUIRE(f.size() == 41);
  for (std::size_t n = 1; n < f.size(); ++n) {
    REQUIRE(f[n] >= f[n - 1]);
  }
  CHECK(f[40] <= 1 + 4 * 40);
  CHECK_THROWS_AS(orbit_growth(g, {}, 3), Error);
}
