#include "treealg/selfsim/recursion.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "treealg/error.hpp"

namespace treealg::selfsim {

namespace {

bool is_bijection(LetterPerm const& perm, std::uint32_t q) {
  if (perm.size() != q) {
    return false;
  }
  std::vector<bool> seen(q, false);
  for (auto x : perm) {
    if (x >= q || seen[x]) {
      return false;
    }
    seen[x] = true;
  }
  return true;
}

}  // namespace

WreathRecursion::WreathRecursion(std::uint32_t q, std::vector<Generator> generators)
    : _q(q), _gens(std::move(generators)) {
  if (q < 2) {
    throw_invalid("alphabet size must be at least 2");
  }
  for (std::size_t i = 0; i < _gens.size(); ++i) {
    auto const& g = _gens[i];
    if (g.name.empty()) {
      throw_invalid("generator with empty name");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (_gens[j].name == g.name) {
        throw_invalid("duplicate generator name '" + g.name + "'");
      }
    }
    if (!is_bijection(g.perm, q)) {
      throw_invalid("root permutation of '" + g.name + "' is not a bijection of 1.." +
                    std::to_string(q));
    }
    if (g.sections.size() != q) {
      throw_invalid("generator '" + g.name + "' needs " + std::to_string(q) + " sections");
    }
    for (auto const& s : g.sections) {
      for (auto sym : s.symbols()) {
        if (sym.gen >= _gens.size()) {
          throw_invalid("section of '" + g.name + "' references an undeclared generator");
        }
      }
    }
  }
  for (auto& g : _gens) {
    for (auto& s : g.sections) {
      s = reduce(s);
    }
  }
}

std::optional<std::uint32_t> WreathRecursion::find(std::string_view name) const {
  for (std::uint32_t i = 0; i < _gens.size(); ++i) {
    if (_gens[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::uint32_t WreathRecursion::index(std::string_view name) const {
  if (auto i = find(name)) {
    return *i;
  }
  throw_not_found("unknown generator '" + std::string(name) + "'");
}

GroupWord WreathRecursion::reduce(GroupWord const& w) const {
  std::vector<Symbol> out;
  out.reserve(w.length());
  for (Symbol s : w.symbols()) {
    if (s.gen >= _gens.size()) {
      throw_invalid("symbol references an undeclared generator");
    }
    if (_gens[s.gen].involutive) {
      s.inverse = false;
    }
    if (!out.empty() && out.back().gen == s.gen &&
        (out.back().inverse != s.inverse || _gens[s.gen].involutive)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord WreathRecursion::multiply(GroupWord const& a, GroupWord const& b) const {
  std::vector<Symbol> s = a.symbols();
  s.insert(s.end(), b.symbols().begin(), b.symbols().end());
  return reduce(GroupWord(std::move(s)));
}

GroupWord WreathRecursion::inverse(GroupWord const& w) const {
  std::vector<Symbol> s(w.symbols().rbegin(), w.symbols().rend());
  for (auto& sym : s) {
    sym.inverse = !sym.inverse;
  }
  return reduce(GroupWord(std::move(s)));
}

GroupWord WreathRecursion::power(GroupWord const& w, std::uint64_t k) const {
  std::vector<Symbol> s;
  s.reserve(w.length() * k);
  for (std::uint64_t i = 0; i < k; ++i) {
    s.insert(s.end(), w.symbols().begin(), w.symbols().end());
  }
  return reduce(GroupWord(std::move(s)));
}

GroupWord WreathRecursion::symbol_word(Symbol s) const { return reduce(GroupWord({s})); }

GroupWord WreathRecursion::parse_word(std::string_view text) const {
  std::vector<Symbol> out;
  std::size_t         i = 0;
  auto                skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) {
      ++i;
    }
  };
  skip();
  if (text.substr(i) == "1") {
    return {};
  }
  while (i < text.size()) {
    std::size_t   best_len = 0;
    std::uint32_t best     = 0;
    for (std::uint32_t g = 0; g < _gens.size(); ++g) {
      auto const& name = _gens[g].name;
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best_len = name.size();
        best     = g;
      }
    }
    if (best_len == 0 && text[i] == '1') {
      ++i;
      skip();
      continue;
    }
    if (best_len == 0) {
      throw_invalid("cannot parse group word '" + std::string(text) + "' at position " +
                    std::to_string(i));
    }
    i += best_len;
    bool inv = false;
    while (i < text.size() && text[i] == '\'') {
      inv = !inv;
      ++i;
    }
    out.push_back({best, inv});
    skip();
  }
  return reduce(GroupWord(std::move(out)));
}

std::string WreathRecursion::format(GroupWord const& w) const {
  if (w.empty()) {
    return "1";
  }
  bool const short_names = std::all_of(_gens.begin(), _gens.end(),
                                       [](Generator const& g) { return g.name.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0 && !short_names) {
      out += '*';
    }
    out += _gens[w[i].gen].name;
    if (w[i].inverse) {
      out += '\'';
    }
  }
  return out;
}

LetterPerm WreathRecursion::root_permutation(GroupWord const& w) const {
  LetterPerm p(_q);
  std::iota(p.begin(), p.end(), 0U);
  for (std::uint32_t x = 0; x < _q; ++x) {
    std::uint32_t y = x;
    for (Symbol s : w.symbols()) {
      auto const& perm = _gens[s.gen].perm;
      if (s.inverse) {
        y = static_cast<std::uint32_t>(std::find(perm.begin(), perm.end(), y) - perm.begin());
      } else {
        y = perm[y];
      }
    }
    p[x] = y;
  }
  return p;
}

GroupWord WreathRecursion::section_at(GroupWord const& w, std::uint32_t x) const {
  if (x >= _q) {
    throw_invalid("letter " + std::to_string(x + 1) + " out of range");
  }
  std::vector<Symbol> out;
  for (Symbol s : w.symbols()) {
    auto const& g = _gens[s.gen];
    if (s.inverse) {
      // (g^-1)@x = (g@y)^-1 where y^g = x
      auto const y = static_cast<std::uint32_t>(
          std::find(g.perm.begin(), g.perm.end(), x) - g.perm.begin());
      auto const& sec = g.sections[y].symbols();
      for (auto it = sec.rbegin(); it != sec.rend(); ++it) {
        out.push_back({it->gen, !it->inverse});
      }
      x = y;
    } else {
      auto const& sec = g.sections[x].symbols();
      out.insert(out.end(), sec.begin(), sec.end());
      x = g.perm[x];
    }
  }
  return reduce(GroupWord(std::move(out)));
}

void WreathRecursion::validate_involutions(std::size_t max_level) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < max_level; ++i) {
    count *= _q;
  }
  for (std::uint32_t g = 0; g < _gens.size(); ++g) {
    if (!_gens[g].involutive) {
      continue;
    }
    GroupWord once({Symbol{g, false}});
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vertex v = vertex_from_index(idx, max_level, _q);
      if (act(*this, once, act(*this, once, v)) != v) {
        throw_precondition("generator '" + _gens[g].name +
                           "' is flagged involutive but its square moves vertex " +
                           format_vertex(v));
      }
    }
  }
}

GroupWord section(WreathRecursion const& rec, GroupWord const& w, Vertex const& v) {
  check_vertex(v, rec.q());
  GroupWord cur = rec.reduce(w);
  for (auto x : v) {
    if (cur.empty()) {
      break;
    }
    cur = rec.section_at(cur, x);
  }
  return cur;
}

Vertex act(WreathRecursion const& rec, GroupWord const& w, Vertex const& v) {
  check_vertex(v, rec.q());
  Vertex    out(v.size());
  GroupWord cur = rec.reduce(w);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint32_t const x = v[i];
    if (cur.empty()) {
      std::copy(v.begin() + static_cast<std::ptrdiff_t>(i), v.end(),
                out.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
    out[i] = rec.root_permutation(cur)[x];
    cur    = rec.section_at(cur, x);
  }
  return out;
}

void check_vertex(Vertex const& v, std::uint32_t q) {
  for (auto x : v) {
    if (x >= q) {
      throw_invalid("letter " + std::to_string(x + 1) + " out of range 1.." + std::to_string(q));
    }
  }
}

Vertex parse_vertex(std::string_view text, std::uint32_t q) {
  Vertex v;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto const letter = static_cast<std::uint32_t>(c - '0');
      if (letter < 1 || letter > q) {
        throw_invalid("letter " + std::string(1, c) + " out of range 1.." + std::to_string(q));
      }
      v.push_back(letter - 1);
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != '(' &&
               c != ')') {
      throw_invalid("cannot parse vertex '" + std::string(text) + "'");
    }
  }
  return v;
}

std::string format_vertex(Vertex const& v) {
  std::string out;
  for (auto x : v) {
    out += std::to_string(x + 1);
  }
  return out.empty() ? "()" : out;
}

std::uint64_t vertex_index(Vertex const& v, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (auto x : v) {
    idx = idx * q + x;
  }
  return idx;
}

Vertex vertex_from_index(std::uint64_t index, std::size_t level, std::uint32_t q) {
  Vertex v(level);
  for (std::size_t i = level; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return v;
}

LetterPerm parse_cycles(std::string_view text, std::uint32_t q) {
  LetterPerm p(q);
  std::iota(p.begin(), p.end(), 0U);
  std::size_t i = 0;
  auto        ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  std::vector<bool> used(q, false);
  ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw_invalid("cycle notation must start with '(' in '" + std::string(text) + "'");
    }
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i) {
        throw_invalid("bad cycle notation '" + std::string(text) + "'");
      }
      auto const letter = std::stoul(std::string(text.substr(start, i - start)));
      if (letter < 1 || letter > q || used[letter - 1]) {
        throw_invalid("bad or repeated letter in cycle notation '" + std::string(text) + "'");
      }
      used[letter - 1] = true;
      cyc.push_back(static_cast<std::uint32_t>(letter - 1));
      ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
      }
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    ws();
  }
  return p;
}

std::string format_cycles(LetterPerm const& perm) {
  std::string       out;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t x = 0; x < perm.size(); ++x) {
    if (seen[x] || perm[x] == x) {
      continue;
    }
    out += '(';
    std::uint32_t y = x;
    bool          first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) {
        out += ',';
      }
      out += std::to_string(y + 1);
      first = false;
      y     = perm[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace treealg::selfsim
