#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treealg::selfsim {

// A vertex of the rooted tree X^*. Letters are stored 0-based (0..q-1) and
// printed 1-based, so the vertex printed "1 2" holds {0, 1}.
using Vertex = std::vector<std::uint32_t>;

// A permutation of the alphabet, perm[x] = x^g (right action, 0-based).
using LetterPerm = std::vector<std::uint32_t>;

struct Symbol {
  std::uint32_t gen     = 0;
  bool          inverse = false;

  friend auto operator<=>(Symbol const&, Symbol const&) = default;
};

// A sequence of signed generator symbols. Reduction is the job of the
// owning WreathRecursion, which knows which generators are involutions.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Symbol> symbols) : _symbols(std::move(symbols)) {}

  std::vector<Symbol> const& symbols() const noexcept { return _symbols; }
  std::size_t length() const noexcept { return _symbols.size(); }
  bool        empty() const noexcept { return _symbols.empty(); }
  Symbol      operator[](std::size_t i) const { return _symbols[i]; }

  friend auto operator<=>(GroupWord const&, GroupWord const&) = default;

 private:
  std::vector<Symbol> _symbols;
};

struct Generator {
  std::string            name;
  LetterPerm             perm;
  std::vector<GroupWord> sections;  // sections[x] = g@x, reduced
  bool                   involutive = false;
};

class WreathRecursion {
 public:
  // Validates bijectivity, section references and alphabet size; reduces
  // every section word. Involutivity is not checked here, see
  // validate_involutions().
  WreathRecursion(std::uint32_t q, std::vector<Generator> generators);

  std::uint32_t                 q() const noexcept { return _q; }
  std::size_t                   rank() const noexcept { return _gens.size(); }
  std::vector<Generator> const& generators() const noexcept { return _gens; }
  Generator const&              generator(std::uint32_t i) const { return _gens.at(i); }

  std::optional<std::uint32_t> find(std::string_view name) const;
  std::uint32_t                index(std::string_view name) const;  // throws not-found

  // Free reduction: cancels s s^-1, and s s for involutive s, whose inverse
  // is normalised to s. Stack-based, so the result is the unique normal form.
  GroupWord reduce(GroupWord const& w) const;

  GroupWord multiply(GroupWord const& a, GroupWord const& b) const;
  GroupWord inverse(GroupWord const& w) const;
  GroupWord power(GroupWord const& w, std::uint64_t k) const;
  GroupWord symbol_word(Symbol s) const;

  // Accepts generator names separated by spaces or '*', juxtaposed names
  // (longest match), a trailing ' for inverses, and "1" for the identity.
  GroupWord   parse_word(std::string_view text) const;
  std::string format(GroupWord const& w) const;

  // Root permutation of a word: x -> x^w.
  LetterPerm root_permutation(GroupWord const& w) const;

  // Single-letter section w@x.
  GroupWord section_at(GroupWord const& w, std::uint32_t x) const;

  // Throws precondition-violation if a generator flagged involutive has a
  // nontrivial square on some level <= max_level.
  void validate_involutions(std::size_t max_level) const;

 private:
  std::uint32_t          _q;
  std::vector<Generator> _gens;
};

// (gh)@v = (g@v)(h@v^g), folded letter by letter along v.
GroupWord section(WreathRecursion const& rec, GroupWord const& w, Vertex const& v);

// Image v^w under the right action.
Vertex act(WreathRecursion const& rec, GroupWord const& w, Vertex const& v);

// Vertex helpers (1-based text form).
Vertex      parse_vertex(std::string_view text, std::uint32_t q);
std::string format_vertex(Vertex const& v);
void        check_vertex(Vertex const& v, std::uint32_t q);  // throws invalid-argument

// Lexicographic index of a vertex with first letter most significant.
std::uint64_t vertex_index(Vertex const& v, std::uint32_t q);
Vertex        vertex_from_index(std::uint64_t index, std::size_t level, std::uint32_t q);

// Cycle notation with 1-based letters, e.g. "(1,2)(3,4)" or "()".
LetterPerm  parse_cycles(std::string_view text, std::uint32_t q);
std::string format_cycles(LetterPerm const& perm);

}  // namespace treealg::selfsim
