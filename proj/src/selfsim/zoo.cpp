#include "treealg/selfsim/zoo.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "treealg/error.hpp"

namespace treealg::selfsim {

namespace {

struct GenSpec {
  std::string              name;
  bool                     involutive;
  std::string              cycles;
  std::vector<std::string> sections;
};

WreathRecursion build(std::uint32_t q, std::vector<GenSpec> const& specs) {
  std::vector<Generator> gens(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    gens[i].name       = specs[i].name;
    gens[i].involutive = specs[i].involutive;
    gens[i].perm       = parse_cycles(specs[i].cycles, q);
    gens[i].sections.resize(q);
  }
  // Names are known now; parse sections against a section-free shell.
  WreathRecursion shell(q, gens);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].sections.size() != q) {
      throw_invalid("generator '" + specs[i].name + "' needs " + std::to_string(q) +
                    " sections");
    }
    for (std::uint32_t x = 0; x < q; ++x) {
      gens[i].sections[x] = shell.parse_word(specs[i].sections[x]);
    }
  }
  return WreathRecursion(q, std::move(gens));
}

std::string normalise(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"grigorchuk", "gupta_sidki", "fabrykowski_gupta_bg", "bsv",
          "basilica",   "odometer",    "lamplighter"};
}

WreathRecursion builtin_group(std::string_view name) {
  auto const n = normalise(name);
  if (n == "grigorchuk") {
    return build(2, {{"a", true, "(1,2)", {"1", "1"}},
                     {"b", true, "()", {"a", "c"}},
                     {"c", true, "()", {"a", "d"}},
                     {"d", true, "()", {"1", "b"}}});
  }
  if (n == "gupta_sidki") {
    return build(3, {{"x", false, "(1,2,3)", {"1", "1", "1"}},
                     {"gamma", false, "()", {"gamma", "x", "x'"}}});
  }
  if (n == "fabrykowski_gupta_bg" || n == "fabrykowski_gupta" || n == "bg") {
    return build(3, {{"x", false, "(1,2,3)", {"1", "1", "1"}},
                     {"delta", false, "()", {"delta", "x", "x"}}});
  }
  if (n == "bsv") {
    return build(2, {{"tau", false, "(1,2)", {"1", "tau"}},
                     {"mu", false, "(1,2)", {"1", "mu'"}}});
  }
  if (n == "basilica") {
    return build(2, {{"a", false, "(1,2)", {"1", "b"}}, {"b", false, "()", {"1", "a"}}});
  }
  if (n == "odometer") {
    return build(2, {{"tau", false, "(1,2)", {"1", "tau"}}});
  }
  if (n == "lamplighter") {
    return build(2, {{"a", false, "(1,2)", {"a", "b"}}, {"b", false, "()", {"a", "b"}}});
  }
  throw_not_found("unknown group '" + std::string(name) + "'");
}

WreathRecursion read_group_file(std::istream& in) {
  std::string          line;
  std::uint32_t        q = 0;
  std::vector<GenSpec> specs;
  std::size_t          lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream       ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) {
      fields.push_back(f);
    }
    if (fields.empty()) {
      continue;
    }
    auto const where = "line " + std::to_string(lineno) + ": ";
    if (fields[0] == "alphabet") {
      if (fields.size() != 2 || q != 0) {
        throw_invalid(where + "expected a single 'alphabet q' header");
      }
      q = static_cast<std::uint32_t>(std::stoul(fields[1]));
      continue;
    }
    if (q == 0) {
      throw_invalid(where + "'alphabet q' must come first");
    }
    if (fields.size() != 3 + q) {
      throw_invalid(where + "expected name, flag, permutation and " + std::to_string(q) +
                    " sections");
    }
    if (fields[1] != "inv" && fields[1] != "-") {
      throw_invalid(where + "flag must be 'inv' or '-'");
    }
    specs.push_back({fields[0], fields[1] == "inv", fields[2],
                     std::vector<std::string>(fields.begin() + 3, fields.end())});
  }
  if (q == 0 || specs.empty()) {
    throw_invalid("group file declares no alphabet or no generators");
  }
  auto rec = build(q, specs);
  rec.validate_involutions(8);
  return rec;
}

WreathRecursion load_group_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw_not_found("cannot open group file '" + path + "'");
  }
  return read_group_file(in);
}

void write_group_file(std::ostream& out, WreathRecursion const& rec) {
  out << "alphabet " << rec.q() << '\n';
  for (auto const& g : rec.generators()) {
    out << g.name << ' ' << (g.involutive ? "inv" : "-") << ' ' << format_cycles(g.perm);
    for (auto const& s : g.sections) {
      out << ' ' << rec.format(s);
    }
    out << '\n';
  }
}

WreathRecursion resolve_group(std::string const& name_or_path) {
  auto const n = normalise(name_or_path);
  for (auto const& b : builtin_names()) {
    if (b == n) {
      return builtin_group(n);
    }
  }
  if (n == "fabrykowski_gupta" || n == "bg") {
    return builtin_group(n);
  }
  std::ifstream probe(name_or_path);
  if (probe) {
    return read_group_file(probe);
  }
  throw_not_found("unknown group '" + name_or_path + "' (not a zoo name or readable file)");
}

}  // namespace treealg::selfsim
