#include <memory>
#include <sstream>

#include "commands.hpp"
#include "treealg/error.hpp"
#include "treealg/formulas/formulas.hpp"
#include "treealg/permgrp/levels.hpp"
#include "treealg/selfsim/contraction.hpp"
#include "treealg/selfsim/zoo.hpp"

namespace treealg::cli {

namespace {

struct GroupOpts {
  std::string   group;
  std::size_t   level      = 1;
  std::uint64_t degree_cap = permgrp::default_degree_cap;
  std::string   word;
  std::uint32_t p = 2;
  std::string   lambda = "1/2";
  std::size_t   depth  = 1;
  std::uint64_t K      = 1;
  std::size_t   max_len = 12;
  std::string   vertex;
  std::size_t   radius = 8;
};

CLI::App* leaf(CLI::App* parent, State& st, char const* name, char const* help, GroupOpts& o, bool oracle) {
  auto* sub = parent->add_subcommand(name, help);
  sub->add_option("--group,-g", o.group, "Zoo name or group file")->required();
  add_common(sub, st.common, oracle);
  return sub;
}

Report start(std::string command, GroupOpts const& o) {
  Report r("group " + std::move(command));
  r.config()["group"] = o.group;
  return r;
}

// Zoo names go through the oracle under their canonical spelling; group
// files have no closed form.
std::string oracle_name(std::string const& g) { return underscored(g); }

Report order(GroupOpts const& o, Common const& c) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("order", o);
  r.config()["level"]      = o.level;
  r.config()["degree_cap"] = o.degree_cap;
  auto const value = permgrp::group_order_at_level(rec, o.level, o.degree_cap);
  auto const row   = r.add_row("order", o.level, big(value));
  if (c.expect_oracle) {
    r.check(row, "oracle", exact::to_string(formulas::expected_group_order(oracle_name(o.group), o.level)));
  }
  return r;
}

Report transitive(GroupOpts const& o) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("transitive", o);
  r.config()["level"] = o.level;
  for (std::size_t n = 1; n <= o.level; ++n) {
    r.add_row("level_transitive", n, permgrp::is_level_transitive(rec, n));
  }
  return r;
}

Report element_order(GroupOpts const& o) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("element-order", o);
  r.config()["word"]  = o.word;
  r.config()["level"] = o.level;
  auto const w = rec.parse_word(o.word);
  r.add_row("element_order", o.level, big(permgrp::element_order_at_level(rec, w, o.level)));
  return r;
}

Report hausdorff(GroupOpts const& o, Common const& c) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("hausdorff", o);
  r.config()["p"]      = o.p;
  r.config()["levels"] = o.level;
  if (c.expect_oracle && o.p != rec.q()) {
    throw_invalid("the oracle sequence is relative to p = " + std::to_string(rec.q()));
  }
  auto const seq = permgrp::group_hausdorff_sequence(rec, o.p, o.level, o.degree_cap);
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    auto const row = r.add_row("relative_dim", n, big(seq[n - 1]));
    if (!c.expect_oracle) {
      continue;
    }
    try {
      r.check(row, "oracle",
              exact::to_string(formulas::expected_group_hausdorff_term(oracle_name(o.group), n)));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::invalid_argument) {
        throw;
      }
    }
  }
  if (c.expect_oracle) {
    r.extra()["limit"] = exact::to_string(formulas::expected_hausdorff(oracle_name(o.group)));
  }
  return r;
}

Report contraction(GroupOpts const& o) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("contraction", o);
  r.config()["lambda"]  = o.lambda;
  r.config()["depth"]   = o.depth;
  r.config()["K"]       = o.K;
  r.config()["max_len"] = o.max_len;
  exact::Rational lambda;
  try {
    lambda = exact::Rational(o.lambda);
    lambda.canonicalize();
  } catch (std::invalid_argument const&) {
    throw_invalid("lambda must be a fraction such as 1/2");
  }
  auto const rep = selfsim::contraction_certificate(rec, {lambda, o.depth, o.K}, o.max_len);
  r.add_row("words_checked", std::nullopt, rep.words_checked);
  r.add_row("certificate", std::nullopt, rep.pass);
  r.extra()["shortening_pairs"] = rep.shortening_pairs;
  if (rep.worst) {
    auto const& w = *rep.worst;
    r.extra()["worst"] = {{"word", rec.format(w.word)},
                          {"vertex", selfsim::format_vertex(w.vertex)},
                          {"section", rec.format(w.section)},
                          {"word_length", w.word_length},
                          {"section_length", w.section_length}};
  }
  if (!rep.pass) {
    r.fail("the contraction inequality fails; see details.worst");
  }
  return r;
}

Report orbit_growth(GroupOpts const& o) {
  auto const rec = selfsim::resolve_group(o.group);
  auto       r   = start("orbit-growth", o);
  auto const v   = o.vertex.empty() ? selfsim::Vertex(o.level, 0) : selfsim::parse_vertex(o.vertex, rec.q());
  r.config()["vertex"] = selfsim::format_vertex(v);
  r.config()["radius"] = o.radius;
  auto const f         = selfsim::orbit_growth(rec, v, o.radius);
  for (std::size_t n = 0; n < f.size(); ++n) {
    r.add_row("orbit_size_radius_" + std::to_string(n), v.size(), f[n]);
  }
  return r;
}

}  // namespace

void register_group(CLI::App& app, State& st) {
  auto* group = app.add_subcommand("group", "Level actions of self-similar groups");
  group->require_subcommand(1);
  auto const o = std::make_shared<GroupOpts>();
  Common&    c = st.common;

  auto* sub = leaf(group, st, "order", "Order of the level-n quotient", *o, true);
  sub->add_option("--level,-n", o->level, "Tree level")->required();
  sub->add_option("--degree-cap", o->degree_cap, "Largest permutation degree q^n")->capture_default_str();
  on_run(sub, st, [o, &c] { return order(*o, c); });

  sub = leaf(group, st, "transitive", "Level transitivity on levels 1..n", *o, false);
  sub->add_option("--level,-n", o->level, "Largest level")->required();
  on_run(sub, st, [o] { return transitive(*o); });

  sub = leaf(group, st, "element-order", "Order of a word acting on level n", *o, false);
  sub->add_option("--word,-w", o->word, "Group word, e.g. \"ab\" or \"a b'\"")->required();
  sub->add_option("--level,-n", o->level, "Tree level")->required();
  on_run(sub, st, [o] { return element_order(*o); });

  sub = leaf(group, st, "hausdorff", "Relative log-orders for levels 1..n", *o, true);
  sub->add_option("--p", o->p, "Prime for the logarithm")->capture_default_str();
  sub->add_option("--levels,-n", o->level, "Largest level")->required();
  sub->add_option("--degree-cap", o->degree_cap, "Largest permutation degree q^n")->capture_default_str();
  on_run(sub, st, [o, &c] { return hausdorff(*o, c); });

  sub = leaf(group, st, "contraction", "Contraction certificate over short words", *o, false);
  sub->add_option("--lambda", o->lambda, "Contraction ratio")->capture_default_str();
  sub->add_option("--depth", o->depth, "Level of the sections")->capture_default_str();
  sub->add_option("--K", o->K, "Additive constant")->capture_default_str();
  sub->add_option("--max-len", o->max_len, "Longest word checked")->capture_default_str();
  on_run(sub, st, [o] { return contraction(*o); });

  sub = leaf(group, st, "orbit-growth", "Orbit sizes of a vertex under balls of the generators", *o, false);
  auto* vo = sub->add_option("--vertex", o->vertex, "Vertex, 1-based letters separated by spaces");
  sub->add_option("--level,-n", o->level, "Use the vertex 1...1 of this length")->excludes(vo);
  sub->add_option("--radius", o->radius, "Largest ball radius")->capture_default_str();
  on_run(sub, st, [o] { return orbit_growth(*o); });

  auto* ex = group->add_subcommand("export", "Print the group in the text file format");
  ex->add_option("--group,-g", o->group, "Zoo name or group file")->required();
  ex->callback([o, &st] {
    st.action = [o] {
      auto const         rec = selfsim::resolve_group(o->group);
      std::ostringstream text;
      selfsim::write_group_file(text, rec);
      Report r("group export");
      r.config()["group"] = o->group;
      r.set_raw(text.str());
      return r;
    };
  });
}

}  // namespace treealg::cli
