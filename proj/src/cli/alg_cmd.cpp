#include <memory>
#include <sstream>

#include "commands.hpp"
#include "treealg/algrep/closure.hpp"
#include "treealg/algrep/expr.hpp"
#include "treealg/algrep/nil.hpp"
#include "treealg/error.hpp"
#include "treealg/formulas/formulas.hpp"
#include "treealg/selfsim/zoo.hpp"

namespace treealg::cli {

using algrep::Algebra;
using algrep::AlgebraElement;
using algrep::ExprContext;

namespace {

struct AlgOpts {
  std::string   group = "grigorchuk";
  std::string   field = "gf2";
  bool          field_given = false;
  std::size_t   level       = 1;
  std::size_t   level_cap   = 0;
  std::size_t   start_level = 0;
  std::size_t   dmax        = 12;
  std::string   mode        = "ball";
  std::string   norm        = "closure";
  std::string   gens;
  std::string   preset;
  std::string   report = "codim,k2,m2k";
  std::string   element;
  std::string   lhs;
  std::string   rhs;
  std::uint64_t max_power = 16;
  std::uint64_t kmax      = 16;
  std::size_t   degree    = 1;
  std::size_t   trials    = 0;
  std::size_t   max_len   = 10;
  std::uint64_t power     = 8;
  std::size_t   level_min = 2;
};

struct Setup {
  Algebra     alg;
  ExprContext ctx;

  explicit Setup(AlgOpts const& o)
      : alg(selfsim::resolve_group(o.group), parse_field(o.field)), ctx(alg) {}

  AlgebraElement element(std::string const& text) const { return ctx.expand(ctx.parse(text)); }

  std::vector<AlgebraElement> list(std::string const& text) const {
    std::vector<AlgebraElement> out;
    std::stringstream           ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      out.push_back(element(item));
    }
    return out;
  }
};

Report start(std::string command, AlgOpts const& o, Setup const& s) {
  Report r("alg " + std::move(command));
  r.config()["group"] = o.group;
  r.config()["field"] = s.alg.field().name();
  return r;
}

formulas::CharClass char_class(Setup const& s) {
  return s.alg.field().characteristic() == 2 ? formulas::CharClass::two : formulas::CharClass::other;
}

void require_grigorchuk(AlgOpts const& o) {
  if (underscored(o.group) != "grigorchuk") {
    throw_not_found("no closed form for the algebra of '" + o.group + "'");
  }
}

Report dim(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r   = start("dim", o, s);
  auto const  cap = o.level_cap == 0 ? algrep::default_level_cap(s.alg.field()) : o.level_cap;
  r.config()["level"]     = o.level;
  r.config()["level_cap"] = cap;
  auto const row = r.add_row("dim", o.level, algrep::algebra_dimension(s.alg, o.level, cap, c.exec()));
  if (c.expect_oracle) {
    require_grigorchuk(o);
    r.check(row, "oracle", exact::to_string(formulas::expected_algebra_dim(char_class(s), o.level)));
  }
  return r;
}

Report hausdorff(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("hausdorff", o, s);
  if (o.norm != "matrix" && o.norm != "closure") {
    throw_invalid("--norm is matrix or closure");
  }
  auto const norm = o.norm == "matrix" ? algrep::HausdorffNorm::matrix : algrep::HausdorffNorm::closure;
  r.config()["levels"] = o.level;
  r.config()["norm"]   = o.norm;
  if (c.expect_oracle) {
    require_grigorchuk(o);
    if (norm != algrep::HausdorffNorm::closure) {
      throw_invalid("the oracle sequence uses --norm closure");
    }
  }
  auto const seq = algrep::algebra_hausdorff_sequence(s.alg, o.level, norm, c.exec());
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    auto const row = r.add_row("relative_dim", n, big(seq[n - 1]));
    if (!c.expect_oracle) {
      continue;
    }
    try {
      r.check(row, "oracle", exact::to_string(formulas::expected_algebra_hausdorff_term(char_class(s), n)));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::invalid_argument) {
        throw;
      }
    }
  }
  if (c.expect_oracle) {
    auto const name = char_class(s) == formulas::CharClass::two ? "grigorchuk_alg_char2" : "grigorchuk_alg_charne2";
    r.extra()["limit"] = exact::to_string(formulas::expected_hausdorff(name));
  }
  return r;
}

// x - 1 for every generator when the characteristic equals the degree,
// the generators themselves otherwise.
std::vector<AlgebraElement> default_letters(Algebra const& alg) {
  std::vector<AlgebraElement> out;
  bool const augmented = alg.field().characteristic() == alg.q();
  for (std::uint32_t i = 0; i < alg.recursion().rank(); ++i) {
    out.push_back(augmented ? alg.generator(i) - alg.one() : alg.generator(i));
  }
  return out;
}

Report filtration(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("filtration", o, s);
  if (o.mode != "ball" && o.mode != "power") {
    throw_invalid("--mode is ball or power");
  }
  algrep::FiltrationOptions opts;
  opts.mode        = o.mode == "ball" ? algrep::FiltrationMode::ball : algrep::FiltrationMode::power;
  opts.start_level = o.start_level == 0 ? 3 : o.start_level;
  opts.level_cap   = o.level_cap == 0 ? algrep::default_filtration_cap : o.level_cap;
  opts.exec        = c.exec();
  auto const gens  = o.gens.empty() ? default_letters(s.alg) : s.list(o.gens);
  r.config()["mode"]        = o.mode;
  r.config()["generators"]  = o.gens.empty() ? "default" : o.gens;
  r.config()["dmax"]        = o.dmax;
  r.config()["start_level"] = opts.start_level;
  r.config()["level_cap"]   = opts.level_cap;

  auto const rep = algrep::filtration_dims(s.alg, gens, o.dmax, opts);
  if (!rep.stable) {
    r.set_partial(true);
    r.note("not stable by the level cap " + std::to_string(opts.level_cap) + "; values are lower bounds");
  }
  std::size_t total = 0;
  for (std::size_t d = 0; d < rep.a.size(); ++d) {
    // earliest level from which a_d no longer changes
    std::size_t from = rep.per_level.size() - 1;
    while (from > 0 && rep.per_level[from - 1][d] == rep.a[d]) {
      --from;
    }
    std::optional<std::size_t> stab;
    if (rep.stable) {
      stab = rep.start_level + from;
    }
    total += rep.a[d];
    auto const row = r.add_row("a_" + std::to_string(d), rep.level, rep.a[d], stab);
    if (!c.expect_oracle) {
      continue;
    }
    require_grigorchuk(o);
    if (char_class(s) == formulas::CharClass::two) {
      r.check(row, "oracle", exact::to_string(formulas::expected_a_char2(d)));
    } else if (d >= 1) {
      r.check(row, "oracle", exact::to_string(formulas::expected_a_charne2(d)));
    }
  }
  r.extra()["cumulative_dim"] = total;
  r.extra()["per_level"]      = rep.per_level;
  return r;
}

std::vector<std::string> split(std::string const& text) {
  std::vector<std::string> out;
  std::stringstream        ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(item);
  }
  return out;
}

Report ideal(AlgOpts o, Common const& c) {
  std::string gens = o.gens;
  if (!o.preset.empty()) {
    auto const p = underscored(o.preset);
    if (p == "branching_char2") {
      gens = "ADA,AB,BA";
      o.field = o.field_given ? o.field : "gf2";
    } else if (p == "branching_charne2") {
      gens = "ab-ba";
      o.field = o.field_given ? o.field : "gf3";
    } else {
      throw_not_found("unknown ideal preset '" + o.preset + "'");
    }
  }
  if (gens.empty()) {
    throw_invalid("give --preset or --gens");
  }
  Setup const s(o);
  auto        r     = start("ideal", o, s);
  auto const  first = o.start_level == 0 ? 3 : o.start_level;
  r.config()["generators"]  = gens;
  r.config()["start_level"] = first;
  r.config()["level_cap"]   = o.level_cap == 0 ? algrep::default_level_cap(s.alg.field()) : o.level_cap;

  auto const rep = algrep::ideal_quotient_dims(s.alg, s.list(gens), first, o.level_cap, c.exec());
  if (!rep.stable) {
    r.set_partial(true);
    r.note("two consecutive levels never agreed up to level " + std::to_string(rep.level));
  }
  std::optional<std::size_t> stab;
  if (rep.stable) {
    stab = rep.level;
  }
  std::optional<formulas::BranchingQuotients> want;
  if (c.expect_oracle) {
    require_grigorchuk(o);
    want = formulas::expected_branching_quotients(char_class(s));
  }
  for (auto const& q : split(o.report)) {
    if (q == "codim") {
      auto const row = r.add_row("codim", rep.level, rep.codim, stab);
      if (want) {
        r.check(row, "oracle", std::to_string(want->codim));
      }
    } else if (q == "k2") {
      auto const row = r.add_row("dim_K_over_K2", rep.level, rep.k_over_k2, stab);
      if (want && want->k_over_k2) {
        r.check(row, "oracle", std::to_string(*want->k_over_k2));
      }
    } else if (q == "m2k") {
      auto const row = r.add_row("dim_K_over_MXK", rep.level, rep.k_over_mxk, stab);
      if (want) {
        r.check(row, "oracle", std::to_string(want->k_over_m2k));
      }
    } else {
      throw_invalid("--report takes codim, k2 and m2k");
    }
  }
  Json levels = Json::array();
  for (auto const& l : rep.per_level) {
    levels.push_back({{"level", l.level},
                      {"algebra_dim", l.algebra_dim},
                      {"ideal_dim", l.ideal_dim},
                      {"square_dim", l.square_dim},
                      {"block_dim", l.block_dim},
                      {"block_inside", l.block_inside}});
  }
  r.extra()["per_level"]    = levels;
  r.extra()["block_inside"] = rep.block_inside;
  return r;
}

Json optional_json(std::optional<std::uint64_t> v) { return v ? Json(*v) : Json(nullptr); }

Report nil(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r   = start("nil", o, s);
  auto const  cap = o.level_cap == 0 ? algrep::nil_level_cap(s.alg.field()) : o.level_cap;
  r.config()["element"]   = o.element;
  r.config()["max_power"] = o.max_power;
  r.config()["level_cap"] = cap;
  auto const rep = algrep::nil_degree(s.alg, s.element(o.element), o.max_power, cap, c.exec());
  std::optional<std::size_t> stab;
  if (rep.degree) {
    stab = rep.stable_level;
  }
  r.add_row("nil_degree", cap, optional_json(rep.degree), stab);
  Json per = Json::array();
  for (auto const& d : rep.per_level) {
    per.push_back(optional_json(d));
  }
  r.extra()["per_level"] = per;
  if (!rep.degree) {
    r.note("x^" + std::to_string(o.max_power) + " is nonzero at some level up to " + std::to_string(cap));
  }
  return r;
}

Report check_product(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("check-product", o, s);
  r.config()["lhs"]       = o.lhs;
  r.config()["rhs"]       = o.rhs;
  r.config()["level_max"] = o.level;
  auto const rep = algrep::product_identity_check(s.alg, s.element(o.lhs), s.element(o.rhs), o.level, c.exec());
  r.add_row("identity_holds", o.level, rep.holds);
  if (!rep.holds) {
    r.fail("the two sides differ at level " + std::to_string(*rep.first_failure));
  }
  return r;
}

Report distinct(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("distinct-powers", o, s);
  auto const  cap = o.level_cap == 0 ? 12 : o.level_cap;
  r.config()["element"]   = o.element;
  r.config()["kmax"]      = o.kmax;
  r.config()["level_cap"] = cap;
  auto const n = algrep::distinct_powers(s.alg, s.element(o.element), o.kmax, cap, c.exec());
  r.add_row("first_separating_level", std::nullopt, n ? Json(*n) : Json(nullptr));
  if (!n) {
    r.fail("the powers 0.." + std::to_string(o.kmax) + " collide at every level up to " + std::to_string(cap));
  }
  return r;
}

Report graded(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("graded-nil", o, s);
  r.config()["degree"]    = o.degree;
  r.config()["trials"]    = o.trials;
  r.config()["level_cap"] = o.level_cap;
  auto const rep = algrep::graded_nil_sample(s.alg, o.degree, o.trials, c.seed, o.level_cap, c.exec());
  r.add_row("trials", std::nullopt, rep.trials);
  r.add_row("passed", std::nullopt, rep.passed);
  r.add_row("max_observed_degree", std::nullopt, rep.max_observed);
  r.extra()["observed"] = rep.observed;
  r.extra()["failures"] = rep.failures;
  if (rep.passed != rep.trials) {
    r.fail(std::to_string(rep.trials - rep.passed) + " sampled elements are not nil within 72 * degree");
  }
  return r;
}

Report monomials(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r = start("monomials", o, s);
  r.config()["max_len"] = o.max_len;
  r.config()["power"]   = o.power;
  r.config()["level"]   = o.level;
  auto const rep = algrep::monomial_nil_survey(s.alg, o.max_len, o.power, o.level, c.exec());
  r.add_row("words", o.level, rep.words);
  r.add_row("nil", o.level, rep.nil);
  r.add_row("zero_words", o.level, rep.zero_words);
  r.add_row("max_degree", o.level, rep.max_degree);
  r.extra()["failures"] = rep.failures;
  if (rep.nil != rep.words) {
    r.fail(std::to_string(rep.words - rep.nil) + " words survive the power " + std::to_string(o.power));
  }
  return r;
}

Report relation(AlgOpts const& o, Common const& c) {
  Setup const s(o);
  auto        r     = start("relation", o, s);
  auto const  ideal = o.gens.empty() ? std::string("ADA,AB,BA") : o.gens;
  r.config()["ideal"] = ideal;
  r.config()["lhs"]   = o.lhs;
  r.config()["rhs"]   = o.rhs;
  r.config()["level"] = o.level;
  algrep::BranchSetup const setup{s.alg, default_letters(s.alg), s.list(ideal)};
  auto const lhs = algrep::SubspaceSpec::parse(o.lhs);
  auto const rhs = algrep::SubspaceSpec::parse(o.rhs);
  auto const rel = algrep::subspace_relation(setup, lhs, rhs, o.level, c.exec());
  r.add_row(lhs.to_string() + " vs " + rhs.to_string(), o.level, algrep::to_string(rel));
  return r;
}

Report blocks(AlgOpts const& o) {
  Setup const s(o);
  auto        r = start("blocks", o, s);
  r.config()["level_min"] = o.level_min;
  r.config()["level_max"] = o.level;
  for (std::size_t n = o.level_min; n <= o.level; ++n) {
    for (auto const& id : algrep::branch_block_identity(s.alg, n)) {
      r.add_row(id.lhs + " = E11(" + id.rhs + ")", n, id.printed);
      r.add_row(id.lhs + " corner = " + id.rhs, n, id.corner);
      if (!id.printed) {
        r.fail(id.lhs + " differs from the single-block form at level " + std::to_string(n));
      }
    }
  }
  return r;
}

}  // namespace

void register_alg(CLI::App& app, State& st) {
  auto* alg = app.add_subcommand("alg", "Level images of the group algebra");
  alg->require_subcommand(1);
  auto const o = std::make_shared<AlgOpts>();
  Common&    c = st.common;

  auto const leaf = [&](char const* name, char const* help, bool oracle) {
    auto* sub = alg->add_subcommand(name, help);
    sub->add_option("--group,-g", o->group, "Zoo name or group file")->capture_default_str();
    sub->add_option("--field,-F", o->field, "gf2, gf3, GF(5), q, ...")
        ->capture_default_str()
        ->each([o](std::string const&) { o->field_given = true; });
    add_common(sub, c, oracle);
    return sub;
  };

  auto* sub = leaf("dim", "Dimension of the level-n image", true);
  sub->add_option("--level,-n", o->level, "Tree level")->required();
  sub->add_option("--level-cap", o->level_cap, "Largest level allowed (0: field default)");
  on_run(sub, st, [o, &c] { return dim(*o, c); });

  sub = leaf("hausdorff", "Relative dimensions for levels 1..n", true);
  sub->add_option("--levels,-n", o->level, "Largest level")->required();
  sub->add_option("--norm", o->norm, "matrix or closure")->capture_default_str();
  on_run(sub, st, [o, &c] { return hausdorff(*o, c); });

  sub = leaf("filtration", "Growth of the ball or power filtration", true);
  sub->add_option("--dmax,-d", o->dmax, "Largest filtration degree")->capture_default_str();
  sub->add_option("--mode", o->mode, "ball or power")->capture_default_str();
  sub->add_option("--gens", o->gens, "Comma-separated generators (default: x-1 in characteristic q, else x)");
  sub->add_option("--start-level", o->start_level, "First level tried (0: 3)");
  sub->add_option("--level-cap", o->level_cap, "Last level tried (0: 8)");
  on_run(sub, st, [o, &c] { return filtration(*o, c); });

  sub = leaf("ideal", "Codimension and quotients of a two-sided ideal", true);
  sub->add_option("--preset", o->preset, "branching-char2 or branching-charne2");
  sub->add_option("--gens", o->gens, "Comma-separated ideal generators");
  sub->add_option("--report", o->report, "Quantities among codim, k2, m2k")->capture_default_str();
  sub->add_option("--start-level", o->start_level, "First level tried (0: 3)");
  sub->add_option("--level-cap", o->level_cap, "Last level tried (0: field default)");
  on_run(sub, st, [o, &c] { return ideal(*o, c); });

  sub = leaf("nil", "Nilpotency degree of an element on levels 1..cap", false);
  sub->add_option("--element,-e", o->element, "Element expression, e.g. \"A*B\"")->required();
  sub->add_option("--max-power", o->max_power, "Largest power tried")->capture_default_str();
  sub->add_option("--level-cap", o->level_cap, "Last level (0: 8, or 5 over Q)");
  on_run(sub, st, [o, &c] { return nil(*o, c); });

  sub = leaf("check-product", "Check lhs = rhs on levels 0..n", false);
  sub->add_option("--lhs", o->lhs, "Left-hand side")->required();
  sub->add_option("--rhs", o->rhs, "Right-hand side")->required();
  sub->add_option("--levels,-n", o->level, "Largest level")->required();
  on_run(sub, st, [o, &c] { return check_product(*o, c); });

  sub = leaf("distinct-powers", "First level on which x^0..x^k are distinct", false);
  sub->add_option("--element,-e", o->element, "Element expression")->required();
  sub->add_option("--kmax", o->kmax, "Largest power")->capture_default_str();
  sub->add_option("--level-cap", o->level_cap, "Last level (0: 12)");
  on_run(sub, st, [o, &c] { return distinct(*o, c); });

  sub = leaf("graded-nil", "Nil check of homogeneous elements in A, B, D", false);
  sub->add_option("--degree", o->degree, "Degree 1, 2 or 3")->capture_default_str();
  sub->add_option("--trials", o->trials, "Random samples (0: all seven of degree 1)")->capture_default_str();
  sub->add_option("--level-cap", o->level_cap, "Last level (0: 8)");
  on_run(sub, st, [o, &c] { return graded(*o, c); });

  sub = leaf("monomials", "Exhaustive nil survey of monomials in A, B, C, D", false);
  sub->add_option("--max-len", o->max_len, "Longest word")->capture_default_str();
  sub->add_option("--power", o->power, "Power that must vanish (a power of two)")->capture_default_str();
  sub->add_option("--level,-n", o->level, "Tree level")->required();
  on_run(sub, st, [o, &c] { return monomials(*o, c); });

  sub = leaf("relation", "Inclusion between filtration subspaces", false);
  sub->add_option("--lhs", o->lhs, "varpi^d, K^d or M_{X^k}(K)")->required();
  sub->add_option("--rhs", o->rhs, "varpi^d, K^d or M_{X^k}(K)")->required();
  sub->add_option("--ideal", o->gens, "Generators of K (default ADA,AB,BA)");
  sub->add_option("--level,-n", o->level, "Tree level")->required();
  on_run(sub, st, [o, &c] { return relation(*o, c); });

  sub = leaf("blocks", "Block forms of CACAC, CADA and ADAC", false);
  sub->add_option("--level-min", o->level_min, "First level")->capture_default_str();
  sub->add_option("--level-max,-n", o->level, "Last level")->required();
  on_run(sub, st, [o] { return blocks(*o); });
}

}  // namespace treealg::cli
