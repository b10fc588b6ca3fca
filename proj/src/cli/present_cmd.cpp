#include <memory>

#include "commands.hpp"
#include "treealg/algrep/expr.hpp"
#include "treealg/error.hpp"
#include "treealg/present/presentation.hpp"
#include "treealg/selfsim/zoo.hpp"

namespace treealg::cli {

namespace {

struct PresentOpts {
  std::string              preset;
  std::vector<std::string> relators;
  std::string              group = "grigorchuk";
  std::string              field;
  long                     depth     = 3;
  std::size_t              level_max = 8;
  std::size_t              max_len   = 5;
  std::size_t              level     = 6;
};

present::RelatorSet resolve(PresentOpts const& o) {
  if (!o.preset.empty()) {
    return present::generate_relators(underscored(o.preset), o.depth);
  }
  if (o.relators.empty()) {
    throw_invalid("give --preset or at least one --relator");
  }
  present::RelatorSet          set;
  set.preset = "custom";
  set.group  = o.group;
  set.mode   = o.field.empty() ? present::RelatorMode::group : present::RelatorMode::algebra;
  auto const rec = selfsim::resolve_group(o.group);
  algrep::Algebra const alg(rec, exact::FieldSpec::prime(2));
  algrep::ExprContext const ctx(alg);
  for (auto const& text : o.relators) {
    auto e = ctx.parse(text);
    set.relators.push_back({e, e.to_string(), "given"});
  }
  return set;
}

Report check(PresentOpts const& o, Common const& c) {
  auto const set = resolve(o);
  Report     r("present check");
  r.config()["preset"]    = set.preset;
  r.config()["group"]     = set.group;
  r.config()["mode"]      = set.mode == present::RelatorMode::group ? "group" : "algebra";
  r.config()["depth"]     = o.preset.empty() ? Json(nullptr) : Json(o.depth);
  r.config()["level_max"] = o.level_max;

  auto const rec = selfsim::resolve_group(set.group);
  present::RelatorReport rep;
  if (set.mode == present::RelatorMode::group) {
    r.config()["field"] = nullptr;
    rep = present::check_group_relators(rec, set.relators, o.level_max, c.exec());
  } else {
    auto const field = o.field.empty() ? exact::FieldSpec::prime(set.field_char) : parse_field(o.field);
    r.config()["field"] = field.name();
    algrep::Algebra const     alg(rec, field);
    algrep::ExprContext const ctx(alg);
    rep = present::check_algebra_relators(ctx, set.relators, o.level_max, c.exec());
  }
  r.add_row("relators_checked", o.level_max, rep.checked);
  r.add_row("violations", o.level_max, rep.violations.size());
  Json bad = Json::array();
  for (auto const& v : rep.violations) {
    bad.push_back({{"relator", v.text}, {"first_failing_level", v.level}});
  }
  r.extra()["violations"] = bad;
  if (!rep.ok()) {
    r.fail(std::to_string(rep.violations.size()) + " relators are nontrivial; see details.violations");
  }
  return r;
}

Report list(PresentOpts const& o) {
  auto const  set = present::generate_relators(underscored(o.preset), o.depth);
  std::string text;
  for (auto const& rel : set.relators) {
    text += rel.text + '\n';
  }
  Report r("present list");
  r.set_raw(text);
  return r;
}

std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t l = 1; l <= max_len; ++l) {
    std::vector<std::string> next;
    for (auto const& w : layer) {
      for (char x : std::string("ABCD")) {
        next.push_back(w + x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Report sigma_block(PresentOpts const& o, Common const& c) {
  Report r("present sigma-block");
  r.config()["max_len"] = o.max_len;
  r.config()["level"]   = o.level;
  algrep::Algebra const     alg(selfsim::builtin_group("grigorchuk"), exact::FieldSpec::prime(2));
  algrep::ExprContext const ctx(alg);
  auto const                k     = present::branching_ideal(ctx, o.level, c.exec());
  auto const                words = all_words(o.max_len);

  std::vector<int> status(words.size(), 0);  // 0 outside K, 1 holds, 2 fails
  auto const       one = [&](std::size_t i) {
    if (!k.contains(ctx.evaluate(ctx.parse(words[i]), o.level, linalg::Exec::serial))) {
      return;
    }
    status[i] = present::sigma_block_check(ctx, words[i], o.level, &k).holds ? 1 : 2;
  };
  auto const count = static_cast<std::ptrdiff_t>(words.size());
  if (c.exec() == linalg::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      one(static_cast<std::size_t>(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      one(static_cast<std::size_t>(i));
    }
  }

  std::size_t in_k = 0, holds = 0, exceptional = 0;
  Json        failures = Json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (status[i] == 0) {
      continue;
    }
    ++in_k;
    holds += status[i] == 1 ? 1 : 0;
    exceptional += present::is_exceptional(words[i]) ? 1 : 0;
    if (status[i] == 2) {
      failures.push_back({{"word", words[i]}, {"shape", present::to_string(present::word_shape(words[i]))}});
    }
  }
  r.add_row("words", o.level, words.size());
  r.add_row("in_K", o.level, in_k);
  r.add_row("holds", o.level, holds);
  r.add_row("exceptional_in_K", o.level, exceptional);
  r.extra()["failures"] = failures;
  if (holds != in_k) {
    r.fail(std::to_string(in_k - holds) + " words in K break their block form");
  }
  return r;
}

}  // namespace

void register_present(CLI::App& app, State& st) {
  auto* present = app.add_subcommand("present", "Recursive presentations");
  present->require_subcommand(1);
  auto const o = std::make_shared<PresentOpts>();
  Common&    c = st.common;

  auto* sub = present->add_subcommand("check", "Check relators on levels 0..level-max");
  auto* po  = sub->add_option("--preset", o->preset, "grigorchuk-group, grigorchuk-alg-char2 or grigorchuk-alg-charne2");
  sub->add_option("--relator,-r", o->relators, "A relator; repeat for several")->excludes(po);
  sub->add_option("--group,-g", o->group, "Group of custom relators")->capture_default_str();
  sub->add_option("--field,-F", o->field, "Field; custom relators are group words unless this is given");
  sub->add_option("--depth", o->depth, "Largest power of the substitution")->capture_default_str();
  sub->add_option("--level-max,-n", o->level_max, "Last level checked")->capture_default_str();
  add_common(sub, c, false);
  on_run(sub, st, [o, &c] { return check(*o, c); });

  sub = present->add_subcommand("list", "Print the relators of a preset, one per line");
  sub->add_option("--preset", o->preset, "Relator preset")->required();
  sub->add_option("--depth", o->depth, "Largest power of the substitution")->capture_default_str();
  on_run(sub, st, [o] { return list(*o); });

  sub = present->add_subcommand("sigma-block", "Block forms of sigma(w) for short words w in K");
  sub->add_option("--max-len", o->max_len, "Longest word")->capture_default_str();
  sub->add_option("--level,-n", o->level, "Tree level, at least 2")->capture_default_str();
  add_common(sub, c, false);
  on_run(sub, st, [o, &c] { return sigma_block(*o, c); });
}

}  // namespace treealg::cli
