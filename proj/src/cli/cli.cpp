#include "treealg/cli/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "treealg/error.hpp"

namespace treealg::cli {

std::string underscored(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

exact::FieldSpec parse_field(std::string const& text) { return exact::FieldSpec::parse(text); }

void add_common(CLI::App* sub, Common& c, bool oracle) {
  sub->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--output,-o", c.output, "Also write the report to this file");
  sub->add_flag("--quiet,-q", c.quiet, "Print nothing; only the exit code matters");
  sub->add_option("--jobs,-j", c.jobs, "Number of OpenMP threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Seed for sampled checks, recorded in the report")->capture_default_str();
  sub->add_flag("--serial", c.serial, "Use the serial reference kernels");
  sub->add_option("--expect", c.expect, "Comma-separated expected values, one per report row");
  if (oracle) {
    sub->add_flag("--expect-oracle", c.expect_oracle, "Compare against the closed-form oracle");
  }
}

namespace {

Format format_of(std::string const& s) {
  if (s == "csv") {
    return Format::csv;
  }
  return s == "table" ? Format::table : Format::json;
}

int code_of(ErrorKind k) {
  return k == ErrorKind::resource_limit ? exit_resource : exit_usage;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with self-similar groups and their tree algebras", "treealg"};
  app.require_subcommand(1);
  State st;
  register_group(app, st);
  register_alg(app, st);
  register_present(app, st);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return exit_usage;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return code_of(e.kind());
  }
  if (!st.action) {
    err << "error: no command given\n";
    return exit_usage;
  }

  auto const& c = st.common;
  if (c.jobs > 0) {
    omp_set_num_threads(c.jobs);
  }
  try {
    auto report = st.action();
    report.config()["seed"] = c.seed;
    if (!c.expect.empty()) {
      report.expect_list(c.expect);
    }
    auto const format = format_of(c.format);
    if (!c.output.empty()) {
      std::ofstream file(c.output);
      if (!file) {
        throw_invalid("cannot write " + c.output);
      }
      report.write(file, format);
    }
    if (!c.quiet) {
      report.write(out, format);
    }
    return report.ok() ? exit_ok : exit_mismatch;
  } catch (Error const& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return code_of(e.kind());
  } catch (std::bad_alloc const&) {
    err << "error (resource_limit): out of memory\n";
    return exit_resource;
  }
}

}  // namespace treealg::cli
