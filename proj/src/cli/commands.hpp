#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <string>

#include "report.hpp"
#include "treealg/exact/field.hpp"
#include "treealg/linalg/bits.hpp"

namespace treealg::cli {

// Flags shared by every leaf command. Only one leaf runs per process, so
// they all bind to the same storage.
struct Common {
  std::string   format = "json";
  std::string   output;
  bool          quiet         = false;
  int           jobs          = 0;
  std::uint64_t seed          = 42;
  bool          serial        = false;
  std::string   expect;
  bool          expect_oracle = false;

  linalg::Exec exec() const { return serial ? linalg::Exec::serial : linalg::Exec::parallel; }
};

struct State {
  Common                  common;
  std::function<Report()> action;
};

void add_common(CLI::App* sub, Common& c, bool oracle);

// The leaf callback: remembers the work so that errors surface after parsing.
template <class F>
void on_run(CLI::App* sub, State& st, F f) {
  sub->callback([&st, f] { st.action = f; });
}

// Dashes and underscores are interchangeable in names.
std::string underscored(std::string s);
exact::FieldSpec parse_field(std::string const& text);

void register_group(CLI::App& app, State& st);
void register_alg(CLI::App& app, State& st);
void register_present(CLI::App& app, State& st);

}  // namespace treealg::cli
