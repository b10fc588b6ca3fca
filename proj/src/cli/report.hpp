#pragma once

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treealg/exact/bigint.hpp"

namespace treealg::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, table };

struct Row {
  std::string                quantity;
  std::optional<std::size_t> level;
  Json                       value;
  std::optional<std::size_t> stabilization_level;
};

struct Check {
  std::string                quantity;
  std::optional<std::size_t> level;
  std::string                source;  // "oracle" or "expect"
  std::string                expected;
  std::string                actual;
  bool                       pass = false;
};

class Report {
 public:
  explicit Report(std::string command) : _command(std::move(command)) {}

  Json&       config() { return _config; }
  std::size_t add_row(std::string quantity, std::optional<std::size_t> level, Json value,
                      std::optional<std::size_t> stabilization = std::nullopt);
  std::vector<Row> const& rows() const noexcept { return _rows; }

  // Compares rows[i] against a value.
  void check(std::size_t row, std::string source, std::string expected);
  // --expect: positional against every row.
  void expect_list(std::string const& list);

  void set_partial(bool p) { _partial = _partial || p; }
  // A computed check (relator, identity, certificate) did not hold.
  void fail(std::string note);
  void note(std::string text) { _notes.push_back(std::move(text)); }
  Json& extra() { return _extra; }
  // Printed verbatim instead of the formatted report.
  void set_raw(std::string text) { _raw = std::move(text); }

  bool ok() const;
  Json to_json() const;
  void write(std::ostream& out, Format format) const;

 private:
  std::string              _command;
  Json                     _config = Json::object();
  std::vector<Row>         _rows;
  std::vector<Check>       _checks;
  Json                     _extra = Json::object();
  std::vector<std::string> _notes;
  std::optional<std::string> _raw;
  bool                     _partial = false;
  bool                     _failed  = false;
};

// A JSON value rendered without quotes for strings.
std::string plain(Json const& v);
Json        big(exact::BigInt const& v);
Json        big(exact::Rational const& v);

}  // namespace treealg::cli
