#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "treealg/error.hpp"

namespace treealg::cli {

std::string plain(Json const& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  return v.dump();
}

Json big(exact::BigInt const& v) { return exact::to_string(v); }
Json big(exact::Rational const& v) { return exact::to_string(v); }

std::size_t Report::add_row(std::string quantity, std::optional<std::size_t> level, Json value,
                            std::optional<std::size_t> stabilization) {
  _rows.push_back({std::move(quantity), level, std::move(value), stabilization});
  return _rows.size() - 1;
}

void Report::check(std::size_t row, std::string source, std::string expected) {
  auto const& r      = _rows.at(row);
  auto        actual = plain(r.value);
  bool const  pass   = actual == expected;
  _checks.push_back({r.quantity, r.level, std::move(source), std::move(expected), std::move(actual), pass});
}

void Report::expect_list(std::string const& list) {
  std::vector<std::string> values;
  std::stringstream        ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    values.push_back(item);
  }
  if (values.size() != _rows.size()) {
    throw_invalid("--expect lists " + std::to_string(values.size()) + " values but the report has " +
                  std::to_string(_rows.size()) + " rows");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    check(i, "expect", values[i]);
  }
}

void Report::fail(std::string note) {
  _failed = true;
  _notes.push_back(std::move(note));
}

bool Report::ok() const {
  return !_failed && std::all_of(_checks.begin(), _checks.end(), [](Check const& c) { return c.pass; });
}

namespace {

Json optional_level(std::optional<std::size_t> l) { return l ? Json(*l) : Json(nullptr); }

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = _command;
  j["config"]  = _config;
  j["rows"]    = Json::array();
  for (auto const& r : _rows) {
    Json row;
    row["quantity"]            = r.quantity;
    row["level"]               = optional_level(r.level);
    row["value"]               = r.value;
    row["stabilization_level"] = optional_level(r.stabilization_level);
    j["rows"].push_back(row);
  }
  j["checks"] = Json::array();
  for (auto const& c : _checks) {
    Json check;
    check["quantity"] = c.quantity;
    check["level"]    = optional_level(c.level);
    check["source"]   = c.source;
    check["expected"] = c.expected;
    check["actual"]   = c.actual;
    check["pass"]     = c.pass;
    j["checks"].push_back(check);
  }
  if (!_extra.empty()) {
    j["details"] = _extra;
  }
  j["notes"]   = _notes;
  j["partial"] = _partial;
  j["status"]  = ok() ? "ok" : "mismatch";
  return j;
}

namespace {

std::string level_text(std::optional<std::size_t> l) { return l ? std::to_string(*l) : ""; }

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? "\"\"" : std::string(1, c);
  }
  return out + "\"";
}

void table(std::ostream& out, std::vector<std::vector<std::string>> const& cells) {
  std::vector<std::size_t> width;
  for (auto const& row : cells) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (auto const& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i]) + (i + 1 < row.size() ? 2 : 0)) << row[i];
    }
    out << '\n';
  }
}

}  // namespace

void Report::write(std::ostream& out, Format format) const {
  if (_raw) {
    out << *_raw;
    return;
  }
  switch (format) {
    case Format::json:
      out << to_json().dump(2) << '\n';
      return;
    case Format::csv:
      out << "quantity,level,value,stabilization_level\n";
      for (auto const& r : _rows) {
        out << csv_field(r.quantity) << ',' << level_text(r.level) << ',' << csv_field(plain(r.value)) << ','
            << level_text(r.stabilization_level) << '\n';
      }
      return;
    case Format::table: {
      out << _command << '\n';
      std::vector<std::vector<std::string>> cells{{"quantity", "level", "value", "stable at"}};
      for (auto const& r : _rows) {
        cells.push_back({r.quantity, level_text(r.level), plain(r.value), level_text(r.stabilization_level)});
      }
      table(out, cells);
      if (!_checks.empty()) {
        std::vector<std::vector<std::string>> cc{{"check", "level", "expected", "actual", ""}};
        for (auto const& c : _checks) {
          cc.push_back({c.source + ":" + c.quantity, level_text(c.level), c.expected, c.actual,
                        c.pass ? "pass" : "FAIL"});
        }
        table(out, cc);
      }
      for (auto const& n : _notes) {
        out << "note: " << n << '\n';
      }
      if (_partial) {
        out << "partial: not level-stable within the cap\n";
      }
      out << "status: " << (ok() ? "ok" : "mismatch") << '\n';
      return;
    }
  }
}

}  // namespace treealg::cli
