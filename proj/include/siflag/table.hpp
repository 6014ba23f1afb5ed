#pragma once

#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "siflag/kostant.hpp"
#include "siflag/stalkcheck.hpp"

namespace siflag {

/// One table cell: the structured value (JSON output) and its plain-text rendering (CSV output).
struct Cell {
  nlohmann::ordered_json value;
  std::string text;

  Cell() = default;
  Cell(nlohmann::ordered_json v, std::string t) : value(std::move(v)), text(std::move(t)) {}
  Cell(Int v) : value(v), text(std::to_string(v)) {}  // NOLINT
  Cell(std::string s) : value(s), text(std::move(s)) {}  // NOLINT
  Cell(const char* s) : Cell(std::string(s)) {}  // NOLINT

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class TableFormat { csv, json };

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string emit_table(const Table& t, TableFormat fmt) {
  for (const auto& row : t.rows)
    if (row.size() != t.header.size()) throw Error("emit_table: row width does not match header");
  if (fmt == TableFormat::csv) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].text);
      os << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json j;
  j["columns"] = t.header;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[t.header[i]] = row[i].value;
    j["rows"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

/// Reads the JSON form back. Cell text is not stored in JSON, so it is rebuilt from the value.
inline Table parse_table_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("columns") || !j.contains("rows")) throw ParseError("table JSON needs 'columns' and 'rows'");
  Table t;
  t.header = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& h : t.header) {
      if (!r.contains(h)) throw ParseError("table JSON row lacks column '" + h + "'");
      const auto& v = r.at(h);
      row.emplace_back(v, v.is_string() ? v.get<std::string>() : v.dump());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Computes f(0..n-1) on up to `threads` workers and returns results in index order.
template <class F>
auto parallel_rows(std::size_t n, F f, unsigned threads = std::thread::hardware_concurrency()) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  if (threads <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < n; i += threads) out[i] = f(i);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

/// Rows (nu, stalk, costalk_poly, stable_from) for nu below 0 with coroot height <= box.
/// stable_from is searched in the dominant pairing box of size `stab_bound`; empty if not found there.
inline Table gaitsgory_table(const KostantCalculator& K, Int box, Int stab_bound = 8) {
  const RootDatum& d = K.datum();
  std::vector<Coweight> nus = closure_box(d, d.zero(), box);
  Table t;
  t.header = {"nu", "stalk", "costalk_poly", "stable_from"};
  t.rows = parallel_rows(nus.size(), [&](std::size_t i) {
    const Coweight& nu = nus[i];
    QPolynomial cost = K.gaitsgory_costalk_poly(nu);
    StabilizationReport rep = K.stabilization_check(nu, stab_bound);
    nlohmann::ordered_json sf = rep.stable_from ? nlohmann::ordered_json(rep.stable_from->coords()) : nlohmann::ordered_json();
    return std::vector<Cell>{Cell(nlohmann::ordered_json(nu.coords()), nu.str()), Cell(K.gaitsgory_stalk_rank(nu)),
                             Cell(cost.to_json(), cost.str()), Cell(sf, rep.stable_from ? rep.stable_from->str() : "")};
  });
  return t;
}

}  // namespace siflag
