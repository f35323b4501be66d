#include "radpoin/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "radpoin/errors.hpp"

namespace radpoin::report {

using harness::CheckReport;
using harness::CheckRow;
using harness::SuiteReport;
using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// JSON has no inf/nan; keep them as strings so the round trip survives.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}
double from_jnum(const json& j) {
  if (j.is_string()) return std::stod(j.get<std::string>());
  return j.get<double>();
}

json row_json(const CheckRow& r) {
  return {{"func", r.func},     {"lhs", jnum(r.lhs)},
          {"rhs", jnum(r.rhs)}, {"deficit", jnum(r.deficit)},
          {"rel_deficit", jnum(r.rel_deficit)}, {"coeff_table", r.coeff_table}};
}

CheckRow row_from(const json& j) {
  CheckRow r;
  r.func = j.at("func").get<std::string>();
  r.lhs = from_jnum(j.at("lhs"));
  r.rhs = from_jnum(j.at("rhs"));
  r.deficit = from_jnum(j.at("deficit"));
  r.rel_deficit = from_jnum(j.at("rel_deficit"));
  r.coeff_table = j.value("coeff_table", "");
  return r;
}

json check_json(const CheckReport& r) {
  json j;
  j["meta"] = {{"version", r.version},
               {"n", r.n},
               {"spec", r.spec},
               {"config_hash", r.config_hash},
               {"tolerance", r.tolerance}};
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back(row_json(row));
  j["verdict"] = harness::to_string(r.verdict);
  if (!r.message.empty()) j["message"] = r.message;
  if (r.numerical_failure) j["numerical_failure"] = true;
  return j;
}

CheckReport check_from(const json& j) {
  CheckReport r;
  const auto& m = j.at("meta");
  r.version = m.at("version").get<std::string>();
  r.n = m.at("n").get<int>();
  r.spec = m.at("spec").get<std::string>();
  r.config_hash = m.at("config_hash").get<std::string>();
  r.tolerance = m.value("tolerance", 0.0);
  for (const auto& row : j.at("rows")) r.rows.push_back(row_from(row));
  r.verdict = harness::parse_verdict(j.at("verdict").get<std::string>());
  r.message = j.value("message", "");
  r.numerical_failure = j.value("numerical_failure", false);
  return r;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

double config_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw SpecError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw SpecError("unknown format '" + s + "' (expected json or csv)");
}

std::string to_json(const CheckReport& r) { return check_json(r).dump(2) + "\n"; }

CheckReport check_from_json(const std::string& text) { return check_from(json::parse(text)); }

std::string to_csv(const CheckReport& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : r.rows)
    out += csv_field(row.func) + "," + num(row.lhs) + "," + num(row.rhs) + "," + num(row.deficit) + "," +
           num(row.rel_deficit) + "\n";
  return out;
}

std::vector<CheckRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) throw std::runtime_error("csv: unexpected header");
  std::vector<CheckRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw std::runtime_error("csv: expected 5 fields in '" + line + "'");
    CheckRow r;
    r.func = f[0];
    r.lhs = std::stod(f[1]);
    r.rhs = std::stod(f[2]);
    r.deficit = std::stod(f[3]);
    r.rel_deficit = std::stod(f[4]);
    rows.push_back(r);
  }
  return rows;
}

std::string to_json(const SuiteReport& r) {
  json j;
  j["meta"] = {{"version", harness::kVersion}, {"suite", r.name}, {"n", r.n}};
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  j["verdict"] = harness::to_string(r.verdict());
  const double m = r.min_rel_deficit();
  j["min_rel_deficit"] = jnum(m);
  return j.dump(2) + "\n";
}

SuiteReport suite_from_json(const std::string& text) {
  const json j = json::parse(text);
  SuiteReport r;
  r.name = j.at("meta").at("suite").get<std::string>();
  r.n = j.at("meta").at("n").get<int>();
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from(c));
  return r;
}

std::string to_csv(const SuiteReport& r) {
  std::string out = "spec,func,lhs,rhs,deficit,rel_deficit,verdict\n";
  for (const auto& c : r.checks) {
    if (c.rows.empty()) {
      out += csv_field(c.spec) + ",,,,,," + harness::to_string(c.verdict) + "\n";
      continue;
    }
    for (const auto& row : c.rows)
      out += csv_field(c.spec) + "," + csv_field(row.func) + "," + num(row.lhs) + "," + num(row.rhs) + "," +
             num(row.deficit) + "," + num(row.rel_deficit) + "," + harness::to_string(c.verdict) + "\n";
  }
  return out;
}

void emit_report(const CheckReport& r, Format fmt, const std::string& path) {
  write_text(fmt == Format::json ? to_json(r) : to_csv(r), path);
}

void emit_report(const SuiteReport& r, Format fmt, const std::string& path) {
  write_text(fmt == Format::json ? to_json(r) : to_csv(r), path);
}

harness::HarnessConfig parse_config(std::istream& in, harness::HarnessConfig cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SpecError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "rel_tol") {
      cfg.quad.rel_tol = config_double(key, val);
    } else if (key == "abs_tol") {
      cfg.quad.abs_tol = config_double(key, val);
    } else if (key == "max_subdivisions") {
      cfg.quad.max_subdivisions = static_cast<int>(config_double(key, val));
    } else if (key == "tail_horizon") {
      cfg.quad.tail_horizon = config_double(key, val);
    } else if (key == "tail_mode") {
      if (val == "truncate")
        cfg.quad.tail_mode = quad::TailMode::truncate;
      else if (val == "power_law_extrapolate")
        cfg.quad.tail_mode = quad::TailMode::power_law_extrapolate;
      else
        throw SpecError("config: unknown tail_mode '" + val + "'");
    } else if (key == "library_seed") {
      cfg.library_seed = static_cast<std::uint64_t>(std::stoull(val));
    } else if (key == "tolerance") {
      cfg.tolerance = config_double(key, val);
    } else {
      throw SpecError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.quad.validate();
  if (cfg.tolerance < 0) throw SpecError("config: tolerance must be >= 0");
  return cfg;
}

harness::HarnessConfig load_config(const std::string& path, harness::HarnessConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(in, base);
}

}  // namespace radpoin::report
