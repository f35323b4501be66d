#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "radpoin/harness.hpp"

namespace radpoin::report {

enum class Format { json, csv };
Format parse_format(const std::string& s);

inline constexpr const char* kCsvHeader = "func,lhs,rhs,deficit,rel_deficit";

// JSON: {meta:{version,n,spec,config_hash,tolerance}, rows:[...], verdict[, message, numerical_failure]}
std::string to_json(const harness::CheckReport& r);
harness::CheckReport check_from_json(const std::string& text);

// CSV carries rows only; numbers use 17 significant digits.
std::string to_csv(const harness::CheckReport& r);
std::vector<harness::CheckRow> rows_from_csv(const std::string& text);

std::string to_json(const harness::SuiteReport& r);
harness::SuiteReport suite_from_json(const std::string& text);
// One line per (spec, func); header "spec,func,lhs,rhs,deficit,rel_deficit,verdict".
std::string to_csv(const harness::SuiteReport& r);

// Writes to path ("-" means stdout).  I/O failures throw std::runtime_error naming the path.
void emit_report(const harness::CheckReport& r, Format fmt, const std::string& path);
void emit_report(const harness::SuiteReport& r, Format fmt, const std::string& path);

// key = value lines, '#' comments.  Keys: rel_tol, abs_tol, max_subdivisions,
// tail_horizon, tail_mode, library_seed, tolerance.  Unknown keys -> SpecError.
harness::HarnessConfig parse_config(std::istream& in, harness::HarnessConfig base = {});
harness::HarnessConfig load_config(const std::string& path, harness::HarnessConfig base = {});

}  // namespace radpoin::report
