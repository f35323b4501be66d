#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radpoin/coefficients.hpp"
#include "radpoin/quadrature.hpp"
#include "radpoin/radial.hpp"

namespace radpoin::harness {

inline constexpr const char* kVersion = "radpoin 0.1.0";

enum class InequalityId {
  main_poincare, th1, cor1, th2, cor2, lemma3, mu_bound, th3, cor3, lemma5,
  th4, cor4, lemma6, lemma7, r21, r20, dr21, dr20, C_family, D_family
};

const char* to_string(InequalityId id);
std::optional<InequalityId> parse_id(const std::string& s);
const std::vector<InequalityId>& all_ids();

struct InequalitySpec {
  InequalityId id = InequalityId::main_poincare;
  int n = 3;
  coeff::Rational alpha = 0;  // th1..cor4, lemma5..lemma7
  int k = 1, l = 0;           // main_poincare, C_family, D_family
  int beta = 1;               // lemma6, lemma7
  double tolerance = 1e-9;

  // e.g. "th4(n=9,alpha=1)"
  std::string describe() const;
  // Highest radial derivative order appearing in the inequality.
  int derivative_order() const;
};

// Throws SpecError if the inequality's hypotheses are not met.
void validate(const InequalitySpec& spec);

struct HarnessConfig {
  quad::QuadratureConfig quad;
  std::uint64_t library_seed = 20240613;
  double tolerance = 1e-9;
};

// FNV-1a over a canonical rendering of the configuration (and spec text).
std::string config_hash(const HarnessConfig& cfg, const std::string& salt = "");

enum class Verdict { pass, fail, spec_error };
const char* to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct CheckRow {
  std::string func;
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  double rel_deficit = 0.0;
  std::string coeff_table;  // provenance of the right-hand side constants

  bool operator==(const CheckRow&) const = default;
};

struct CheckReport {
  std::string version = kVersion;
  int n = 0;
  std::string spec;
  std::string config_hash;
  double tolerance = 0.0;
  std::vector<CheckRow> rows;
  Verdict verdict = Verdict::pass;
  std::string message;       // spec error / numerical failure text
  bool numerical_failure = false;

  double min_rel_deficit() const;
  bool operator==(const CheckReport&) const = default;
};

// Evaluates both sides of the inequality for each admissible function.
// Both sides are written in "everything positive" form, e.g. for r21
//   lhs = int (Delta u)^2,  rhs = ((n-1)/2)^2 int |u'|^2 + ...,
// and lemma5 (an upper bound) is oriented so that lhs >= rhs holds.
// Functions whose smoothness is below derivative_order()-1 are skipped.
// Hypothesis violations and an empty/inadmissible function list throw SpecError.
CheckReport check_inequality(const InequalitySpec& spec, const std::vector<RadialFunction>& funcs,
                             const HarnessConfig& cfg = {});

struct SuiteReport {
  std::string name;
  int n = 0;
  std::vector<CheckReport> checks;

  Verdict verdict() const;
  double min_rel_deficit() const;
  bool numerical_failure() const;
};

// Named suites: all_section2, all_section3, all_section4, all.  Only specs
// whose hypotheses hold at n are generated.
std::vector<InequalitySpec> suite_specs(const std::string& name, int n, double tolerance = 1e-9);
const std::vector<std::string>& suite_names();

// Runs every spec over funcs; a failing spec never aborts the others.
SuiteReport run_suite(const std::string& name, const std::vector<InequalitySpec>& specs,
                      const std::vector<RadialFunction>& funcs, const HarnessConfig& cfg = {});
// Named suite over the default 12-function library.
SuiteReport run_suite(const std::string& name, int n, const HarnessConfig& cfg = {});

}  // namespace radpoin::harness
