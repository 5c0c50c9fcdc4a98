#pragma once

#include <string>
#include <vector>

namespace peakon {

// One line of a validation table: a measured quantity against its tolerance.
struct CheckRow {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // e.g. the admissible interval for ratio checks
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRow> rows;
  bool all_passed() const;
};

// Named invariant suites bundled behind `peakon-lab validate`.
//   oracle       - reformulated system against the conservative form,
//                  FORQ reduction identities, cubic homogeneity
//   conservation - H1/H2 drift, consistency residual, size estimate and
//                  temporal order on the standard smooth run
//   pt           - nonlocal-reduction witness v(x,t) = u(-x,-t)
//   peakon       - periodized peakon speed under the mollified flow
//   mollifier    - eps -> 0 trajectory convergence
SuiteResult run_suite(const std::string& name);

// All suites in the order above.
std::vector<SuiteResult> run_all_suites();

}  // namespace peakon
