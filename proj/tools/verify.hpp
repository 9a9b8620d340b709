#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afflow::verify {

struct CriterionResult {
  std::string id;      // C1..C12 (criteria split into parts share an id)
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs expected, with tolerances
};

/// exact-solutions, identities, monotonicity, convergence, all.
const std::vector<std::string>& suite_names();
bool known_suite(const std::string& suite);

/// Runs every criterion of the suite and returns one row per check.
/// Independent heavy runs execute in parallel; row order is fixed.
std::vector<CriterionResult> run_suite(const std::string& suite);

bool all_pass(const std::vector<CriterionResult>& results);

/// One pass/fail line per criterion plus a summary line.
void print_table(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace afflow::verify
