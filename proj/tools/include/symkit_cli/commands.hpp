#pragma once

// Command layer of the symkit tool. `run` parses argv, dispatches to one
// subcommand and maps library errors onto the exit-code contract.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "symkit/formula.hpp"

namespace symkit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kHypothesisFailed = 2,
  kVerificationFailed = 3,
  kBudgetExceeded = 4,
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t term_budget = kDefaultTermBudget;
  unsigned field_order = 1;  // 1 = rational, n = cyclotomic(n)
  std::string output_path;
};

/// "rational", "cyclotomic:N", "cyclotomic(N)" or "cyclotomicN".
unsigned parse_field(std::string_view text);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symkit::cli
