#pragma once

#include "monge/subdivision/pa_function.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace monge::io {

struct CheckResult {
  std::string module;
  std::string invariant;
  std::string subject;
  bool passed = true;
  std::string witness;  // exact counterexample on failure, note otherwise
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t failures() const;
  /// Fixed-width pass/fail table, one line per check.
  std::string table() const;
};

/// Invariant checks on one PA convex function. `name` labels the rows.
std::vector<CheckResult> verify_function(const std::string& name, const PAConvexFunction& h);

/// Invariants that need no corpus input: approximation, the 1D solver, and
/// serialization of the fixed examples.
std::vector<CheckResult> verify_builtin();

/// Loads every *.json function in `corpus` (sorted by file name), checks each
/// one in parallel, and appends verify_builtin(). Throws ParseError on
/// unreadable files.
VerifyReport verify_corpus(const std::filesystem::path& corpus);

}  // namespace monge::io
