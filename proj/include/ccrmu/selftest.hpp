#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ccrmu
{

struct selftest_options
{
  /// Models over {a, b} and atom p with up to this many states.
  std::size_t max_states = 1;
  /// Witness search bound for the elimination soundness suite.
  std::size_t witness_bound = 2;
};

struct suite_result
{
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First few failing cases, human readable.
  std::vector<std::string> examples;

  bool passed() const noexcept { return failures == 0u; }
};

/// Property suites over the curated corpus and the enumerated universe:
/// render/parse round trip, negation normal form, disjunctive form,
/// tableau against the model checker, and elimination against witness
/// search.
std::vector<suite_result> run_selftest( const selftest_options& options );

} // namespace ccrmu
