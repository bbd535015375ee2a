#pragma once

#include <ccrmu/formula.hpp>

#include <span>
#include <string_view>
#include <vector>

namespace ccrmu
{

/// Curated formulas over actions {a, b} and the atom p, modal depth <= 2.
struct corpus_entry
{
  std::string_view text;
  /// Hand-assigned membership in the disjunctive fragment.
  bool df;
};

std::span<const corpus_entry> corpus();

/// The df members, parsed; these drive the elimination checks.
std::vector<formula> df_corpus();

/// Every entry without fixpoints.
std::vector<formula> fixpoint_free_corpus();

/// Every entry with a fixpoint.
std::vector<formula> fixpoint_corpus();

} // namespace ccrmu
