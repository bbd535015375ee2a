#pragma once

#include <ccrmu/formula.hpp>
#include <ccrmu/model.hpp>
#include <ccrmu/model_io.hpp>
#include <ccrmu/state_set.hpp>

#include <set>
#include <string>
#include <vector>

namespace ccrmu
{

/// A relation between the states of a left model M (the specification)
/// and a right model N (the implementation), with the context it was
/// computed for.
struct refinement_relation
{
  /// rows[s] = { t : (s,t) in Z }
  std::vector<state_set> rows;
  std::set<std::string> restricted;
  signature sig;

  bool contains( std::size_t s, std::size_t t ) const { return rows[s].test( t ); }
  std::vector<state_pair> pairs() const;
  std::size_t size() const;
};

/// Checks the three clauses at every pair: agreement on atoms outside `p`,
/// forth for actions outside `sig.contra`, back for actions outside
/// `sig.cov`. Throws `errc::unknown_state` for pairs outside the models.
bool verify_relation( const std::vector<state_pair>& pairs, const model& m, const model& n,
                      const std::set<std::string>& p, const signature& sig );

/// Greatest P-restricted (cov, contra)-refinement between `m` and `n`,
/// by deleting violating pairs until stable. `left_order`/`right_order`
/// permute the deletion sweep (the result does not depend on them).
///
/// Throws `errc::alphabet_mismatch`.
refinement_relation largest_refinement( const model& m, const model& n, const std::set<std::string>& p,
                                        const signature& sig, const std::vector<std::size_t>& left_order = {},
                                        const std::vector<std::size_t>& right_order = {} );

bool refines( const pointed_model& pm, const pointed_model& pn, const std::set<std::string>& p, const signature& sig );

} // namespace ccrmu
