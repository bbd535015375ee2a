#pragma once

#include <ccrmu/elim.hpp>
#include <ccrmu/formula.hpp>
#include <ccrmu/model.hpp>
#include <ccrmu/model_io.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ccrmu
{

struct enumeration_options
{
  std::size_t min_states = 1;
  /// Only models whose states are numbered in breadth-first order from the
  /// root (hence all reachable). Drops many, not all, isomorphic copies.
  bool canonical = false;
  /// Only models whose root carries exactly these atoms.
  std::optional<std::set<std::string>> root_label;
};

/// Calls `fn` on every model with `min_states`..`max_states` states over the
/// given alphabet and atoms, rooted at state "s0", in a fixed order, until
/// `fn` returns false. Returns false if stopped early.
///
/// Without pruning, models of k states are ordered by the bit mask that
/// sets bit a*k*k + i*k + j for a transition i -a-> j and, above those,
/// bit r*k + i for atom r at state i.
bool for_each_model( const action_alphabet& alphabet, const std::vector<std::string>& atoms, std::size_t max_states,
                     const enumeration_options& options, const std::function<bool( const pointed_model& )>& fn );

std::vector<pointed_model> enumerate_models( const action_alphabet& alphabet, const std::vector<std::string>& atoms,
                                             std::size_t max_states, const enumeration_options& options = {} );

std::size_t count_models( const action_alphabet& alphabet, const std::vector<std::string>& atoms, std::size_t max_states,
                          const enumeration_options& options = {} );

struct witness
{
  pointed_model model;
  /// The largest refinement between the input and the witness.
  std::vector<state_pair> relation;
};

/// First enumerated (N,t) with at most `max_states` states such that `pm`
/// is (cov, contra)-refined by (N,t) and (N,t) satisfies `f`. Candidates
/// range over the atoms of `f` and `pm`. Quantified `f` is evaluated by
/// `check_cc`; an undetermined inner verdict throws
/// `errc::side_condition_unknown`.
std::optional<witness> witness_search( const pointed_model& pm, const signature& sig, const formula& f,
                                       std::size_t max_states, const elim_caps& caps = {} );

} // namespace ccrmu
