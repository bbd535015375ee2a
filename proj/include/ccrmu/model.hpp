#pragma once

#include <ccrmu/formula.hpp>
#include <ccrmu/state_set.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccrmu
{

/// Finite labelled transition system with an atom valuation.
///
/// States are string ids kept in insertion order; internally every state,
/// action and atom is addressed by its index. Each action of the alphabet
/// has a (possibly empty) transition relation.
class model
{
public:
  model() = default;
  model( action_alphabet alphabet, std::vector<std::string> states, std::set<std::string> atoms = {} );

  const action_alphabet& alphabet() const noexcept { return _alphabet; }
  std::size_t size() const noexcept { return _states.size(); }
  std::size_t num_actions() const noexcept { return _alphabet.size(); }

  const std::vector<std::string>& states() const noexcept { return _states; }
  const std::string& id( std::size_t s ) const { return _states[s]; }
  bool has_state( const std::string& id ) const { return _index.count( id ) != 0u; }
  /// Throws `errc::unknown_state`.
  std::size_t index_of( const std::string& id ) const;
  state_set state_set_of( const std::set<std::string>& ids ) const;
  std::set<std::string> ids_of( const state_set& s ) const;

  void add_transition( std::size_t from, std::size_t action, std::size_t to );
  void add_transition( const std::string& from, const std::string& action, const std::string& to );

  bool has_transition( std::size_t action, std::size_t from, std::size_t to ) const
  {
    return _succ_set[action][from].test( to );
  }
  const std::vector<std::size_t>& successors( std::size_t action, std::size_t s ) const { return _succ[action][s]; }
  const state_set& successor_set( std::size_t action, std::size_t s ) const { return _succ_set[action][s]; }
  const std::vector<std::size_t>& predecessors( std::size_t action, std::size_t s ) const { return _pred[action][s]; }

  /// States with at least one `action`-successor in `target`.
  state_set pre_exists( std::size_t action, const state_set& target ) const;
  /// States all of whose `action`-successors lie in `target`.
  state_set pre_forall( std::size_t action, const state_set& target ) const;

  /// All (from, action, to) triples, ordered by action, then source, then target.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> transitions() const;
  std::size_t num_transitions() const;

  /// Declared atoms (every atom with a valuation entry).
  const std::set<std::string>& atoms() const noexcept { return _atoms; }
  void declare_atom( const std::string& atom );
  /// Empty set for atoms that are not declared.
  state_set valuation( const std::string& atom ) const;
  bool holds( const std::string& atom, std::size_t s ) const;
  void set_valuation( const std::string& atom, state_set states );
  void set_atom( const std::string& atom, std::size_t s, bool value = true );

  /// Atoms true at `s` (the dual valuation view).
  std::set<std::string> label( std::size_t s ) const;

  /// Same state ids, transitions and valuation (state order ignored;
  /// atoms with empty extension count as absent).
  friend bool operator==( const model& a, const model& b );

private:
  action_alphabet _alphabet;
  std::vector<std::string> _states;
  std::unordered_map<std::string, std::size_t> _index;
  std::vector<std::vector<std::vector<std::size_t>>> _succ;
  std::vector<std::vector<std::vector<std::size_t>>> _pred;
  std::vector<std::vector<state_set>> _succ_set;
  std::set<std::string> _atoms;
  std::map<std::string, state_set> _valuation;
};

struct pointed_model
{
  model m;
  std::size_t point = 0;

  pointed_model() = default;
  pointed_model( model mm, std::size_t p );
  pointed_model( model mm, const std::string& point_id );

  const std::string& point_id() const { return m.id( point ); }
};

/// Componentwise union. Throws `errc::state_clash` on shared ids and
/// `errc::alphabet_mismatch` on different alphabets.
model disjoint_union( const model& m, const model& n );

/// Isomorphic copy with `suffix` appended to every state id.
pointed_model copy_rename( const pointed_model& pm, const std::string& suffix );
model copy_rename( const model& m, const std::string& suffix );

/// Restriction to `w` and everything reachable from it.
model generated_submodel( const model& m, const std::string& w );

/// States reachable from `from` in one or more steps over any action.
state_set descendants( const model& m, const state_set& from );

/// Tree unravelling from the point. Path states are named "u0/a1/u1/...".
/// Without `depth` the model must be acyclic from the point
/// (`errc::cyclic_without_bound`); with `depth` paths are truncated.
pointed_model unravel( const pointed_model& pm, std::optional<std::size_t> depth = std::nullopt );

struct tree_report
{
  bool tree_like = false;
  /// Violated conditions: 1 rooted, 2 unique parent, 3 action-disjoint, 4 acyclic.
  std::vector<int> failed;
  std::optional<std::size_t> root;
};

tree_report is_tree_like( const model& m );

/// Removes every descendant of the states in `t`.
model prune( const model& m, const std::set<std::string>& t );

/// Same states and transitions; atom sets agree outside `t`.
bool eq_modulo( const model& m, const model& n, const std::set<std::string>& t );

/// Replaces the subtree below each `u` in `w` by the part rooted at
/// `parts[u]`; `u` takes over the successors and exactly the atoms of the
/// part's point. Throws `errc::not_tree_like`, `errc::not_disjoint`,
/// `errc::unknown_state`, or `errc::invalid_argument` (missing part, or
/// `w` containing a descendant of another member).
model graft( const pointed_model& pm, const std::set<std::string>& w, const std::map<std::string, pointed_model>& parts );

/// Replaces the valuation of `q` by `t`.
model override_valuation( const model& m, const std::string& q, const std::set<std::string>& t );

} // namespace ccrmu
