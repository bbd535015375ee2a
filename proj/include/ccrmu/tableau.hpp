#pragma once

#include <ccrmu/formula.hpp>
#include <ccrmu/model.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccrmu
{

enum class tableau_rule : std::uint8_t
{
  none, // leaf
  and_rule,
  or_rule,
  mod_rule
};

struct tableau_node
{
  std::size_t id = 0;
  formula_set label;
  tableau_rule rule = tableau_rule::none;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  /// Action of the edge from the parent when the parent is a modal node.
  std::string action;
  bool modal = false;
  bool choice = false;
};

/// Rule tree for a fixpoint-free df formula; node 0 is the root.
struct tableau
{
  std::vector<tableau_node> nodes;

  const tableau_node& root() const { return nodes.front(); }
  std::string to_dot() const;
};

/// Applies (and) and (or) to the first compound formula of a label, and
/// (mod) once only literals and covers remain. Propositional parts are put
/// in negation normal form first, so the root label is `{nnf(f)}`.
///
/// Throws `errc::fixpoint_present`, `errc::quantifier_present`, or
/// `errc::not_disjunctive` (also when two covers share an action in a label).
tableau build_tableau( const formula& f );

using marking = std::vector<std::pair<std::size_t, std::size_t>>; // (state, node)

/// A consistent marking w.r.t. `pm`, if any.
std::optional<marking> find_marking( const tableau& t, const pointed_model& pm );

/// Checks the marking conditions and local consistency.
bool verify_marking( const tableau& t, const pointed_model& pm, const marking& mk );

} // namespace ccrmu
