#pragma once

#include <ccrmu/formula.hpp>
#include <ccrmu/model.hpp>
#include <ccrmu/state_set.hpp>

#include <map>
#include <string>

namespace ccrmu
{

/// Interpretation of free variables; takes precedence over the model's
/// valuation for the same name.
using environment = std::map<std::string, state_set>;

/// States of `m` satisfying the quantifier-free formula `f`. Fixpoints are
/// computed by plain Knaster-Tarski iteration (mu from the empty set, nu
/// from all states). Free names must be bound by `env` or declared atoms of
/// `m`.
///
/// Throws `errc::quantifier_present`, `errc::unbound_variable`, or
/// `errc::unknown_action`.
state_set extension( const model& m, const formula& f, const environment& env = {} );

/// Whether the point satisfies `f`.
bool check( const pointed_model& pm, const formula& f );

} // namespace ccrmu
