#pragma once

#include <ccrmu/formula.hpp>

namespace ccrmu
{

/// Disjunctive form of a fixpoint- and quantifier-free formula: a
/// disjunction of clauses `alpha & nabla_b1 F1 & ... & nabla_bk Fk` with
/// propositional `alpha`, distinct actions in order, and df members.
/// Boxes become `nabla_b {} | nabla_b {g}`, diamonds `nabla_b {g, true}`,
/// and covers over the same action are merged by the cover meet law.
///
/// Throws `errc::fixpoint_present` or `errc::quantifier_present`.
formula to_df( const formula& f );

/// `f` itself when already df, `to_df(f)` when fixpoint-free, otherwise
/// `errc::not_disjunctive`. Throws `errc::quantifier_present`.
formula ensure_df( const formula& f );

} // namespace ccrmu
