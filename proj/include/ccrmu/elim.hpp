#pragma once

#include <ccrmu/formula.hpp>
#include <ccrmu/model.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ccrmu
{

enum class truth : std::uint8_t
{
  no,
  yes,
  undetermined
};

enum class undetermined_reason : std::uint8_t
{
  none,
  not_disjunctive,
  side_condition_unknown,
  bound_exhausted,
  unsupported_signature
};

std::string_view to_string( truth t ) noexcept;
std::string_view to_string( undetermined_reason r ) noexcept;

/// Three-valued answer; an undetermined verdict always carries a reason.
struct verdict
{
  truth value = truth::undetermined;
  undetermined_reason reason = undetermined_reason::none;
  std::string detail;

  static verdict yes() { return { truth::yes, undetermined_reason::none, {} }; }
  static verdict no() { return { truth::no, undetermined_reason::none, {} }; }
  static verdict of( bool b ) { return b ? yes() : no(); }
  static verdict unknown( undetermined_reason r, std::string detail = {} )
  {
    return { truth::undetermined, r, std::move( detail ) };
  }

  bool is_yes() const noexcept { return value == truth::yes; }
  bool is_no() const noexcept { return value == truth::no; }
  bool is_undetermined() const noexcept { return value == truth::undetermined; }
};

/// Bounds for the side-condition oracle.
struct elim_caps
{
  /// Largest modal depth decided exactly for fixpoint-free formulas.
  std::size_t depth = 6;
  /// Largest model searched for satisfying formulas with fixpoints.
  std::size_t states = 4;
  /// Overall budget of candidate models per satisfiability query.
  std::size_t max_candidates = std::size_t{ 1 } << 20;
};

/// Unsatisfiability of a quantifier-free formula (free names act as atoms):
/// yes = unsatisfiable, no = satisfiable. Exact for fixpoint-free formulas
/// within the depth cap; with fixpoints only a found model (no) or boolean
/// collapse to `false` (yes) is conclusive.
///
/// Throws `errc::quantifier_present`.
verdict unsat_k( const formula& f, const elim_caps& caps = {} );

/// Removes one singleton quantifier E{a1;a2} in front of the df formula `f`.
/// Free fixpoint variables are treated as atoms.
///
/// Throws `errc::not_disjunctive` or `errc::side_condition_unknown`.
formula eliminate_one( const std::string& a1, const std::string& a2, const formula& f, const elim_caps& caps = {} );

/// Equivalent quantifier-free formula, innermost quantifier first; set
/// signatures are split into singleton quantifiers in lexicographic order.
///
/// Throws `errc::not_disjunctive`, `errc::side_condition_unknown`, or
/// `errc::unsupported_signature` (empty covariant or contravariant set),
/// each naming the offending subformula.
formula eliminate( const formula& f, const elim_caps& caps = {} );

struct check_options
{
  /// Witness bound for quantifiers that cannot be eliminated (off if unset).
  std::optional<std::size_t> fallback_bound;
  elim_caps caps;
};

/// Truth of a closed formula at a pointed model: model checking of the
/// eliminated formula, or bounded witness search when elimination fails and
/// a fallback bound is set. Never throws for formula-level failures.
verdict check_cc( const pointed_model& pm, const formula& f, const check_options& options = {} );

} // namespace ccrmu
