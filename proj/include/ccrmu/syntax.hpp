#pragma once

#include <ccrmu/formula.hpp>

#include <set>
#include <string>
#include <string_view>

namespace ccrmu
{

/// Parses the textual grammar
///
///   true false <ident> !F (F) F & F  F | F  F -> F  [a]F <a>F
///   nabla_a {F, ..., F}  E{a,..;b,..} F  A{a,..;b,..} F  mu q. F  nu q. F
///
/// `->` is right-associative and desugared to `!l | r`. Binder bodies
/// extend to the end of the enclosing scope. Throws `syntax_error` (with
/// byte offset) or `error(errc::positivity)` naming the variable.
formula parse( std::string_view text );

/// As above, additionally rejecting actions outside `alphabet`
/// (`errc::unknown_action`).
formula parse( std::string_view text, const action_alphabet& alphabet );

/// Throws `errc::positivity` unless every bound variable occurs under an
/// even number of negations within its binder.
void check_positivity( const formula& f );

/// True iff no free occurrence of `name` in `f` is under an odd number of
/// negations.
bool occurs_positively( const formula& f, const std::string& name );

/// Throws `errc::unknown_action` for modalities or signatures using actions
/// outside `alphabet`.
void check_actions( const formula& f, const action_alphabet& alphabet );

/// Negation normal form: `Neg` only directly above atoms. Negated fixpoints
/// use the dual binder with the variable's polarity flipped back.
formula nnf( const formula& f );

/// Capture-avoiding replacement of the free occurrences of `q` by `g`.
/// Clashing binders are renamed by appending primes.
formula substitute( const formula& f, const std::string& q, const formula& g );

/// `base` followed by as many primes as needed to avoid `taken`.
std::string fresh_name( const std::string& base, const std::set<std::string>& taken );

/// Disjunctive-formula check. Throws `errc::quantifier_present`.
bool is_df( const formula& f );

/// Boolean/modal clean-up that preserves the semantics: unit and zero
/// absorption, idempotence, complementary literals, double negation,
/// `<b>false`, covers containing `false`, vacuous binders, and dropping
/// `<b>true` next to another `<b>` conjunct. `[b]true` is kept.
formula simplify( const formula& f );

} // namespace ccrmu
