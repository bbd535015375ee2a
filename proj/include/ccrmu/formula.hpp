#pragma once

#include <ccrmu/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ccrmu
{

/// Ordered finite set of action names. The order is the construction order
/// and drives deterministic enumeration.
class action_alphabet
{
public:
  action_alphabet() = default;
  explicit action_alphabet( std::vector<std::string> actions );
  action_alphabet( std::initializer_list<std::string> actions )
    : action_alphabet( std::vector<std::string>( actions ) )
  {
  }

  const std::vector<std::string>& actions() const noexcept { return _actions; }
  std::size_t size() const noexcept { return _actions.size(); }
  bool contains( const std::string& action ) const;

  /// Position of `action`; throws `errc::unknown_action` when absent.
  std::size_t index_of( const std::string& action ) const;

  friend bool operator==( const action_alphabet&, const action_alphabet& ) = default;

private:
  std::vector<std::string> _actions;
};

/// The (covariant, contravariant) action sets of a refinement quantifier.
struct signature
{
  std::set<std::string> cov;
  std::set<std::string> contra;

  signature() = default;
  signature( std::set<std::string> cov_actions, std::set<std::string> contra_actions );

  bool empty_side() const noexcept { return cov.empty() || contra.empty(); }

  /// Throws `errc::alphabet_mismatch` if an action is outside `alphabet`.
  void validate( const action_alphabet& alphabet ) const;

  friend bool operator==( const signature&, const signature& ) = default;
  friend auto operator<=>( const signature&, const signature& ) = default;
};

enum class op : std::uint8_t
{
  top,
  bot,
  atom,
  neg,
  conj,
  disj,
  box,
  diamond,
  cover,
  exists,
  forall,
  mu,
  nu
};

/// Immutable, structurally shared formula of the refinement mu-calculus.
///
/// Atoms and fixpoint variables share one namespace. Cover member sets are
/// kept sorted by canonical text and free of duplicates. Every node caches
/// its canonical rendering, which also defines the total order used for
/// canonical sets.
class formula
{
public:
  formula();

  op kind() const noexcept;

  /// Atom / bound variable name, or the action of a modal node.
  const std::string& name() const noexcept;
  const std::string& action() const noexcept { return name(); }
  const std::string& variable() const noexcept { return name(); }

  std::span<const formula> children() const noexcept;
  const formula& child( std::size_t i = 0 ) const noexcept { return children()[i]; }
  const formula& lhs() const noexcept { return children()[0]; }
  const formula& rhs() const noexcept { return children()[1]; }
  const formula& body() const noexcept { return children()[0]; }

  const signature& sig() const noexcept;

  /// Canonical text (see `render`).
  const std::string& text() const noexcept;

  /// Rendering for a position that is followed by more input in the same
  /// scope; differs from `text()` only by parentheses around binders.
  const std::string& text_nontail() const noexcept;

  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  bool is( op k ) const noexcept { return kind() == k; }
  bool is_binary() const noexcept { return is( op::conj ) || is( op::disj ); }
  bool is_binder() const noexcept { return is( op::mu ) || is( op::nu ); }
  bool is_quantifier() const noexcept { return is( op::exists ) || is( op::forall ); }
  bool is_modal() const noexcept { return is( op::box ) || is( op::diamond ) || is( op::cover ); }

  friend bool operator==( const formula& a, const formula& b ) noexcept;
  friend std::strong_ordering operator<=>( const formula& a, const formula& b ) noexcept;

  struct node;

private:
  explicit formula( std::shared_ptr<const node> n )
    : _node( std::move( n ) )
  {
  }

  friend formula make_node( op, std::string, std::vector<formula>, signature );

  std::shared_ptr<const node> _node;
};

struct formula_hash
{
  std::size_t operator()( const formula& f ) const noexcept { return f.hash(); }
};

/// Canonically ordered, duplicate-free formula set.
using formula_set = std::set<formula>;

formula top();
formula bot();
formula atom( std::string name );
formula neg( formula f );
formula conj( formula a, formula b );
formula disj( formula a, formula b );
formula implies( formula a, formula b );
formula box( std::string action, formula f );
formula diamond( std::string action, formula f );
formula cover( std::string action, std::vector<formula> members );
formula exists( signature sig, formula f );
formula forall( signature sig, formula f );
formula mu( std::string variable, formula body );
formula nu( std::string variable, formula body );
formula fixpoint( op kind, std::string variable, formula body );

/// Left-associated conjunction; `top()` when empty.
formula conj_all( std::span<const formula> items );
/// Left-associated disjunction; `bot()` when empty.
formula disj_all( std::span<const formula> items );

/// Canonical text. Precedence: prefix operators bind tightest, then `&`,
/// then `|`; binders extend to the end of their scope and are parenthesised
/// whenever something follows them.
inline const std::string& render( const formula& f ) { return f.text(); }

/// Flattens nested nodes of kind `k` (`conj` or `disj`) into operands in
/// left-to-right order.
std::vector<formula> flatten( const formula& f, op k );

/// Names occurring free (atoms and unbound fixpoint variables).
std::set<std::string> free_names( const formula& f );
/// Names bound by some `mu`/`nu` in `f`.
std::set<std::string> bound_names( const formula& f );
/// Every action mentioned by a modality or quantifier signature.
std::set<std::string> actions_of( const formula& f );

bool has_quantifier( const formula& f );
bool has_fixpoint( const formula& f );
bool is_propositional( const formula& f );
bool is_literal( const formula& f );
std::size_t modal_depth( const formula& f );

} // namespace ccrmu

template<>
struct std::hash<ccrmu::formula>
{
  std::size_t operator()( const ccrmu::formula& f ) const noexcept { return f.hash(); }
};
