#include <ccrmu/formula.hpp>

#include <algorithm>
#include <functional>

namespace ccrmu
{

std::string_view to_string( errc code ) noexcept
{
  switch ( code )
  {
  case errc::syntax: return "SyntaxError";
  case errc::positivity: return "PositivityError";
  case errc::unknown_action: return "UnknownAction";
  case errc::quantifier_present: return "QuantifierPresent";
  case errc::fixpoint_present: return "FixpointPresent";
  case errc::not_disjunctive: return "NotDisjunctive";
  case errc::side_condition_unknown: return "SideConditionUnknown";
  case errc::unsupported_signature: return "UnsupportedSignature";
  case errc::unbound_variable: return "UnboundVariable";
  case errc::state_clash: return "StateClash";
  case errc::unknown_state: return "UnknownState";
  case errc::cyclic_without_bound: return "CyclicWithoutBound";
  case errc::not_tree_like: return "NotTreeLike";
  case errc::not_disjoint: return "NotDisjoint";
  case errc::alphabet_mismatch: return "AlphabetMismatch";
  case errc::invalid_model: return "InvalidModel";
  case errc::invalid_argument: return "InvalidArgument";
  case errc::io: return "IOError";
  }
  return "Unknown";
}

action_alphabet::action_alphabet( std::vector<std::string> actions )
  : _actions( std::move( actions ) )
{
  if ( _actions.empty() )
    throw error( errc::invalid_argument, "action alphabet must not be empty" );
  std::set<std::string> seen;
  for ( const auto& a : _actions )
  {
    if ( a.empty() )
      throw error( errc::invalid_argument, "action names must be non-empty" );
    if ( !seen.insert( a ).second )
      throw error( errc::invalid_argument, "duplicate action '" + a + "'", a );
  }
}

bool action_alphabet::contains( const std::string& action ) const
{
  return std::find( _actions.begin(), _actions.end(), action ) != _actions.end();
}

std::size_t action_alphabet::index_of( const std::string& action ) const
{
  const auto it = std::find( _actions.begin(), _actions.end(), action );
  if ( it == _actions.end() )
    throw error( errc::unknown_action, "unknown action '" + action + "'", action );
  return static_cast<std::size_t>( it - _actions.begin() );
}

signature::signature( std::set<std::string> cov_actions, std::set<std::string> contra_actions )
  : cov( std::move( cov_actions ) ), contra( std::move( contra_actions ) )
{
  for ( const auto& a : cov )
  {
    if ( contra.count( a ) != 0u )
      throw error( errc::invalid_argument, "action '" + a + "' is both covariant and contravariant", a );
  }
}

void signature::validate( const action_alphabet& alphabet ) const
{
  for ( const auto* side : { &cov, &contra } )
  {
    for ( const auto& a : *side )
    {
      if ( !alphabet.contains( a ) )
        throw error( errc::alphabet_mismatch, "signature action '" + a + "' is not in the alphabet", a );
    }
  }
}

struct formula::node
{
  op kind;
  std::string name;
  std::vector<formula> kids;
  signature sig;
  std::string text;
  std::string text_nontail;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace
{

std::string join_actions( const std::set<std::string>& actions )
{
  std::string out;
  for ( const auto& a : actions )
  {
    if ( !out.empty() )
      out += ',';
    out += a;
  }
  return out;
}

std::string paren( const std::string& s ) { return "(" + s + ")"; }

/// Operand of a prefix operator.
std::string prefix_operand( const formula& c, bool tail )
{
  if ( c.is_binary() )
    return paren( c.text() );
  if ( c.is_binder() )
    return tail ? c.text() : paren( c.text() );
  return tail ? c.text() : c.text_nontail();
}

/// Operand of a binary operator `parent`.
std::string binary_operand( const formula& c, op parent, bool right, bool tail )
{
  if ( c.is_binary() )
  {
    if ( c.kind() != parent || right )
      return paren( c.text() );
    return c.text_nontail();
  }
  return prefix_operand( c, tail );
}

std::string render_node( const formula::node& n, bool tail )
{
  switch ( n.kind )
  {
  case op::top: return "true";
  case op::bot: return "false";
  case op::atom: return n.name;
  case op::neg: return "!" + prefix_operand( n.kids[0], tail );
  case op::box: return "[" + n.name + "]" + prefix_operand( n.kids[0], tail );
  case op::diamond: return "<" + n.name + ">" + prefix_operand( n.kids[0], tail );
  case op::exists:
  case op::forall:
  {
    std::string head = n.kind == op::exists ? "E{" : "A{";
    head += join_actions( n.sig.cov ) + ";" + join_actions( n.sig.contra ) + "} ";
    return head + prefix_operand( n.kids[0], tail );
  }
  case op::cover:
  {
    std::string out = "nabla_" + n.name + " {";
    for ( std::size_t i = 0; i < n.kids.size(); ++i )
    {
      if ( i != 0u )
        out += ", ";
      out += n.kids[i].text();
    }
    return out + "}";
  }
  case op::conj:
  case op::disj:
  {
    const char* sym = n.kind == op::conj ? " & " : " | ";
    return binary_operand( n.kids[0], n.kind, false, false ) + sym + binary_operand( n.kids[1], n.kind, true, tail );
  }
  case op::mu:
  case op::nu:
  {
    std::string out = ( n.kind == op::mu ? "mu " : "nu " ) + n.name + ". ";
    const auto& b = n.kids[0];
    out += b.is_binary() ? paren( b.text() ) : b.text();
    return tail ? out : paren( out );
  }
  }
  return {};
}

bool structurally_equal( const formula& a, const formula& b ) noexcept;

} // namespace

formula make_node( op kind, std::string name, std::vector<formula> kids, signature sig )
{
  auto n = std::make_shared<formula::node>();
  n->kind = kind;
  n->name = std::move( name );
  n->kids = std::move( kids );
  n->sig = std::move( sig );
  for ( const auto& k : n->kids )
    n->size += k.size();
  n->text = render_node( *n, true );
  n->text_nontail = render_node( *n, false );
  n->hash = std::hash<std::string>{}( n->text );
  return formula( std::move( n ) );
}

namespace
{

const formula& shared_top()
{
  static const formula t = make_node( op::top, {}, {}, {} );
  return t;
}

} // namespace

formula::formula()
  : formula( shared_top() )
{
}

op formula::kind() const noexcept { return _node->kind; }
const std::string& formula::name() const noexcept { return _node->name; }
std::span<const formula> formula::children() const noexcept { return _node->kids; }
const signature& formula::sig() const noexcept { return _node->sig; }
const std::string& formula::text() const noexcept { return _node->text; }
const std::string& formula::text_nontail() const noexcept { return _node->text_nontail; }
std::size_t formula::size() const noexcept { return _node->size; }
std::size_t formula::hash() const noexcept { return _node->hash; }

namespace
{

bool structurally_equal( const formula& a, const formula& b ) noexcept
{
  if ( a.kind() != b.kind() || a.name() != b.name() || a.children().size() != b.children().size() )
    return false;
  if ( a.is_quantifier() && !( a.sig() == b.sig() ) )
    return false;
  for ( std::size_t i = 0; i < a.children().size(); ++i )
  {
    if ( !( a.children()[i] == b.children()[i] ) )
      return false;
  }
  return true;
}

} // namespace

bool operator==( const formula& a, const formula& b ) noexcept
{
  if ( a._node == b._node )
    return true;
  if ( a.hash() != b.hash() || a.size() != b.size() )
    return false;
  return structurally_equal( a, b );
}

std::strong_ordering operator<=>( const formula& a, const formula& b ) noexcept
{
  if ( a._node == b._node )
    return std::strong_ordering::equal;
  const int c = a.text().compare( b.text() );
  if ( c < 0 )
    return std::strong_ordering::less;
  if ( c > 0 )
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

formula top() { return shared_top(); }

formula bot()
{
  static const formula f = make_node( op::bot, {}, {}, {} );
  return f;
}

formula atom( std::string name )
{
  if ( name.empty() )
    throw error( errc::invalid_argument, "atom names must be non-empty" );
  return make_node( op::atom, std::move( name ), {}, {} );
}

formula neg( formula f ) { return make_node( op::neg, {}, { std::move( f ) }, {} ); }
formula conj( formula a, formula b ) { return make_node( op::conj, {}, { std::move( a ), std::move( b ) }, {} ); }
formula disj( formula a, formula b ) { return make_node( op::disj, {}, { std::move( a ), std::move( b ) }, {} ); }
formula implies( formula a, formula b ) { return disj( neg( std::move( a ) ), std::move( b ) ); }
formula box( std::string action, formula f ) { return make_node( op::box, std::move( action ), { std::move( f ) }, {} ); }
formula diamond( std::string action, formula f ) { return make_node( op::diamond, std::move( action ), { std::move( f ) }, {} ); }

formula cover( std::string action, std::vector<formula> members )
{
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );
  return make_node( op::cover, std::move( action ), std::move( members ), {} );
}

formula exists( signature sig, formula f ) { return make_node( op::exists, {}, { std::move( f ) }, std::move( sig ) ); }
formula forall( signature sig, formula f ) { return make_node( op::forall, {}, { std::move( f ) }, std::move( sig ) ); }
formula mu( std::string variable, formula body ) { return make_node( op::mu, std::move( variable ), { std::move( body ) }, {} ); }
formula nu( std::string variable, formula body ) { return make_node( op::nu, std::move( variable ), { std::move( body ) }, {} ); }

formula fixpoint( op kind, std::string variable, formula body )
{
  return kind == op::mu ? mu( std::move( variable ), std::move( body ) ) : nu( std::move( variable ), std::move( body ) );
}

formula conj_all( std::span<const formula> items )
{
  if ( items.empty() )
    return top();
  formula acc = items.front();
  for ( std::size_t i = 1; i < items.size(); ++i )
    acc = conj( acc, items[i] );
  return acc;
}

formula disj_all( std::span<const formula> items )
{
  if ( items.empty() )
    return bot();
  formula acc = items.front();
  for ( std::size_t i = 1; i < items.size(); ++i )
    acc = disj( acc, items[i] );
  return acc;
}

std::vector<formula> flatten( const formula& f, op k )
{
  std::vector<formula> out;
  std::function<void( const formula& )> walk = [&]( const formula& g ) {
    if ( g.kind() == k )
    {
      walk( g.lhs() );
      walk( g.rhs() );
    }
    else
    {
      out.push_back( g );
    }
  };
  walk( f );
  return out;
}

namespace
{

void collect_free( const formula& f, std::set<std::string>& bound, std::set<std::string>& out )
{
  switch ( f.kind() )
  {
  case op::atom:
    if ( bound.count( f.name() ) == 0u )
      out.insert( f.name() );
    return;
  case op::mu:
  case op::nu:
  {
    const bool fresh = bound.insert( f.variable() ).second;
    collect_free( f.body(), bound, out );
    if ( fresh )
      bound.erase( f.variable() );
    return;
  }
  default:
    for ( const auto& c : f.children() )
      collect_free( c, bound, out );
  }
}

template<class Pred>
bool any_node( const formula& f, Pred&& pred )
{
  if ( pred( f ) )
    return true;
  for ( const auto& c : f.children() )
  {
    if ( any_node( c, pred ) )
      return true;
  }
  return false;
}

} // namespace

std::set<std::string> free_names( const formula& f )
{
  std::set<std::string> bound, out;
  collect_free( f, bound, out );
  return out;
}

std::set<std::string> bound_names( const formula& f )
{
  std::set<std::string> out;
  any_node( f, [&]( const formula& g ) {
    if ( g.is_binder() )
      out.insert( g.variable() );
    return false;
  } );
  return out;
}

std::set<std::string> actions_of( const formula& f )
{
  std::set<std::string> out;
  any_node( f, [&]( const formula& g ) {
    if ( g.is_modal() )
      out.insert( g.action() );
    if ( g.is_quantifier() )
    {
      out.insert( g.sig().cov.begin(), g.sig().cov.end() );
      out.insert( g.sig().contra.begin(), g.sig().contra.end() );
    }
    return false;
  } );
  return out;
}

bool has_quantifier( const formula& f )
{
  return any_node( f, []( const formula& g ) { return g.is_quantifier(); } );
}

bool has_fixpoint( const formula& f )
{
  return any_node( f, []( const formula& g ) { return g.is_binder(); } );
}

bool is_propositional( const formula& f )
{
  return !any_node( f, []( const formula& g ) { return g.is_modal() || g.is_quantifier() || g.is_binder(); } );
}

bool is_literal( const formula& f )
{
  switch ( f.kind() )
  {
  case op::top:
  case op::bot:
  case op::atom: return true;
  case op::neg: return f.child().is( op::atom );
  default: return false;
  }
}

std::size_t modal_depth( const formula& f )
{
  std::size_t d = 0;
  for ( const auto& c : f.children() )
    d = std::max( d, modal_depth( c ) );
  return f.is_modal() ? d + 1u : d;
}

} // namespace ccrmu
