#include <ccrmu/ccref.hpp>
#include <ccrmu/dnf.hpp>
#include <ccrmu/elim.hpp>
#include <ccrmu/mc.hpp>
#include <ccrmu/search.hpp>
#include <ccrmu/syntax.hpp>

#include <map>

namespace ccrmu
{

std::string_view to_string( truth t ) noexcept
{
  switch ( t )
  {
  case truth::no: return "False";
  case truth::yes: return "True";
  case truth::undetermined: return "Undetermined";
  }
  return "Undetermined";
}

std::string_view to_string( undetermined_reason r ) noexcept
{
  switch ( r )
  {
  case undetermined_reason::none: return "";
  case undetermined_reason::not_disjunctive: return "NotDisjunctive";
  case undetermined_reason::side_condition_unknown: return "SideConditionUnknown";
  case undetermined_reason::bound_exhausted: return "BoundExhausted";
  case undetermined_reason::unsupported_signature: return "UnsupportedSignature";
  }
  return "";
}

namespace
{

bool prop_holds( const formula& f, const std::set<std::string>& on )
{
  switch ( f.kind() )
  {
  case op::top: return true;
  case op::bot: return false;
  case op::atom: return on.count( f.name() ) != 0u;
  case op::neg: return !prop_holds( f.child(), on );
  case op::conj: return prop_holds( f.lhs(), on ) && prop_holds( f.rhs(), on );
  case op::disj: return prop_holds( f.lhs(), on ) || prop_holds( f.rhs(), on );
  default: throw error( errc::invalid_argument, "not propositional", f.text() );
  }
}

bool prop_sat( const formula& f )
{
  const auto names = free_names( f );
  const std::vector<std::string> atoms( names.begin(), names.end() );
  if ( atoms.size() > 20u )
    throw error( errc::invalid_argument, "too many atoms for truth-table satisfiability", f.text() );
  for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << atoms.size() ); ++mask )
  {
    std::set<std::string> on;
    for ( std::size_t i = 0; i < atoms.size(); ++i )
    {
      if ( ( mask >> i ) & 1u )
        on.insert( atoms[i] );
    }
    if ( prop_holds( f, on ) )
      return true;
  }
  return false;
}

// A df clause is satisfiable iff its propositional part is and every cover
// member is: the root gets one successor per member, per action.
bool df_sat( const formula& f )
{
  if ( f.is( op::disj ) )
    return df_sat( f.lhs() ) || df_sat( f.rhs() );
  std::vector<formula> props;
  for ( const auto& c : flatten( f, op::conj ) )
  {
    if ( c.is( op::cover ) )
    {
      for ( const auto& m : c.children() )
      {
        if ( !df_sat( m ) )
          return false;
      }
    }
    else
    {
      props.push_back( c );
    }
  }
  return prop_sat( conj_all( props ) );
}

class eliminator
{
public:
  eliminator( std::string a1, std::string a2, const elim_caps& caps )
    : _a1( std::move( a1 ) ), _a2( std::move( a2 ) ), _caps( caps )
  {
  }

  formula run( const formula& f )
  {
    if ( is_propositional( f ) )
      return f;
    switch ( f.kind() )
    {
    case op::disj: return disj( run( f.lhs() ), run( f.rhs() ) );
    case op::nu: return nu( f.variable(), run( f.body() ) );
    case op::mu:
    {
      const auto v = unsat_k( f, _caps );
      if ( v.is_yes() )
        return bot();
      if ( v.is_undetermined() )
        throw error( errc::side_condition_unknown, "cannot decide whether the least fixpoint is satisfiable", f.text() );
      return mu( f.variable(), run( f.body() ) );
    }
    case op::conj:
    case op::cover: return junction( f );
    default: throw error( errc::not_disjunctive, "formula is not in disjunctive form", f.text() );
    }
  }

private:
  formula junction( const formula& f )
  {
    std::vector<formula> props, covers, others;
    for ( const auto& c : flatten( f, op::conj ) )
    {
      if ( is_propositional( c ) )
        props.push_back( c );
      else if ( c.is( op::cover ) )
        covers.push_back( c );
      else
        others.push_back( c );
    }
    std::vector<formula> items = props;
    if ( !others.empty() )
    {
      // alpha & phi with a single df remainder
      if ( others.size() > 1u || !covers.empty() )
        throw error( errc::not_disjunctive, "conjunction is not in disjunctive form", f.text() );
      items.push_back( run( others.front() ) );
      return conj_all( items );
    }
    std::set<std::string> seen;
    for ( const auto& c : covers )
    {
      if ( !seen.insert( c.action() ).second )
        throw error( errc::not_disjunctive, "two covers for action '" + c.action() + "' in one conjunction", f.text() );
      auto g = cover_case( c );
      if ( g.is( op::bot ) )
        return bot();
      items.push_back( g );
    }
    return conj_all( items );
  }

  formula cover_case( const formula& c )
  {
    const auto members = c.children();
    if ( c.action() == _a1 )
    {
      bool unknown = false;
      for ( const auto& beta : members )
      {
        const auto v = unsat_k( beta, _caps );
        if ( v.is_yes() )
          return bot();
        unknown = unknown || v.is_undetermined();
      }
      if ( unknown )
        throw error( errc::side_condition_unknown, "cannot decide satisfiability of a covariant cover member", c.text() );
      std::vector<formula> parts;
      for ( const auto& beta : members )
        parts.push_back( run( beta ) );
      return box( _a1, disj_all( parts ) );
    }
    if ( c.action() == _a2 )
    {
      std::vector<formula> parts;
      for ( const auto& phi : members )
        parts.push_back( diamond( _a2, run( phi ) ) );
      return conj_all( parts );
    }
    std::vector<formula> parts;
    for ( const auto& phi : members )
      parts.push_back( run( phi ) );
    return cover( c.action(), std::move( parts ) );
  }

  std::string _a1, _a2;
  const elim_caps& _caps;
};

formula eliminate_signature( const signature& sig, formula g, const formula& whole, const elim_caps& caps )
{
  if ( sig.empty_side() )
    throw error( errc::unsupported_signature, "elimination needs non-empty covariant and contravariant sets", whole.text() );
  std::vector<std::pair<std::string, std::string>> chain;
  for ( const auto& a1 : sig.cov )
  {
    for ( const auto& a2 : sig.contra )
      chain.emplace_back( a1, a2 );
  }
  // the last quantifier of the chain is the innermost
  for ( auto it = chain.rbegin(); it != chain.rend(); ++it )
  {
    try
    {
      g = simplify( eliminate_one( it->first, it->second, ensure_df( g ), caps ) );
    }
    catch ( const error& e )
    {
      throw error( e.code(), std::string( e.what() ) + " (in " + whole.text() + ")", e.subject() );
    }
  }
  return g;
}

formula eliminate_rec( const formula& f, const elim_caps& caps )
{
  if ( !has_quantifier( f ) )
    return f;
  std::vector<formula> kids;
  for ( const auto& c : f.children() )
    kids.push_back( eliminate_rec( c, caps ) );
  switch ( f.kind() )
  {
  case op::exists: return eliminate_signature( f.sig(), kids[0], f, caps );
  case op::forall:
  {
    auto inner = eliminate_signature( f.sig(), nnf( neg( kids[0] ) ), f, caps );
    return simplify( nnf( neg( inner ) ) );
  }
  case op::neg: return neg( kids[0] );
  case op::conj: return conj( kids[0], kids[1] );
  case op::disj: return disj( kids[0], kids[1] );
  case op::box: return box( f.action(), kids[0] );
  case op::diamond: return diamond( f.action(), kids[0] );
  case op::cover: return cover( f.action(), std::move( kids ) );
  case op::mu: return mu( f.variable(), kids[0] );
  case op::nu: return nu( f.variable(), kids[0] );
  default: return f;
  }
}

undetermined_reason reason_of( errc code )
{
  switch ( code )
  {
  case errc::not_disjunctive: return undetermined_reason::not_disjunctive;
  case errc::unsupported_signature: return undetermined_reason::unsupported_signature;
  default: return undetermined_reason::side_condition_unknown;
  }
}

bool folds_into_verdict( errc code )
{
  return code == errc::not_disjunctive || code == errc::side_condition_unknown || code == errc::unsupported_signature ||
         code == errc::invalid_argument;
}

verdict and3( verdict a, verdict b )
{
  if ( a.is_no() || b.is_yes() )
    return a;
  return b;
}

verdict not3( verdict v )
{
  if ( v.is_yes() )
    return verdict::no();
  if ( v.is_no() )
    return verdict::yes();
  return v;
}

/// Three-valued evaluation used when elimination fails: quantifiers are
/// decided one-sidedly by bounded witness search.
class fallback
{
public:
  fallback( std::size_t bound, const elim_caps& caps, verdict why )
    : _bound( bound ), _caps( caps ), _why( std::move( why ) )
  {
  }

  verdict eval( const pointed_model& pm, const formula& f )
  {
    if ( !has_quantifier( f ) )
      return verdict::of( check( pm, f ) );
    try
    {
      return verdict::of( check( pm, eliminate( f, _caps ) ) );
    }
    catch ( const error& e )
    {
      if ( !folds_into_verdict( e.code() ) )
        throw;
    }
    switch ( f.kind() )
    {
    case op::neg: return not3( eval( pm, f.child() ) );
    case op::conj:
    case op::disj:
    {
      const bool is_and = f.is( op::conj );
      const auto l = eval( pm, f.lhs() );
      if ( is_and ? l.is_no() : l.is_yes() )
        return l;
      const auto r = eval( pm, f.rhs() );
      if ( is_and ? r.is_no() : r.is_yes() )
        return r;
      return l.is_undetermined() ? l : r;
    }
    case op::box:
    case op::diamond:
    {
      const bool is_box = f.is( op::box );
      const auto a = pm.m.alphabet().index_of( f.action() );
      std::optional<verdict> unknown;
      for ( auto t : pm.m.successors( a, pm.point ) )
      {
        auto v = eval( pointed_model( pm.m, t ), f.child() );
        if ( is_box ? v.is_no() : v.is_yes() )
          return v;
        if ( v.is_undetermined() && !unknown )
          unknown = v;
      }
      if ( unknown )
        return *unknown;
      return verdict::of( is_box );
    }
    case op::cover:
    {
      // [b] of the disjunction, <b> of each member
      std::vector<formula> members( f.children().begin(), f.children().end() );
      auto v = eval( pm, box( f.action(), disj_all( members ) ) );
      for ( const auto& g : members )
        v = and3( v, eval( pm, diamond( f.action(), g ) ) );
      return v;
    }
    case op::exists:
    case op::forall: return quantifier( pm, f );
    default: return _why;
    }
  }

private:
  verdict quantifier( const pointed_model& pm, const formula& f )
  {
    const bool existential = f.is( op::exists );
    auto atom_set = free_names( f );
    atom_set.insert( pm.m.atoms().begin(), pm.m.atoms().end() );
    enumeration_options options;
    options.canonical = true;
    options.root_label = pm.m.label( pm.point );
    std::optional<verdict> decided;
    for_each_model( pm.m.alphabet(), std::vector<std::string>( atom_set.begin(), atom_set.end() ), _bound, options,
                    [&]( const pointed_model& cand ) {
                      if ( !refines( pm, cand, {}, f.sig() ) )
                        return true;
                      const auto v = eval( cand, f.child() );
                      if ( existential && v.is_yes() )
                        decided = verdict::yes();
                      else if ( !existential && v.is_no() )
                        decided = verdict::no();
                      return !decided;
                    } );
    if ( decided )
      return *decided;
    return verdict::unknown( undetermined_reason::bound_exhausted,
                             "no decisive refinement with at most " + std::to_string( _bound ) + " states for " + f.text() );
  }

  std::size_t _bound;
  const elim_caps& _caps;
  verdict _why;
};

} // namespace

verdict unsat_k( const formula& f, const elim_caps& caps )
{
  if ( has_quantifier( f ) )
    throw error( errc::quantifier_present, "refinement quantifier in satisfiability query", f.text() );
  const auto s = simplify( f );
  if ( s.is( op::bot ) )
    return verdict::yes();
  if ( s.is( op::top ) )
    return verdict::no();
  if ( !has_fixpoint( s ) && modal_depth( s ) <= caps.depth )
    return verdict::of( !df_sat( to_df( s ) ) );

  auto acts = actions_of( s );
  if ( acts.empty() )
    acts.insert( "a" );
  const action_alphabet alphabet( std::vector<std::string>( acts.begin(), acts.end() ) );
  const auto names = free_names( s );
  enumeration_options options;
  options.canonical = true;
  std::size_t budget = caps.max_candidates;
  bool found = false;
  for_each_model( alphabet, std::vector<std::string>( names.begin(), names.end() ), caps.states, options,
                  [&]( const pointed_model& cand ) {
                    if ( budget == 0u )
                      return false;
                    --budget;
                    found = check( cand, s );
                    return !found;
                  } );
  if ( found )
    return verdict::no();
  return verdict::unknown( undetermined_reason::bound_exhausted,
                           "no model with at most " + std::to_string( caps.states ) + " states for " + s.text() );
}

formula eliminate_one( const std::string& a1, const std::string& a2, const formula& f, const elim_caps& caps )
{
  if ( a1 == a2 )
    throw error( errc::invalid_argument, "covariant and contravariant action must differ", a1 );
  if ( has_quantifier( f ) )
    throw error( errc::quantifier_present, "nested quantifier in single elimination step", f.text() );
  return eliminator( a1, a2, caps ).run( f );
}

formula eliminate( const formula& f, const elim_caps& caps ) { return simplify( eliminate_rec( f, caps ) ); }

verdict check_cc( const pointed_model& pm, const formula& f, const check_options& options )
{
  verdict why;
  try
  {
    return verdict::of( check( pm, eliminate( f, options.caps ) ) );
  }
  catch ( const error& e )
  {
    if ( !folds_into_verdict( e.code() ) )
      throw;
    why = verdict::unknown( reason_of( e.code() ), e.what() );
  }
  if ( !options.fallback_bound )
    return why;
  return fallback( *options.fallback_bound, options.caps, why ).eval( pm, f );
}

} // namespace ccrmu
