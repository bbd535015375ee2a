#include <ccrmu/dnf.hpp>
#include <ccrmu/syntax.hpp>

#include <algorithm>
#include <map>

namespace ccrmu
{

namespace
{

struct clause
{
  std::vector<formula> props;
  std::map<std::string, formula_set> covers;
};

formula df_of_nnf( const formula& f );

void push_unique( std::vector<formula>& v, const formula& f )
{
  if ( std::find( v.begin(), v.end(), f ) == v.end() )
    v.push_back( f );
}

/// Every member set nabla_b R with R a relation between `phi` and `psi`
/// that is total on both sides.
std::vector<formula_set> cover_meet( const formula_set& phi, const formula_set& psi )
{
  if ( phi.empty() || psi.empty() )
    return phi.empty() && psi.empty() ? std::vector<formula_set>{ {} } : std::vector<formula_set>{};
  const std::vector<formula> l( phi.begin(), phi.end() );
  const std::vector<formula> r( psi.begin(), psi.end() );
  const auto cells = l.size() * r.size();
  if ( cells > 20u )
    throw error( errc::invalid_argument, "cover meet too large to expand" );
  std::map<std::pair<std::size_t, std::size_t>, formula> meets;
  std::vector<formula_set> out;
  for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << cells ); ++mask )
  {
    std::vector<bool> left_hit( l.size() ), right_hit( r.size() );
    for ( std::size_t c = 0; c < cells; ++c )
    {
      if ( ( mask >> c ) & 1u )
      {
        left_hit[c / r.size()] = true;
        right_hit[c % r.size()] = true;
      }
    }
    if ( std::find( left_hit.begin(), left_hit.end(), false ) != left_hit.end() ||
         std::find( right_hit.begin(), right_hit.end(), false ) != right_hit.end() )
      continue;
    formula_set members;
    bool dead = false;
    for ( std::size_t c = 0; c < cells && !dead; ++c )
    {
      if ( ( ( mask >> c ) & 1u ) == 0u )
        continue;
      const auto key = std::make_pair( c / r.size(), c % r.size() );
      auto it = meets.find( key );
      if ( it == meets.end() )
        it = meets.emplace( key, df_of_nnf( conj( l[key.first], r[key.second] ) ) ).first;
      if ( it->second.is( op::bot ) )
        dead = true;
      else
        members.insert( it->second );
    }
    if ( !dead && std::find( out.begin(), out.end(), members ) == out.end() )
      out.push_back( std::move( members ) );
  }
  return out;
}

std::vector<clause> meet( const clause& a, const clause& b )
{
  std::vector<clause> acc{ clause{ a.props, {} } };
  for ( const auto& p : b.props )
    push_unique( acc.front().props, p );
  std::set<std::string> actions;
  for ( const auto& [act, _] : a.covers )
    actions.insert( act );
  for ( const auto& [act, _] : b.covers )
    actions.insert( act );
  for ( const auto& act : actions )
  {
    const auto ia = a.covers.find( act );
    const auto ib = b.covers.find( act );
    std::vector<formula_set> options;
    if ( ia == a.covers.end() )
      options = { ib->second };
    else if ( ib == b.covers.end() )
      options = { ia->second };
    else
      options = cover_meet( ia->second, ib->second );
    std::vector<clause> next;
    for ( const auto& c : acc )
    {
      for ( const auto& members : options )
      {
        auto d = c;
        d.covers[act] = members;
        next.push_back( std::move( d ) );
      }
    }
    acc = std::move( next );
  }
  return acc;
}

std::vector<clause> expand( const formula& f )
{
  switch ( f.kind() )
  {
  case op::top: return { clause{} };
  case op::bot: return {};
  case op::atom:
  case op::neg: return { clause{ { f }, {} } };
  case op::disj:
  {
    auto out = expand( f.lhs() );
    for ( auto& c : expand( f.rhs() ) )
      out.push_back( std::move( c ) );
    return out;
  }
  case op::conj:
  {
    const auto left = expand( f.lhs() );
    const auto right = expand( f.rhs() );
    std::vector<clause> out;
    for ( const auto& a : left )
    {
      for ( const auto& b : right )
      {
        for ( auto& c : meet( a, b ) )
          out.push_back( std::move( c ) );
      }
    }
    return out;
  }
  case op::box:
  {
    clause empty, one;
    empty.covers[f.action()] = {};
    const auto g = df_of_nnf( f.child() );
    if ( g.is( op::bot ) )
      return { empty };
    one.covers[f.action()] = { g };
    return { empty, one };
  }
  case op::diamond:
  {
    const auto g = df_of_nnf( f.child() );
    if ( g.is( op::bot ) )
      return {};
    clause c;
    c.covers[f.action()] = { g, top() };
    return { c };
  }
  case op::cover:
  {
    clause c;
    auto& members = c.covers[f.action()];
    for ( const auto& m : f.children() )
    {
      const auto g = df_of_nnf( m );
      if ( g.is( op::bot ) )
        return {};
      members.insert( g );
    }
    return { c };
  }
  default: throw error( errc::invalid_argument, "unexpected node in disjunctive form", f.text() );
  }
}

formula df_of_nnf( const formula& f )
{
  std::vector<formula> disjuncts;
  for ( const auto& c : expand( f ) )
  {
    std::vector<formula> items;
    bool dead = false;
    for ( const auto& p : c.props )
    {
      if ( p.is( op::bot ) )
        dead = true;
      if ( !p.is( op::top ) )
        items.push_back( p );
    }
    if ( dead )
      continue;
    for ( const auto& [act, members] : c.covers )
      items.push_back( cover( act, std::vector<formula>( members.begin(), members.end() ) ) );
    push_unique( disjuncts, conj_all( items ) );
  }
  if ( std::find( disjuncts.begin(), disjuncts.end(), top() ) != disjuncts.end() )
    return top();
  return disj_all( disjuncts );
}

} // namespace

formula to_df( const formula& f )
{
  if ( has_quantifier( f ) )
    throw error( errc::quantifier_present, "refinement quantifier in disjunctive-form conversion", f.text() );
  if ( has_fixpoint( f ) )
    throw error( errc::fixpoint_present, "fixpoints are outside the disjunctive-form conversion", f.text() );
  return df_of_nnf( nnf( f ) );
}

formula ensure_df( const formula& f )
{
  if ( is_df( f ) )
    return f;
  if ( !has_fixpoint( f ) )
    return to_df( f );
  throw error( errc::not_disjunctive, "fixpoint formula is not in disjunctive form", f.text() );
}

} // namespace ccrmu
