#include <ccrmu/syntax.hpp>

#include <algorithm>

namespace ccrmu
{

namespace
{

// `flipped` holds bound variables whose occurrences stand for their own
// negation (the `[!q/q]` of a negated fixpoint).
formula nnf_rec( const formula& f, bool negate, std::set<std::string>& flipped )
{
  switch ( f.kind() )
  {
  case op::top: return negate ? bot() : f;
  case op::bot: return negate ? top() : f;
  case op::atom:
    return ( negate != ( flipped.count( f.name() ) != 0u ) ) ? neg( f ) : f;
  case op::neg: return nnf_rec( f.child(), !negate, flipped );
  case op::conj:
  case op::disj:
  {
    auto l = nnf_rec( f.lhs(), negate, flipped );
    auto r = nnf_rec( f.rhs(), negate, flipped );
    return ( f.is( op::conj ) != negate ) ? conj( l, r ) : disj( l, r );
  }
  case op::box:
  case op::diamond:
  {
    auto c = nnf_rec( f.child(), negate, flipped );
    return ( f.is( op::box ) != negate ) ? box( f.action(), c ) : diamond( f.action(), c );
  }
  case op::cover:
  {
    if ( !negate )
    {
      std::vector<formula> members;
      for ( const auto& m : f.children() )
        members.push_back( nnf_rec( m, false, flipped ) );
      return cover( f.action(), std::move( members ) );
    }
    // !nabla_b F  ==  <b>(&_{g in F} !g)  |  |_{g in F} [b]!g
    std::vector<formula> negated;
    for ( const auto& m : f.children() )
      negated.push_back( nnf_rec( m, true, flipped ) );
    std::vector<formula> parts{ diamond( f.action(), conj_all( negated ) ) };
    for ( const auto& g : negated )
      parts.push_back( box( f.action(), g ) );
    return disj_all( parts );
  }
  case op::exists:
  case op::forall:
  {
    auto c = nnf_rec( f.child(), negate, flipped );
    return ( f.is( op::exists ) != negate ) ? exists( f.sig(), c ) : forall( f.sig(), c );
  }
  case op::mu:
  case op::nu:
  {
    const bool was = flipped.count( f.variable() ) != 0u;
    if ( negate )
      flipped.insert( f.variable() );
    else
      flipped.erase( f.variable() );
    auto body = nnf_rec( f.body(), negate, flipped );
    if ( was )
      flipped.insert( f.variable() );
    else
      flipped.erase( f.variable() );
    return ( f.is( op::mu ) != negate ) ? mu( f.variable(), body ) : nu( f.variable(), body );
  }
  }
  return f;
}

formula rebuild( const formula& f, std::vector<formula> kids )
{
  switch ( f.kind() )
  {
  case op::neg: return neg( kids[0] );
  case op::conj: return conj( kids[0], kids[1] );
  case op::disj: return disj( kids[0], kids[1] );
  case op::box: return box( f.action(), kids[0] );
  case op::diamond: return diamond( f.action(), kids[0] );
  case op::cover: return cover( f.action(), std::move( kids ) );
  case op::exists: return exists( f.sig(), kids[0] );
  case op::forall: return forall( f.sig(), kids[0] );
  case op::mu: return mu( f.variable(), kids[0] );
  case op::nu: return nu( f.variable(), kids[0] );
  default: return f;
  }
}

formula subst_rec( const formula& f, const std::string& q, const formula& g, const std::set<std::string>& g_free )
{
  switch ( f.kind() )
  {
  case op::top:
  case op::bot: return f;
  case op::atom: return f.name() == q ? g : f;
  case op::mu:
  case op::nu:
  {
    if ( f.variable() == q )
      return f;
    const auto body_free = free_names( f.body() );
    if ( body_free.count( q ) == 0u )
      return f;
    if ( g_free.count( f.variable() ) == 0u )
      return fixpoint( f.kind(), f.variable(), subst_rec( f.body(), q, g, g_free ) );
    std::set<std::string> taken = body_free;
    taken.insert( g_free.begin(), g_free.end() );
    taken.insert( q );
    auto renamed = fresh_name( f.variable(), taken );
    auto body = subst_rec( f.body(), f.variable(), atom( renamed ), { renamed } );
    return fixpoint( f.kind(), renamed, subst_rec( body, q, g, g_free ) );
  }
  default:
  {
    std::vector<formula> kids;
    for ( const auto& c : f.children() )
      kids.push_back( subst_rec( c, q, g, g_free ) );
    return rebuild( f, std::move( kids ) );
  }
  }
}

/// True if `q` (free in `f`) appears as an immediate conjunct of some
/// conjunction of `f`.
bool conjoined( const formula& f, const std::string& q )
{
  switch ( f.kind() )
  {
  case op::conj:
    for ( const auto& c : flatten( f, op::conj ) )
    {
      if ( c.is( op::atom ) && c.name() == q )
        return true;
      if ( conjoined( c, q ) )
        return true;
    }
    return false;
  case op::mu:
  case op::nu:
    return f.variable() != q && conjoined( f.body(), q );
  default:
    for ( const auto& c : f.children() )
    {
      if ( conjoined( c, q ) )
        return true;
    }
    return false;
  }
}

bool df_rec( const formula& f )
{
  if ( is_propositional( f ) )
    return true;
  switch ( f.kind() )
  {
  case op::disj: return df_rec( f.lhs() ) && df_rec( f.rhs() );
  case op::conj:
  case op::cover:
  {
    std::set<std::string> seen;
    for ( const auto& c : flatten( f, op::conj ) )
    {
      if ( is_propositional( c ) )
        continue;
      if ( !c.is( op::cover ) || !seen.insert( c.action() ).second )
        return false;
      for ( const auto& m : c.children() )
      {
        if ( !df_rec( m ) )
          return false;
      }
    }
    return true;
  }
  case op::mu:
  case op::nu:
    return df_rec( f.body() ) && occurs_positively( f.body(), f.variable() ) && !conjoined( f.body(), f.variable() );
  default: return false;
  }
}

bool complementary( const std::vector<formula>& items )
{
  for ( const auto& x : items )
  {
    if ( !x.is( op::neg ) )
      continue;
    if ( std::find( items.begin(), items.end(), x.child() ) != items.end() )
      return true;
  }
  return false;
}

formula simplify_junction( const formula& f )
{
  const bool is_and = f.is( op::conj );
  const auto unit = is_and ? top() : bot();
  const auto zero = is_and ? bot() : top();
  std::vector<formula> items;
  for ( const auto& c : flatten( f, f.kind() ) )
  {
    auto s = simplify( c );
    if ( s == zero )
      return zero;
    if ( s == unit )
      continue;
    for ( auto& part : flatten( s, f.kind() ) )
    {
      if ( std::find( items.begin(), items.end(), part ) == items.end() )
        items.push_back( std::move( part ) );
    }
  }
  if ( complementary( items ) )
    return zero;
  if ( is_and )
  {
    // <b>true is implied by any other <b>g
    std::vector<formula> kept;
    for ( const auto& x : items )
    {
      const bool weak = x.is( op::diamond ) && x.child().is( op::top ) &&
                        std::any_of( items.begin(), items.end(), [&]( const formula& y ) {
                          return y.is( op::diamond ) && y.action() == x.action() && !y.child().is( op::top );
                        } );
      if ( !weak )
        kept.push_back( x );
    }
    items = std::move( kept );
  }
  return is_and ? conj_all( items ) : disj_all( items );
}

} // namespace

formula nnf( const formula& f )
{
  std::set<std::string> flipped;
  return nnf_rec( f, false, flipped );
}

std::string fresh_name( const std::string& base, const std::set<std::string>& taken )
{
  std::string name = base;
  while ( taken.count( name ) != 0u )
    name += '\'';
  return name;
}

formula substitute( const formula& f, const std::string& q, const formula& g )
{
  return subst_rec( f, q, g, free_names( g ) );
}

bool is_df( const formula& f )
{
  if ( has_quantifier( f ) )
    throw error( errc::quantifier_present, "refinement quantifier in df check", f.text() );
  return df_rec( f );
}

formula simplify( const formula& f )
{
  switch ( f.kind() )
  {
  case op::top:
  case op::bot:
  case op::atom: return f;
  case op::neg:
  {
    auto c = simplify( f.child() );
    if ( c.is( op::top ) )
      return bot();
    if ( c.is( op::bot ) )
      return top();
    if ( c.is( op::neg ) )
      return c.child();
    return neg( c );
  }
  case op::conj:
  case op::disj: return simplify_junction( f );
  case op::box: return box( f.action(), simplify( f.child() ) );
  case op::diamond:
  {
    auto c = simplify( f.child() );
    return c.is( op::bot ) ? bot() : diamond( f.action(), c );
  }
  case op::cover:
  {
    std::vector<formula> members;
    for ( const auto& m : f.children() )
    {
      auto s = simplify( m );
      if ( s.is( op::bot ) )
        return bot();
      members.push_back( s );
    }
    return cover( f.action(), std::move( members ) );
  }
  case op::exists:
  case op::forall:
  {
    auto c = simplify( f.child() );
    if ( c.is( op::top ) || c.is( op::bot ) )
      return c;
    return f.is( op::exists ) ? exists( f.sig(), c ) : forall( f.sig(), c );
  }
  case op::mu:
  case op::nu:
  {
    auto body = simplify( f.body() );
    if ( body.is( op::atom ) && body.name() == f.variable() )
      return f.is( op::mu ) ? bot() : top();
    if ( free_names( body ).count( f.variable() ) == 0u )
      return body;
    return fixpoint( f.kind(), f.variable(), body );
  }
  }
  return f;
}

} // namespace ccrmu
