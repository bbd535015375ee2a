#include <ccrmu/ccref.hpp>

#include <numeric>

namespace ccrmu
{

std::vector<state_pair> refinement_relation::pairs() const
{
  std::vector<state_pair> out;
  for ( std::size_t s = 0; s < rows.size(); ++s )
    rows[s].for_each( [&]( std::size_t t ) { out.emplace_back( s, t ); } );
  return out;
}

std::size_t refinement_relation::size() const
{
  std::size_t n = 0;
  for ( const auto& r : rows )
    n += r.count();
  return n;
}

namespace
{

struct clause_context
{
  const model& m;
  const model& n;
  std::vector<std::size_t> forth; // actions outside contra
  std::vector<std::size_t> back;  // actions outside cov

  clause_context( const model& mm, const model& nn, const signature& sig )
    : m( mm ), n( nn )
  {
    if ( !( m.alphabet() == n.alphabet() ) )
      throw error( errc::alphabet_mismatch, "refinement between models over different alphabets" );
    sig.validate( m.alphabet() );
    const auto& acts = m.alphabet().actions();
    for ( std::size_t a = 0; a < acts.size(); ++a )
    {
      if ( sig.contra.count( acts[a] ) == 0u )
        forth.push_back( a );
      if ( sig.cov.count( acts[a] ) == 0u )
        back.push_back( a );
    }
  }

  /// Atom agreement outside `p` for every pair, as rows.
  std::vector<state_set> atom_rows( const std::set<std::string>& p ) const
  {
    std::set<std::string> atoms = m.atoms();
    atoms.insert( n.atoms().begin(), n.atoms().end() );
    std::vector<state_set> rows( m.size(), state_set::full( n.size() ) );
    for ( const auto& atom : atoms )
    {
      if ( p.count( atom ) != 0u )
        continue;
      const auto vn = n.valuation( atom );
      const auto vn_not = vn.complement();
      for ( std::size_t s = 0; s < m.size(); ++s )
        rows[s] &= m.holds( atom, s ) ? vn : vn_not;
    }
    return rows;
  }

  bool moves_ok( std::size_t s, std::size_t t, const std::vector<state_set>& rows, const std::vector<state_set>& cols ) const
  {
    for ( auto a : forth )
    {
      const auto& tn = n.successor_set( a, t );
      for ( auto s2 : m.successors( a, s ) )
      {
        if ( !rows[s2].intersects( tn ) )
          return false;
      }
    }
    for ( auto a : back )
    {
      const auto& sm = m.successor_set( a, s );
      for ( auto t2 : n.successors( a, t ) )
      {
        if ( !cols[t2].intersects( sm ) )
          return false;
      }
    }
    return true;
  }
};

std::vector<state_set> columns( const std::vector<state_set>& rows, std::size_t left, std::size_t right )
{
  std::vector<state_set> cols( right, state_set( left ) );
  for ( std::size_t s = 0; s < left; ++s )
    rows[s].for_each( [&]( std::size_t t ) { cols[t].set( s ); } );
  return cols;
}

std::vector<std::size_t> identity_order( std::size_t n )
{
  std::vector<std::size_t> v( n );
  std::iota( v.begin(), v.end(), std::size_t{ 0 } );
  return v;
}

} // namespace

bool verify_relation( const std::vector<state_pair>& pairs, const model& m, const model& n,
                      const std::set<std::string>& p, const signature& sig )
{
  const clause_context ctx( m, n, sig );
  std::vector<state_set> rows( m.size(), state_set( n.size() ) );
  for ( const auto& [s, t] : pairs )
  {
    if ( s >= m.size() || t >= n.size() )
      throw error( errc::unknown_state, "relation pair outside the models" );
    rows[s].set( t );
  }
  const auto atoms = ctx.atom_rows( p );
  const auto cols = columns( rows, m.size(), n.size() );
  for ( const auto& [s, t] : pairs )
  {
    if ( !atoms[s].test( t ) || !ctx.moves_ok( s, t, rows, cols ) )
      return false;
  }
  return true;
}

refinement_relation largest_refinement( const model& m, const model& n, const std::set<std::string>& p,
                                        const signature& sig, const std::vector<std::size_t>& left_order,
                                        const std::vector<std::size_t>& right_order )
{
  const clause_context ctx( m, n, sig );
  const auto lo = left_order.empty() ? identity_order( m.size() ) : left_order;
  const auto ro = right_order.empty() ? identity_order( n.size() ) : right_order;
  if ( lo.size() != m.size() || ro.size() != n.size() )
    throw error( errc::invalid_argument, "deletion order must permute the states" );

  auto rows = ctx.atom_rows( p );
  auto cols = columns( rows, m.size(), n.size() );
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( auto s : lo )
    {
      for ( auto t : ro )
      {
        if ( rows[s].test( t ) && !ctx.moves_ok( s, t, rows, cols ) )
        {
          rows[s].reset( t );
          cols[t].reset( s );
          changed = true;
        }
      }
    }
  }
  return refinement_relation{ std::move( rows ), p, sig };
}

bool refines( const pointed_model& pm, const pointed_model& pn, const std::set<std::string>& p, const signature& sig )
{
  return largest_refinement( pm.m, pn.m, p, sig ).contains( pm.point, pn.point );
}

} // namespace ccrmu
