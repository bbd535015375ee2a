#include <ccrmu/model.hpp>

#include <algorithm>
#include <functional>

namespace ccrmu
{

model::model( action_alphabet alphabet, std::vector<std::string> states, std::set<std::string> atoms )
  : _alphabet( std::move( alphabet ) ), _states( std::move( states ) )
{
  if ( _alphabet.size() == 0u )
    throw error( errc::invalid_model, "model alphabet must not be empty" );
  if ( _states.empty() )
    throw error( errc::invalid_model, "models must have at least one state" );
  for ( std::size_t i = 0; i < _states.size(); ++i )
  {
    if ( _states[i].empty() )
      throw error( errc::invalid_model, "state ids must be non-empty" );
    if ( !_index.emplace( _states[i], i ).second )
      throw error( errc::invalid_model, "duplicate state '" + _states[i] + "'", _states[i] );
  }
  const auto n = _states.size();
  const auto k = _alphabet.size();
  _succ.assign( k, std::vector<std::vector<std::size_t>>( n ) );
  _pred.assign( k, std::vector<std::vector<std::size_t>>( n ) );
  _succ_set.assign( k, std::vector<state_set>( n, state_set( n ) ) );
  for ( const auto& a : atoms )
    declare_atom( a );
}

std::size_t model::index_of( const std::string& id ) const
{
  const auto it = _index.find( id );
  if ( it == _index.end() )
    throw error( errc::unknown_state, "unknown state '" + id + "'", id );
  return it->second;
}

state_set model::state_set_of( const std::set<std::string>& ids ) const
{
  state_set out( size() );
  for ( const auto& id : ids )
    out.set( index_of( id ) );
  return out;
}

std::set<std::string> model::ids_of( const state_set& s ) const
{
  std::set<std::string> out;
  s.for_each( [&]( std::size_t i ) { out.insert( _states[i] ); } );
  return out;
}

void model::add_transition( std::size_t from, std::size_t action, std::size_t to )
{
  if ( _succ_set[action][from].test( to ) )
    return;
  _succ_set[action][from].set( to );
  auto& succ = _succ[action][from];
  succ.insert( std::upper_bound( succ.begin(), succ.end(), to ), to );
  auto& pred = _pred[action][to];
  pred.insert( std::upper_bound( pred.begin(), pred.end(), from ), from );
}

void model::add_transition( const std::string& from, const std::string& action, const std::string& to )
{
  add_transition( index_of( from ), _alphabet.index_of( action ), index_of( to ) );
}

state_set model::pre_exists( std::size_t action, const state_set& target ) const
{
  state_set out( size() );
  for ( std::size_t s = 0; s < size(); ++s )
  {
    if ( _succ_set[action][s].intersects( target ) )
      out.set( s );
  }
  return out;
}

state_set model::pre_forall( std::size_t action, const state_set& target ) const
{
  state_set out( size() );
  for ( std::size_t s = 0; s < size(); ++s )
  {
    if ( _succ_set[action][s].is_subset_of( target ) )
      out.set( s );
  }
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> model::transitions() const
{
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for ( std::size_t a = 0; a < num_actions(); ++a )
  {
    for ( std::size_t s = 0; s < size(); ++s )
    {
      for ( auto t : _succ[a][s] )
        out.emplace_back( s, a, t );
    }
  }
  return out;
}

std::size_t model::num_transitions() const
{
  std::size_t n = 0;
  for ( const auto& per_action : _succ )
  {
    for ( const auto& succ : per_action )
      n += succ.size();
  }
  return n;
}

void model::declare_atom( const std::string& atom )
{
  if ( atom.empty() )
    throw error( errc::invalid_model, "atom names must be non-empty" );
  if ( _atoms.insert( atom ).second )
    _valuation.emplace( atom, state_set( size() ) );
}

state_set model::valuation( const std::string& atom ) const
{
  const auto it = _valuation.find( atom );
  return it == _valuation.end() ? state_set( size() ) : it->second;
}

bool model::holds( const std::string& atom, std::size_t s ) const
{
  const auto it = _valuation.find( atom );
  return it != _valuation.end() && it->second.test( s );
}

void model::set_valuation( const std::string& atom, state_set states )
{
  declare_atom( atom );
  _valuation[atom] = std::move( states );
}

void model::set_atom( const std::string& atom, std::size_t s, bool value )
{
  declare_atom( atom );
  _valuation[atom].assign( s, value );
}

std::set<std::string> model::label( std::size_t s ) const
{
  std::set<std::string> out;
  for ( const auto& [atom, ext] : _valuation )
  {
    if ( ext.test( s ) )
      out.insert( atom );
  }
  return out;
}

bool operator==( const model& a, const model& b )
{
  if ( !( a._alphabet == b._alphabet ) || a.size() != b.size() )
    return false;
  for ( const auto& id : a._states )
  {
    if ( !b.has_state( id ) )
      return false;
  }
  std::vector<std::size_t> map( a.size() );
  for ( std::size_t s = 0; s < a.size(); ++s )
    map[s] = b.index_of( a._states[s] );
  for ( std::size_t act = 0; act < a.num_actions(); ++act )
  {
    for ( std::size_t s = 0; s < a.size(); ++s )
    {
      if ( a._succ[act][s].size() != b._succ[act][map[s]].size() )
        return false;
      for ( auto t : a._succ[act][s] )
      {
        if ( !b.has_transition( act, map[s], map[t] ) )
          return false;
      }
    }
  }
  for ( std::size_t s = 0; s < a.size(); ++s )
  {
    if ( a.label( s ) != b.label( map[s] ) )
      return false;
  }
  return true;
}

pointed_model::pointed_model( model mm, std::size_t p )
  : m( std::move( mm ) ), point( p )
{
  if ( point >= m.size() )
    throw error( errc::unknown_state, "point outside the model" );
}

pointed_model::pointed_model( model mm, const std::string& point_id )
  : m( std::move( mm ) ), point( m.index_of( point_id ) )
{
}

namespace
{

/// Submodel on `keep` (in original order), with ids optionally rewritten.
model restrict_to( const model& m, const state_set& keep )
{
  std::vector<std::string> ids;
  std::vector<std::size_t> map( m.size(), m.size() );
  keep.for_each( [&]( std::size_t s ) {
    map[s] = ids.size();
    ids.push_back( m.id( s ) );
  } );
  model out( m.alphabet(), ids, m.atoms() );
  for ( const auto& [s, a, t] : m.transitions() )
  {
    if ( keep.test( s ) && keep.test( t ) )
      out.add_transition( map[s], a, map[t] );
  }
  for ( const auto& atom : m.atoms() )
  {
    m.valuation( atom ).for_each( [&]( std::size_t s ) {
      if ( keep.test( s ) )
        out.set_atom( atom, map[s] );
    } );
  }
  return out;
}

void copy_into( model& out, const model& part, const std::vector<std::size_t>& map, const state_set& keep )
{
  for ( const auto& [s, a, t] : part.transitions() )
  {
    if ( keep.test( s ) && keep.test( t ) )
      out.add_transition( map[s], a, map[t] );
  }
  for ( const auto& atom : part.atoms() )
  {
    out.declare_atom( atom );
    part.valuation( atom ).for_each( [&]( std::size_t s ) {
      if ( keep.test( s ) )
        out.set_atom( atom, map[s] );
    } );
  }
}

} // namespace

model disjoint_union( const model& m, const model& n )
{
  if ( !( m.alphabet() == n.alphabet() ) )
    throw error( errc::alphabet_mismatch, "disjoint union of models over different alphabets" );
  std::vector<std::string> ids = m.states();
  for ( const auto& id : n.states() )
  {
    if ( m.has_state( id ) )
      throw error( errc::state_clash, "state '" + id + "' occurs in both models", id );
    ids.push_back( id );
  }
  auto atoms = m.atoms();
  atoms.insert( n.atoms().begin(), n.atoms().end() );
  model out( m.alphabet(), ids, atoms );
  std::vector<std::size_t> left( m.size() ), right( n.size() );
  for ( std::size_t s = 0; s < m.size(); ++s )
    left[s] = s;
  for ( std::size_t s = 0; s < n.size(); ++s )
    right[s] = m.size() + s;
  copy_into( out, m, left, state_set::full( m.size() ) );
  copy_into( out, n, right, state_set::full( n.size() ) );
  return out;
}

model copy_rename( const model& m, const std::string& suffix )
{
  std::vector<std::string> ids;
  for ( const auto& id : m.states() )
    ids.push_back( id + suffix );
  model out( m.alphabet(), ids, m.atoms() );
  std::vector<std::size_t> map( m.size() );
  for ( std::size_t s = 0; s < m.size(); ++s )
    map[s] = s;
  copy_into( out, m, map, state_set::full( m.size() ) );
  return out;
}

pointed_model copy_rename( const pointed_model& pm, const std::string& suffix )
{
  return pointed_model( copy_rename( pm.m, suffix ), pm.point );
}

state_set descendants( const model& m, const state_set& from )
{
  state_set seen( m.size() );
  std::vector<std::size_t> stack = from.members();
  while ( !stack.empty() )
  {
    const auto s = stack.back();
    stack.pop_back();
    for ( std::size_t a = 0; a < m.num_actions(); ++a )
    {
      for ( auto t : m.successors( a, s ) )
      {
        if ( !seen.test( t ) )
        {
          seen.set( t );
          stack.push_back( t );
        }
      }
    }
  }
  return seen;
}

model generated_submodel( const model& m, const std::string& w )
{
  state_set root( m.size() );
  root.set( m.index_of( w ) );
  return restrict_to( m, root | descendants( m, root ) );
}

pointed_model unravel( const pointed_model& pm, std::optional<std::size_t> depth )
{
  const auto& m = pm.m;
  if ( !depth )
  {
    // acyclic from the point iff no reachable state is its own descendant
    state_set root( m.size() );
    root.set( pm.point );
    const auto reach = root | descendants( m, root );
    reach.for_each( [&]( std::size_t s ) {
      state_set one( m.size() );
      one.set( s );
      if ( descendants( m, one ).test( s ) )
        throw error( errc::cyclic_without_bound, "model is cyclic from '" + m.id( pm.point ) + "'", m.id( s ) );
    } );
  }
  struct path_state
  {
    std::string id;
    std::size_t origin;
    std::size_t length;
  };
  std::vector<path_state> nodes{ { m.id( pm.point ), pm.point, 0 } };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    if ( depth && nodes[i].length >= *depth )
      continue;
    for ( std::size_t a = 0; a < m.num_actions(); ++a )
    {
      for ( auto t : m.successors( a, nodes[i].origin ) )
      {
        edges.emplace_back( i, a, nodes.size() );
        nodes.push_back( { nodes[i].id + "/" + m.alphabet().actions()[a] + "/" + m.id( t ), t, nodes[i].length + 1 } );
      }
    }
  }
  std::vector<std::string> ids;
  for ( const auto& n : nodes )
    ids.push_back( n.id );
  model out( m.alphabet(), ids, m.atoms() );
  for ( const auto& [s, a, t] : edges )
    out.add_transition( s, a, t );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    for ( const auto& atom : m.label( nodes[i].origin ) )
      out.set_atom( atom, i );
  }
  return pointed_model( std::move( out ), std::size_t{ 0 } );
}

tree_report is_tree_like( const model& m )
{
  tree_report r;
  const auto n = m.size();
  // (i) a state from which every state is accessible
  for ( std::size_t s = 0; s < n && !r.root; ++s )
  {
    state_set one( n );
    one.set( s );
    if ( ( one | descendants( m, one ) ).count() == n )
      r.root = s;
  }
  if ( !r.root )
    r.failed.push_back( 1 );
  // (ii) at most one parent state
  for ( std::size_t t = 0; t < n; ++t )
  {
    std::set<std::size_t> parents;
    for ( std::size_t a = 0; a < m.num_actions(); ++a )
      parents.insert( m.predecessors( a, t ).begin(), m.predecessors( a, t ).end() );
    if ( parents.size() > 1u )
    {
      r.failed.push_back( 2 );
      break;
    }
  }
  // (iii) relations of distinct actions are disjoint
  bool disjoint = true;
  for ( std::size_t s = 0; s < n && disjoint; ++s )
  {
    for ( std::size_t a = 0; a < m.num_actions() && disjoint; ++a )
    {
      for ( std::size_t b = a + 1; b < m.num_actions() && disjoint; ++b )
      {
        if ( m.successor_set( a, s ).intersects( m.successor_set( b, s ) ) )
          disjoint = false;
      }
    }
  }
  if ( !disjoint )
    r.failed.push_back( 3 );
  // (iv) acyclic
  for ( std::size_t s = 0; s < n; ++s )
  {
    state_set one( n );
    one.set( s );
    if ( descendants( m, one ).test( s ) )
    {
      r.failed.push_back( 4 );
      break;
    }
  }
  r.tree_like = r.failed.empty();
  return r;
}

model prune( const model& m, const std::set<std::string>& t )
{
  const auto targets = m.state_set_of( t );
  return restrict_to( m, descendants( m, targets ).complement() );
}

bool eq_modulo( const model& m, const model& n, const std::set<std::string>& t )
{
  if ( !( m.alphabet() == n.alphabet() ) || m.size() != n.size() )
    return false;
  for ( const auto& id : m.states() )
  {
    if ( !n.has_state( id ) )
      return false;
  }
  for ( std::size_t a = 0; a < m.num_actions(); ++a )
  {
    for ( std::size_t s = 0; s < m.size(); ++s )
    {
      const auto ns = n.index_of( m.id( s ) );
      if ( m.successors( a, s ).size() != n.successors( a, ns ).size() )
        return false;
      for ( auto x : m.successors( a, s ) )
      {
        if ( !n.has_transition( a, ns, n.index_of( m.id( x ) ) ) )
          return false;
      }
    }
  }
  for ( std::size_t s = 0; s < m.size(); ++s )
  {
    if ( t.count( m.id( s ) ) != 0u )
      continue;
    if ( m.label( s ) != n.label( n.index_of( m.id( s ) ) ) )
      return false;
  }
  return true;
}

model graft( const pointed_model& pm, const std::set<std::string>& w, const std::map<std::string, pointed_model>& parts )
{
  const auto& m = pm.m;
  const auto report = is_tree_like( m );
  if ( !report.tree_like || *report.root != pm.point )
    throw error( errc::not_tree_like, "graft target is not tree-like with root '" + pm.point_id() + "'", pm.point_id() );
  const auto ws = m.state_set_of( w );
  if ( ws.intersects( descendants( m, ws ) ) )
    throw error( errc::invalid_argument, "graft points must not be descendants of one another" );
  std::set<std::string> used( m.states().begin(), m.states().end() );
  for ( const auto& u : w )
  {
    const auto it = parts.find( u );
    if ( it == parts.end() )
      throw error( errc::invalid_argument, "no part given for graft point '" + u + "'", u );
    const auto& part = it->second;
    if ( !( part.m.alphabet() == m.alphabet() ) )
      throw error( errc::alphabet_mismatch, "graft part over a different alphabet", u );
    const auto pr = is_tree_like( part.m );
    if ( !pr.tree_like || *pr.root != part.point )
      throw error( errc::not_tree_like, "graft part for '" + u + "' is not tree-like with root at its point", u );
    for ( const auto& id : part.m.states() )
    {
      if ( !used.insert( id ).second )
        throw error( errc::not_disjoint, "state '" + id + "' is shared between grafted models", id );
    }
  }

  const auto kept = descendants( m, ws ).complement();
  std::vector<std::string> ids;
  std::vector<std::size_t> map_m( m.size(), m.size() );
  kept.for_each( [&]( std::size_t s ) {
    map_m[s] = ids.size();
    ids.push_back( m.id( s ) );
  } );
  std::map<std::string, std::vector<std::size_t>> part_maps;
  for ( const auto& u : w )
  {
    const auto& part = parts.at( u );
    auto& map = part_maps[u];
    map.assign( part.m.size(), 0 );
    for ( std::size_t s = 0; s < part.m.size(); ++s )
    {
      if ( s == part.point )
      {
        map[s] = map_m[m.index_of( u )];
      }
      else
      {
        map[s] = ids.size();
        ids.push_back( part.m.id( s ) );
      }
    }
  }
  model out( m.alphabet(), ids, m.atoms() );
  for ( const auto& [s, a, t] : m.transitions() )
  {
    if ( kept.test( s ) && kept.test( t ) )
      out.add_transition( map_m[s], a, map_m[t] );
  }
  for ( const auto& atom : m.atoms() )
  {
    m.valuation( atom ).for_each( [&]( std::size_t s ) {
      if ( kept.test( s ) && !ws.test( s ) )
        out.set_atom( atom, map_m[s] );
    } );
  }
  for ( const auto& u : w )
  {
    const auto& part = parts.at( u );
    const auto& map = part_maps.at( u );
    // the point is identified with u, so its transitions leave u
    copy_into( out, part.m, map, state_set::full( part.m.size() ) );
  }
  return out;
}

model override_valuation( const model& m, const std::string& q, const std::set<std::string>& t )
{
  model out = m;
  out.set_valuation( q, m.state_set_of( t ) );
  return out;
}

} // namespace ccrmu
