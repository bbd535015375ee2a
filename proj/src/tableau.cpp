#include <ccrmu/mc.hpp>
#include <ccrmu/syntax.hpp>
#include <ccrmu/tableau.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace ccrmu
{

namespace
{

bool is_atomic_literal( const formula& f ) { return is_literal( f ); }

std::size_t add_node( tableau& t, formula_set label, std::optional<std::size_t> parent, std::string action )
{
  tableau_node n;
  n.id = t.nodes.size();
  n.label = std::move( label );
  n.parent = parent;
  n.action = std::move( action );
  t.nodes.push_back( std::move( n ) );
  return t.nodes.back().id;
}

void expand( tableau& t, std::size_t v )
{
  const auto label = t.nodes[v].label;
  for ( const auto& f : label )
  {
    if ( !f.is_binary() )
      continue;
    auto rest = label;
    rest.erase( f );
    if ( f.is( op::conj ) )
    {
      t.nodes[v].rule = tableau_rule::and_rule;
      auto l = rest;
      l.insert( f.lhs() );
      l.insert( f.rhs() );
      const auto c = add_node( t, std::move( l ), v, {} );
      t.nodes[v].children.push_back( c );
      expand( t, c );
    }
    else
    {
      t.nodes[v].rule = tableau_rule::or_rule;
      for ( const auto& side : { f.lhs(), f.rhs() } )
      {
        auto l = rest;
        l.insert( side );
        const auto c = add_node( t, std::move( l ), v, {} );
        t.nodes[v].children.push_back( c );
        expand( t, c );
      }
    }
    return;
  }

  // only literals and covers are left
  std::map<std::string, std::vector<formula>> covers;
  for ( const auto& f : label )
  {
    if ( f.is( op::cover ) )
      covers[f.action()].push_back( f );
    else if ( !is_atomic_literal( f ) )
      throw error( errc::not_disjunctive, "tableau label holds a formula outside the df fragment", f.text() );
  }
  t.nodes[v].modal = true;
  if ( covers.empty() )
    return;
  t.nodes[v].rule = tableau_rule::mod_rule;
  for ( const auto& [b, list] : covers )
  {
    if ( list.size() > 1u )
      throw error( errc::not_disjunctive, "two covers for action '" + b + "' in one tableau label", list[1].text() );
    for ( const auto& psi : list.front().children() )
    {
      const auto c = add_node( t, { psi }, v, b );
      t.nodes[c].choice = true;
      t.nodes[v].children.push_back( c );
      expand( t, c );
    }
  }
}

bool literal_holds( const pointed_model& pm, std::size_t s, const formula& lit )
{
  switch ( lit.kind() )
  {
  case op::top: return true;
  case op::bot: return false;
  case op::atom: return pm.m.holds( lit.name(), s );
  default: return !pm.m.holds( lit.child().name(), s );
  }
}

bool locally_consistent( const tableau& t, const pointed_model& pm, std::size_t s, std::size_t v )
{
  for ( const auto& f : t.nodes[v].label )
  {
    if ( is_atomic_literal( f ) && !literal_holds( pm, s, f ) )
      return false;
  }
  return true;
}

std::vector<std::size_t> children_for( const tableau& t, std::size_t v, const std::string& b )
{
  std::vector<std::size_t> out;
  for ( auto c : t.nodes[v].children )
  {
    if ( t.nodes[c].action == b )
      out.push_back( c );
  }
  return out;
}

std::set<std::string> cover_actions( const tableau& t, std::size_t v )
{
  std::set<std::string> out;
  for ( const auto& f : t.nodes[v].label )
  {
    if ( f.is( op::cover ) )
      out.insert( f.action() );
  }
  return out;
}

class marker
{
public:
  marker( const tableau& t, const pointed_model& pm )
    : _t( t ), _pm( pm ), _memo( pm.m.size() * t.nodes.size(), -1 )
  {
  }

  bool ok( std::size_t s, std::size_t v )
  {
    auto& slot = _memo[s * _t.nodes.size() + v];
    if ( slot >= 0 )
      return slot == 1;
    const auto& node = _t.nodes[v];
    bool r = false;
    switch ( node.rule )
    {
    case tableau_rule::and_rule: r = ok( s, node.children.front() ); break;
    case tableau_rule::or_rule:
      r = std::any_of( node.children.begin(), node.children.end(), [&]( std::size_t c ) { return ok( s, c ); } );
      break;
    case tableau_rule::none:
    case tableau_rule::mod_rule:
      r = locally_consistent( _t, _pm, s, v );
      for ( const auto& b : cover_actions( _t, v ) )
      {
        if ( !r )
          break;
        const auto kids = children_for( _t, v, b );
        const auto& succ = _pm.m.successors( _pm.m.alphabet().index_of( b ), s );
        for ( auto c : kids )
          r = r && std::any_of( succ.begin(), succ.end(), [&]( std::size_t s2 ) { return ok( s2, c ); } );
        for ( auto s2 : succ )
          r = r && std::any_of( kids.begin(), kids.end(), [&]( std::size_t c ) { return ok( s2, c ); } );
      }
      break;
    }
    slot = r ? 1 : 0;
    return r;
  }

  void collect( std::size_t s, std::size_t v, std::set<std::pair<std::size_t, std::size_t>>& out )
  {
    if ( !out.insert( { s, v } ).second )
      return;
    const auto& node = _t.nodes[v];
    switch ( node.rule )
    {
    case tableau_rule::and_rule:
    case tableau_rule::or_rule:
      for ( auto c : node.children )
      {
        if ( ok( s, c ) )
        {
          collect( s, c, out );
          break;
        }
      }
      break;
    case tableau_rule::mod_rule:
      for ( auto c : node.children )
      {
        for ( auto s2 : _pm.m.successors( _pm.m.alphabet().index_of( _t.nodes[c].action ), s ) )
        {
          if ( ok( s2, c ) )
            collect( s2, c, out );
        }
      }
      break;
    case tableau_rule::none: break;
    }
  }

private:
  const tableau& _t;
  const pointed_model& _pm;
  std::vector<int> _memo;
};

std::string escape( const std::string& s )
{
  std::string out;
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string tableau::to_dot() const
{
  std::string out = "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
  for ( const auto& n : nodes )
  {
    std::string label = "{";
    bool first = true;
    for ( const auto& f : n.label )
    {
      label += ( first ? "" : ", " ) + f.text();
      first = false;
    }
    label += "}";
    std::string style;
    if ( n.modal )
      style += ", peripheries=2";
    if ( n.choice || n.id == 0u )
      style += ", style=rounded";
    out += "  n" + std::to_string( n.id ) + " [label=\"" + std::to_string( n.id ) + ": " + escape( label ) + "\"" + style + "];\n";
  }
  for ( const auto& n : nodes )
  {
    for ( auto c : n.children )
    {
      std::string edge;
      switch ( n.rule )
      {
      case tableau_rule::and_rule: edge = "and"; break;
      case tableau_rule::or_rule: edge = "or"; break;
      case tableau_rule::mod_rule: edge = nodes[c].action; break;
      case tableau_rule::none: break;
      }
      out += "  n" + std::to_string( n.id ) + " -> n" + std::to_string( c ) + " [label=\"" + escape( edge ) + "\"];\n";
    }
  }
  return out + "}\n";
}

tableau build_tableau( const formula& f )
{
  if ( has_quantifier( f ) )
    throw error( errc::quantifier_present, "refinement quantifier in tableau construction", f.text() );
  if ( has_fixpoint( f ) )
    throw error( errc::fixpoint_present, "fixpoint tableaux are not supported", f.text() );
  const auto g = nnf( f );
  if ( !is_df( g ) )
    throw error( errc::not_disjunctive, "tableau input is not in disjunctive form", f.text() );
  tableau t;
  add_node( t, { g }, std::nullopt, {} );
  t.nodes.front().choice = true;
  expand( t, 0 );
  return t;
}

std::optional<marking> find_marking( const tableau& t, const pointed_model& pm )
{
  marker mk( t, pm );
  if ( !mk.ok( pm.point, 0 ) )
    return std::nullopt;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  mk.collect( pm.point, 0, pairs );
  return marking( pairs.begin(), pairs.end() );
}

bool verify_marking( const tableau& t, const pointed_model& pm, const marking& mk )
{
  const std::set<std::pair<std::size_t, std::size_t>> rel( mk.begin(), mk.end() );
  if ( rel.count( { pm.point, 0 } ) == 0u )
    return false;
  for ( const auto& [s, v] : rel )
  {
    if ( s >= pm.m.size() || v >= t.nodes.size() )
      return false;
    const auto& node = t.nodes[v];
    switch ( node.rule )
    {
    case tableau_rule::and_rule:
    case tableau_rule::or_rule:
      if ( std::none_of( node.children.begin(), node.children.end(), [&]( std::size_t c ) { return rel.count( { s, c } ) != 0u; } ) )
        return false;
      break;
    case tableau_rule::none:
    case tableau_rule::mod_rule:
      if ( !locally_consistent( t, pm, s, v ) )
        return false;
      for ( const auto& b : cover_actions( t, v ) )
      {
        const auto kids = children_for( t, v, b );
        const auto& succ = pm.m.successors( pm.m.alphabet().index_of( b ), s );
        for ( auto c : kids )
        {
          if ( std::none_of( succ.begin(), succ.end(), [&]( std::size_t s2 ) { return rel.count( { s2, c } ) != 0u; } ) )
            return false;
        }
        for ( auto s2 : succ )
        {
          if ( std::none_of( kids.begin(), kids.end(), [&]( std::size_t c ) { return rel.count( { s2, c } ) != 0u; } ) )
            return false;
        }
      }
      break;
    }
  }
  return true;
}

} // namespace ccrmu
