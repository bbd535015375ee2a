#include <ccrmu/mc.hpp>

namespace ccrmu
{

namespace
{

class evaluator
{
public:
  explicit evaluator( const model& m )
    : _m( m )
  {
  }

  state_set eval( const formula& f, environment& env )
  {
    const auto n = _m.size();
    switch ( f.kind() )
    {
    case op::top: return state_set::full( n );
    case op::bot: return state_set( n );
    case op::atom:
    {
      if ( const auto it = env.find( f.name() ); it != env.end() )
        return it->second;
      if ( _m.atoms().count( f.name() ) == 0u )
        throw error( errc::unbound_variable, "unbound name '" + f.name() + "'", f.name() );
      return _m.valuation( f.name() );
    }
    case op::neg: return eval( f.child(), env ).complement();
    case op::conj: return eval( f.lhs(), env ) & eval( f.rhs(), env );
    case op::disj: return eval( f.lhs(), env ) | eval( f.rhs(), env );
    case op::box: return _m.pre_forall( action( f ), eval( f.child(), env ) );
    case op::diamond: return _m.pre_exists( action( f ), eval( f.child(), env ) );
    case op::cover:
    {
      // [b] of the union, and <b> of each member
      const auto a = action( f );
      state_set some( n );
      state_set out = state_set::full( n );
      for ( const auto& g : f.children() )
      {
        const auto ext = eval( g, env );
        some |= ext;
        out &= _m.pre_exists( a, ext );
      }
      return out & _m.pre_forall( a, some );
    }
    case op::exists:
    case op::forall:
      throw error( errc::quantifier_present, "refinement quantifiers need elimination before model checking", f.text() );
    case op::mu:
    case op::nu:
    {
      const auto var = f.variable();
      std::optional<state_set> saved;
      if ( const auto it = env.find( var ); it != env.end() )
        saved = it->second;
      state_set current = f.is( op::mu ) ? state_set( n ) : state_set::full( n );
      for ( ;; )
      {
        env[var] = current;
        auto next = eval( f.body(), env );
        if ( next == current )
          break;
        current = std::move( next );
      }
      if ( saved )
        env[var] = *saved;
      else
        env.erase( var );
      return current;
    }
    }
    return state_set( n );
  }

private:
  std::size_t action( const formula& f ) const { return _m.alphabet().index_of( f.action() ); }

  const model& _m;
};

} // namespace

state_set extension( const model& m, const formula& f, const environment& env )
{
  for ( const auto& [name, ext] : env )
  {
    if ( ext.size() != m.size() )
      throw error( errc::invalid_argument, "environment entry '" + name + "' has the wrong universe", name );
  }
  environment scratch = env;
  return evaluator( m ).eval( f, scratch );
}

bool check( const pointed_model& pm, const formula& f ) { return extension( pm.m, f, {} ).test( pm.point ); }

} // namespace ccrmu
