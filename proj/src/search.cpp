#include <ccrmu/ccref.hpp>
#include <ccrmu/mc.hpp>
#include <ccrmu/search.hpp>

namespace ccrmu
{

namespace
{

using masks = std::vector<std::vector<std::uint64_t>>; // [action][state] successor bits

class generator
{
public:
  generator( const action_alphabet& alphabet, const std::vector<std::string>& atoms, const enumeration_options& options,
             const std::function<bool( const pointed_model& )>& fn )
    : _alphabet( alphabet ), _atoms( atoms ), _options( options ), _fn( fn )
  {
    if ( options.root_label )
    {
      for ( const auto& a : *options.root_label )
      {
        if ( std::find( atoms.begin(), atoms.end(), a ) == atoms.end() )
          _impossible = true;
      }
    }
  }

  bool run( std::size_t max_states )
  {
    if ( _impossible )
      return true;
    for ( std::size_t k = std::max<std::size_t>( _options.min_states, 1 ); k <= max_states; ++k )
    {
      _k = k;
      _ids.clear();
      for ( std::size_t i = 0; i < k; ++i )
        _ids.push_back( "s" + std::to_string( i ) );
      if ( _options.canonical )
      {
        _succ.assign( _alphabet.size(), std::vector<std::uint64_t>( k, 0 ) );
        if ( !canonical( 0, 1 ) )
          return false;
      }
      else if ( !raw() )
      {
        return false;
      }
    }
    return true;
  }

private:
  bool raw()
  {
    const auto na = _alphabet.size();
    const auto tbits = na * _k * _k;
    const auto total = tbits + _atoms.size() * _k;
    if ( total >= 63u )
      throw error( errc::invalid_argument, "model universe too large to enumerate without pruning" );
    const std::uint64_t tcount = std::uint64_t{ 1 } << tbits;
    _succ.assign( na, std::vector<std::uint64_t>( _k, 0 ) );
    for ( std::uint64_t vmask = 0; vmask < ( std::uint64_t{ 1 } << ( _atoms.size() * _k ) ); ++vmask )
    {
      if ( !root_ok( vmask ) )
        continue;
      for ( std::uint64_t tmask = 0; tmask < tcount; ++tmask )
      {
        for ( std::size_t a = 0; a < na; ++a )
        {
          for ( std::size_t i = 0; i < _k; ++i )
            _succ[a][i] = ( tmask >> ( a * _k * _k + i * _k ) ) & ( ( std::uint64_t{ 1 } << _k ) - 1u );
        }
        if ( !emit( vmask ) )
          return false;
      }
    }
    return true;
  }

  // States are discovered in breadth-first order: the successors of state
  // i under action a are some already discovered states plus the next m
  // undiscovered ones.
  bool canonical( std::size_t pos, std::size_t next )
  {
    const auto na = _alphabet.size();
    if ( pos == _k * na )
      return next != _k || valuations();
    const auto i = pos / na;
    const auto a = pos % na;
    if ( i >= next )
      return true;
    for ( std::size_t m = 0; next + m <= _k; ++m )
    {
      const std::uint64_t fresh = ( ( std::uint64_t{ 1 } << m ) - 1u ) << next;
      for ( std::uint64_t old = 0; old < ( std::uint64_t{ 1 } << next ); ++old )
      {
        _succ[a][i] = old | fresh;
        if ( !canonical( pos + 1, next + m ) )
          return false;
      }
    }
    _succ[a][i] = 0;
    return true;
  }

  bool valuations()
  {
    for ( std::uint64_t vmask = 0; vmask < ( std::uint64_t{ 1 } << ( _atoms.size() * _k ) ); ++vmask )
    {
      if ( root_ok( vmask ) && !emit( vmask ) )
        return false;
    }
    return true;
  }

  bool root_ok( std::uint64_t vmask ) const
  {
    if ( !_options.root_label )
      return true;
    for ( std::size_t r = 0; r < _atoms.size(); ++r )
    {
      const bool on = ( vmask >> ( r * _k ) ) & 1u;
      if ( on != ( _options.root_label->count( _atoms[r] ) != 0u ) )
        return false;
    }
    return true;
  }

  bool emit( std::uint64_t vmask )
  {
    model m( _alphabet, _ids, std::set<std::string>( _atoms.begin(), _atoms.end() ) );
    for ( std::size_t a = 0; a < _alphabet.size(); ++a )
    {
      for ( std::size_t i = 0; i < _k; ++i )
      {
        for ( std::size_t j = 0; j < _k; ++j )
        {
          if ( ( _succ[a][i] >> j ) & 1u )
            m.add_transition( i, a, j );
        }
      }
    }
    for ( std::size_t r = 0; r < _atoms.size(); ++r )
    {
      for ( std::size_t i = 0; i < _k; ++i )
      {
        if ( ( vmask >> ( r * _k + i ) ) & 1u )
          m.set_atom( _atoms[r], i );
      }
    }
    return _fn( pointed_model( std::move( m ), std::size_t{ 0 } ) );
  }

  const action_alphabet& _alphabet;
  const std::vector<std::string>& _atoms;
  const enumeration_options& _options;
  const std::function<bool( const pointed_model& )>& _fn;
  bool _impossible = false;
  std::size_t _k = 0;
  std::vector<std::string> _ids;
  masks _succ;
};

} // namespace

bool for_each_model( const action_alphabet& alphabet, const std::vector<std::string>& atoms, std::size_t max_states,
                     const enumeration_options& options, const std::function<bool( const pointed_model& )>& fn )
{
  return generator( alphabet, atoms, options, fn ).run( max_states );
}

std::vector<pointed_model> enumerate_models( const action_alphabet& alphabet, const std::vector<std::string>& atoms,
                                             std::size_t max_states, const enumeration_options& options )
{
  std::vector<pointed_model> out;
  for_each_model( alphabet, atoms, max_states, options, [&]( const pointed_model& pm ) {
    out.push_back( pm );
    return true;
  } );
  return out;
}

std::size_t count_models( const action_alphabet& alphabet, const std::vector<std::string>& atoms, std::size_t max_states,
                          const enumeration_options& options )
{
  std::size_t n = 0;
  for_each_model( alphabet, atoms, max_states, options, [&]( const pointed_model& ) {
    ++n;
    return true;
  } );
  return n;
}

std::optional<witness> witness_search( const pointed_model& pm, const signature& sig, const formula& f,
                                       std::size_t max_states, const elim_caps& caps )
{
  sig.validate( pm.m.alphabet() );
  auto atom_set = free_names( f );
  atom_set.insert( pm.m.atoms().begin(), pm.m.atoms().end() );
  const std::vector<std::string> atoms( atom_set.begin(), atom_set.end() );

  enumeration_options options;
  options.canonical = true;
  options.root_label = pm.m.label( pm.point );

  const bool quantified = has_quantifier( f );
  std::optional<witness> found;
  for_each_model( pm.m.alphabet(), atoms, max_states, options, [&]( const pointed_model& cand ) {
    const auto z = largest_refinement( pm.m, cand.m, {}, sig );
    if ( !z.contains( pm.point, cand.point ) )
      return true;
    bool sat = false;
    if ( quantified )
    {
      const auto v = check_cc( cand, f, { std::nullopt, caps } );
      if ( v.is_undetermined() )
        throw error( errc::side_condition_unknown, "inner formula undetermined: " + v.detail, f.text() );
      sat = v.is_yes();
    }
    else
    {
      sat = check( cand, f );
    }
    if ( !sat )
      return true;
    found = witness{ cand, z.pairs() };
    return false;
  } );
  return found;
}

} // namespace ccrmu
