#include <ccrmu/syntax.hpp>

#include <cctype>
#include <map>

namespace ccrmu
{

namespace
{

bool ident_start( char c ) { return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_'; }
bool ident_char( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_'; }

class parser
{
public:
  explicit parser( std::string_view text )
    : _text( text )
  {
  }

  formula run()
  {
    auto f = implication();
    skip_ws();
    if ( _pos != _text.size() )
      fail( "unexpected '" + std::string( 1, _text[_pos] ) + "'" );
    return f;
  }

private:
  [[noreturn]] void fail( const std::string& message ) const { throw syntax_error( message, _pos ); }

  void skip_ws()
  {
    while ( _pos < _text.size() && std::isspace( static_cast<unsigned char>( _text[_pos] ) ) )
      ++_pos;
  }

  bool peek( std::string_view s )
  {
    skip_ws();
    return _text.substr( _pos, s.size() ) == s;
  }

  bool accept( std::string_view s )
  {
    if ( !peek( s ) )
      return false;
    _pos += s.size();
    return true;
  }

  void expect( std::string_view s )
  {
    if ( !accept( s ) )
      fail( "expected '" + std::string( s ) + "'" );
  }

  std::string identifier()
  {
    skip_ws();
    if ( _pos >= _text.size() || !ident_start( _text[_pos] ) )
      fail( "expected identifier" );
    const auto start = _pos;
    while ( _pos < _text.size() && ident_char( _text[_pos] ) )
      ++_pos;
    while ( _pos < _text.size() && _text[_pos] == '\'' )
      ++_pos;
    return std::string( _text.substr( start, _pos - start ) );
  }

  /// Identifier without consuming it.
  std::string lookahead_identifier()
  {
    const auto saved = _pos;
    skip_ws();
    std::string id;
    if ( _pos < _text.size() && ident_start( _text[_pos] ) )
      id = identifier();
    _pos = saved;
    return id;
  }

  formula implication()
  {
    auto lhs = disjunction();
    if ( accept( "->" ) )
      return implies( lhs, implication() );
    return lhs;
  }

  formula disjunction()
  {
    auto acc = conjunction();
    while ( peek( "|" ) )
    {
      ++_pos;
      acc = disj( acc, conjunction() );
    }
    return acc;
  }

  formula conjunction()
  {
    auto acc = unary();
    while ( peek( "&" ) )
    {
      ++_pos;
      acc = conj( acc, unary() );
    }
    return acc;
  }

  std::set<std::string> action_list( char terminator )
  {
    std::set<std::string> out;
    if ( peek( std::string_view( &terminator, 1 ) ) )
      return out;
    do
    {
      out.insert( identifier() );
    } while ( accept( "," ) );
    return out;
  }

  formula quantifier( bool existential )
  {
    expect( "{" );
    auto cov = action_list( ';' );
    expect( ";" );
    auto contra = action_list( '}' );
    expect( "}" );
    const auto at = _pos;
    signature sig;
    try
    {
      sig = signature( std::move( cov ), std::move( contra ) );
    }
    catch ( const error& e )
    {
      throw syntax_error( e.what(), at );
    }
    auto body = unary();
    return existential ? exists( std::move( sig ), body ) : forall( std::move( sig ), body );
  }

  formula unary()
  {
    skip_ws();
    if ( _pos >= _text.size() )
      fail( "unexpected end of input" );
    const char c = _text[_pos];
    if ( c == '!' )
    {
      ++_pos;
      return neg( unary() );
    }
    if ( c == '(' )
    {
      ++_pos;
      auto f = implication();
      expect( ")" );
      return f;
    }
    if ( c == '[' || c == '<' )
    {
      ++_pos;
      auto a = identifier();
      expect( c == '[' ? "]" : ">" );
      auto body = unary();
      return c == '[' ? box( std::move( a ), body ) : diamond( std::move( a ), body );
    }
    const auto start = _pos;
    const auto id = lookahead_identifier();
    if ( id.empty() )
      fail( "unexpected '" + std::string( 1, c ) + "'" );
    if ( ( id == "E" || id == "A" ) )
    {
      _pos = start + 1;
      if ( peek( "{" ) )
        return quantifier( id == "E" );
      _pos = start;
    }
    if ( id.starts_with( "nabla_" ) && id.size() > 6u )
    {
      identifier();
      auto action = id.substr( 6 );
      expect( "{" );
      std::vector<formula> members;
      if ( !peek( "}" ) )
      {
        do
        {
          members.push_back( implication() );
        } while ( accept( "," ) );
      }
      expect( "}" );
      return cover( std::move( action ), std::move( members ) );
    }
    if ( id == "mu" || id == "nu" )
    {
      identifier();
      auto var = identifier();
      if ( var == "true" || var == "false" || var == "mu" || var == "nu" )
        fail( "reserved word '" + var + "' cannot be bound" );
      expect( "." );
      auto body = implication();
      return id == "mu" ? mu( std::move( var ), body ) : nu( std::move( var ), body );
    }
    identifier();
    if ( id == "true" )
      return top();
    if ( id == "false" )
      return bot();
    return atom( id );
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

void positivity( const formula& f, std::map<std::string, bool>& odd_under, bool odd )
{
  switch ( f.kind() )
  {
  case op::atom:
  {
    const auto it = odd_under.find( f.name() );
    if ( it != odd_under.end() && it->second != odd )
      throw error( errc::positivity, "variable '" + f.name() + "' occurs negatively in its binder", f.name() );
    return;
  }
  case op::neg:
    positivity( f.child(), odd_under, !odd );
    return;
  case op::mu:
  case op::nu:
  {
    auto saved = odd_under;
    odd_under[f.variable()] = odd;
    positivity( f.body(), odd_under, odd );
    odd_under = std::move( saved );
    return;
  }
  default:
    for ( const auto& c : f.children() )
      positivity( c, odd_under, odd );
  }
}

bool positive_in( const formula& f, const std::string& name, bool odd )
{
  switch ( f.kind() )
  {
  case op::atom: return f.name() != name || !odd;
  case op::neg: return positive_in( f.child(), name, !odd );
  case op::mu:
  case op::nu:
    if ( f.variable() == name )
      return true;
    return positive_in( f.body(), name, odd );
  default:
    for ( const auto& c : f.children() )
    {
      if ( !positive_in( c, name, odd ) )
        return false;
    }
    return true;
  }
}

} // namespace

void check_positivity( const formula& f )
{
  std::map<std::string, bool> odd_under;
  positivity( f, odd_under, false );
}

bool occurs_positively( const formula& f, const std::string& name ) { return positive_in( f, name, false ); }

void check_actions( const formula& f, const action_alphabet& alphabet )
{
  for ( const auto& a : actions_of( f ) )
  {
    if ( !alphabet.contains( a ) )
      throw error( errc::unknown_action, "action '" + a + "' is not in the alphabet", a );
  }
}

formula parse( std::string_view text )
{
  auto f = parser( text ).run();
  check_positivity( f );
  return f;
}

formula parse( std::string_view text, const action_alphabet& alphabet )
{
  auto f = parse( text );
  check_actions( f, alphabet );
  return f;
}

} // namespace ccrmu
