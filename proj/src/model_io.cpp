#include <ccrmu/model_io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ccrmu
{

using json = nlohmann::json;

namespace
{

std::vector<std::string> string_list( const json& j, const char* key )
{
  if ( !j.contains( key ) )
    return {};
  const auto& v = j.at( key );
  if ( !v.is_array() )
    throw error( errc::invalid_model, std::string( "'" ) + key + "' must be a list of strings" );
  std::vector<std::string> out;
  for ( const auto& x : v )
  {
    if ( !x.is_string() )
      throw error( errc::invalid_model, std::string( "'" ) + key + "' must be a list of strings" );
    out.push_back( x.get<std::string>() );
  }
  return out;
}

} // namespace

model_file model_from_json( std::string_view text )
{
  json j;
  try
  {
    j = json::parse( text );
  }
  catch ( const json::exception& e )
  {
    throw error( errc::invalid_model, std::string( "malformed model JSON: " ) + e.what() );
  }
  if ( !j.is_object() )
    throw error( errc::invalid_model, "model JSON must be an object" );
  for ( const auto* key : { "alphabet", "states" } )
  {
    if ( !j.contains( key ) )
      throw error( errc::invalid_model, std::string( "model JSON lacks '" ) + key + "'" );
  }
  const auto actions = string_list( j, "alphabet" );
  const auto states = string_list( j, "states" );
  const auto atoms = string_list( j, "atoms" );
  model m( action_alphabet( actions ), states, std::set<std::string>( atoms.begin(), atoms.end() ) );
  if ( j.contains( "transitions" ) )
  {
    if ( !j["transitions"].is_array() )
      throw error( errc::invalid_model, "'transitions' must be a list" );
    for ( const auto& t : j["transitions"] )
    {
      if ( !t.is_object() || !t.contains( "from" ) || !t.contains( "action" ) || !t.contains( "to" ) )
        throw error( errc::invalid_model, "transitions need 'from', 'action' and 'to'" );
      try
      {
        m.add_transition( t["from"].get<std::string>(), t["action"].get<std::string>(), t["to"].get<std::string>() );
      }
      catch ( const json::exception& e )
      {
        throw error( errc::invalid_model, std::string( "bad transition: " ) + e.what() );
      }
      catch ( const error& e )
      {
        throw error( errc::invalid_model, e.what(), e.subject() );
      }
    }
  }
  if ( j.contains( "valuation" ) )
  {
    if ( !j["valuation"].is_object() )
      throw error( errc::invalid_model, "'valuation' must be an object" );
    for ( const auto& [atom, ids] : j["valuation"].items() )
    {
      m.declare_atom( atom );
      if ( !ids.is_array() )
        throw error( errc::invalid_model, "valuation of '" + atom + "' must be a list of states", atom );
      for ( const auto& id : ids )
      {
        if ( !id.is_string() || !m.has_state( id.get<std::string>() ) )
          throw error( errc::invalid_model, "valuation of '" + atom + "' names an unknown state", atom );
        m.set_atom( atom, m.index_of( id.get<std::string>() ) );
      }
    }
  }
  model_file out{ std::move( m ), std::nullopt };
  if ( j.contains( "root" ) )
  {
    if ( !j["root"].is_string() || !out.m.has_state( j["root"].get<std::string>() ) )
      throw error( errc::invalid_model, "'root' must name a state" );
    out.root = out.m.index_of( j["root"].get<std::string>() );
  }
  return out;
}

std::string model_to_json( const model& m, std::optional<std::size_t> root )
{
  json j;
  j["alphabet"] = m.alphabet().actions();
  j["atoms"] = std::vector<std::string>( m.atoms().begin(), m.atoms().end() );
  j["states"] = m.states();
  j["transitions"] = json::array();
  for ( const auto& [s, a, t] : m.transitions() )
    j["transitions"].push_back( { { "from", m.id( s ) }, { "action", m.alphabet().actions()[a] }, { "to", m.id( t ) } } );
  j["valuation"] = json::object();
  for ( const auto& atom : m.atoms() )
  {
    auto ids = json::array();
    m.valuation( atom ).for_each( [&]( std::size_t s ) { ids.push_back( m.id( s ) ); } );
    j["valuation"][atom] = ids;
  }
  if ( root )
    j["root"] = m.id( *root );
  return j.dump( 2 );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw error( errc::io, "cannot read '" + path + "'", path );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( const std::string& path, const std::string& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << content ) )
    throw error( errc::io, "cannot write '" + path + "'", path );
}

model_file load_model( const std::string& path ) { return model_from_json( read_file( path ) ); }

pointed_model load_pointed( const std::string& selector )
{
  const auto hash = selector.rfind( '#' );
  const auto path = hash == std::string::npos ? selector : selector.substr( 0, hash );
  auto file = load_model( path );
  if ( hash != std::string::npos )
  {
    const auto id = selector.substr( hash + 1 );
    const auto point = file.m.index_of( id );
    return pointed_model( std::move( file.m ), point );
  }
  const auto point = file.root.value_or( 0 );
  return pointed_model( std::move( file.m ), point );
}

std::string relation_to_json( const std::vector<state_pair>& pairs, const model& m, const model& n )
{
  auto j = json::array();
  for ( const auto& [s, t] : pairs )
    j.push_back( { m.id( s ), n.id( t ) } );
  return j.dump();
}

std::vector<state_pair> relation_from_json( std::string_view text, const model& m, const model& n )
{
  std::vector<state_pair> out;
  try
  {
    for ( const auto& p : json::parse( text ) )
      out.emplace_back( m.index_of( p.at( 0 ).get<std::string>() ), n.index_of( p.at( 1 ).get<std::string>() ) );
  }
  catch ( const json::exception& e )
  {
    throw error( errc::invalid_argument, std::string( "malformed relation JSON: " ) + e.what() );
  }
  return out;
}

} // namespace ccrmu
