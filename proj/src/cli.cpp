#include <ccrmu/ccref.hpp>
#include <ccrmu/cli.hpp>
#include <ccrmu/dnf.hpp>
#include <ccrmu/elim.hpp>
#include <ccrmu/model_io.hpp>
#include <ccrmu/search.hpp>
#include <ccrmu/selftest.hpp>
#include <ccrmu/syntax.hpp>
#include <ccrmu/tableau.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace ccrmu::cli
{

using json = nlohmann::json;

namespace
{

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_other = 2;

std::set<std::string> split_list( const std::string& text )
{
  std::set<std::string> out;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    item.erase( 0, item.find_first_not_of( " \t" ) );
    item.erase( item.find_last_not_of( " \t" ) + 1 );
    if ( !item.empty() )
      out.insert( item );
  }
  return out;
}

elim_caps parse_caps( const std::string& text )
{
  elim_caps caps;
  for ( const auto& item : split_list( text ) )
  {
    const auto eq = item.find( '=' );
    if ( eq == std::string::npos )
      throw error( errc::invalid_argument, "caps entries look like depth=D or states=N", item );
    const auto key = item.substr( 0, eq );
    std::size_t value = 0;
    try
    {
      value = std::stoul( item.substr( eq + 1 ) );
    }
    catch ( const std::exception& )
    {
      throw error( errc::invalid_argument, "caps value must be a number", item );
    }
    if ( key == "depth" )
      caps.depth = value;
    else if ( key == "states" )
      caps.states = value;
    else
      throw error( errc::invalid_argument, "unknown cap '" + key + "'", item );
  }
  return caps;
}

class session
{
public:
  session( std::ostream& out, std::ostream& err, bool as_json )
    : _out( out ), _err( err ), _json( as_json )
  {
  }

  int report( json j, const std::string& human, int code )
  {
    if ( _json )
      _out << j.dump() << '\n';
    else
      _out << human << '\n';
    return code;
  }

  int fail( const error& e )
  {
    const auto code = std::string( to_string( e.code() ) );
    json j{ { "error", code }, { "reason", code }, { "message", e.what() } };
    if ( !e.subject().empty() )
      j["subject"] = e.subject();
    if ( _json )
      _out << j.dump() << '\n';
    else
      _err << "error: " << code << ": " << e.what() << '\n';
    return exit_other;
  }

private:
  std::ostream& _out;
  std::ostream& _err;
  bool _json;
};

int verdict_exit( const verdict& v )
{
  switch ( v.value )
  {
  case truth::yes: return exit_true;
  case truth::no: return exit_false;
  case truth::undetermined: return exit_other;
  }
  return exit_other;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Refinement modal mu-calculus: model checking, refinement and quantifier elimination" };
  app.name( "ccrmu" );
  app.require_subcommand( 1 );
  bool as_json = false;
  app.add_flag( "--json", as_json, "Machine-readable output" );

  std::string model_sel, spec_sel, impl_sel, formula_text, cov, contra, restrict, emit, dot, caps_text;
  std::optional<std::size_t> fallback_bound;
  std::size_t max_states = 3;
  selftest_options st;

  auto* check_cmd = app.add_subcommand( "check", "Evaluate a formula at a pointed model" );
  check_cmd->add_option( "--model", model_sel, "file.json#state" )->required();
  check_cmd->add_option( "--formula", formula_text )->required();
  check_cmd->add_option( "--fallback-bound", fallback_bound, "Witness bound when elimination fails" );
  check_cmd->add_option( "--caps", caps_text, "depth=D,states=N" );

  auto* refines_cmd = app.add_subcommand( "refines", "Decide a covariant-contravariant refinement" );
  refines_cmd->add_option( "--spec", spec_sel )->required();
  refines_cmd->add_option( "--impl", impl_sel )->required();
  refines_cmd->add_option( "--cov", cov, "Covariant actions, comma separated" );
  refines_cmd->add_option( "--contra", contra, "Contravariant actions, comma separated" );
  refines_cmd->add_option( "--restrict", restrict, "Atoms exempt from agreement" );
  refines_cmd->add_option( "--emit-relation", emit, "Write the largest refinement as JSON pairs" );

  auto* translate_cmd = app.add_subcommand( "translate", "Eliminate refinement quantifiers" );
  translate_cmd->add_option( "--formula", formula_text )->required();
  translate_cmd->add_option( "--caps", caps_text, "depth=D,states=N" );

  auto* witness_cmd = app.add_subcommand( "witness", "Search a refinement satisfying a formula" );
  witness_cmd->add_option( "--model", model_sel )->required();
  witness_cmd->add_option( "--cov", cov );
  witness_cmd->add_option( "--contra", contra );
  witness_cmd->add_option( "--formula", formula_text )->required();
  witness_cmd->add_option( "--max-states", max_states )->required();
  witness_cmd->add_option( "--emit", emit, "Write the witness model" );

  auto* dnf_cmd = app.add_subcommand( "dnf", "Disjunctive form" );
  dnf_cmd->add_option( "--formula", formula_text )->required();

  auto* tableau_cmd = app.add_subcommand( "tableau", "Tableau and marking" );
  tableau_cmd->add_option( "--formula", formula_text )->required();
  tableau_cmd->add_option( "--model", model_sel );
  tableau_cmd->add_option( "--dot", dot, "Write the tableau in dot format" );

  auto* selftest_cmd = app.add_subcommand( "selftest", "Run the property suites" );
  selftest_cmd->add_option( "--max-states", st.max_states, "Universe bound" );
  selftest_cmd->add_option( "--witness-bound", st.witness_bound, "Witness search bound" );

  for ( auto* sub : app.get_subcommands( []( CLI::App* ) { return true; } ) )
    sub->add_flag( "--json", as_json, "Machine-readable output" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::CallForHelp& )
  {
    out << app.help();
    return exit_true;
  }
  catch ( const CLI::CallForAllHelp& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_true;
  }
  catch ( const CLI::ParseError& e )
  {
    if ( as_json )
      out << json{ { "error", "Usage" }, { "reason", "Usage" }, { "message", e.what() } }.dump() << '\n';
    else
      err << "usage error: " << e.what() << '\n';
    return exit_other;
  }

  session s( out, err, as_json );
  try
  {
    if ( check_cmd->parsed() )
    {
      const auto pm = load_pointed( model_sel );
      const auto f = parse( formula_text, pm.m.alphabet() );
      check_options options;
      options.fallback_bound = fallback_bound;
      if ( !caps_text.empty() )
        options.caps = parse_caps( caps_text );
      const auto v = check_cc( pm, f, options );
      json j{ { "verdict", to_string( v.value ) } };
      std::string human( to_string( v.value ) );
      if ( v.is_undetermined() )
      {
        j["reason"] = to_string( v.reason );
        j["detail"] = v.detail;
        human += " (" + std::string( to_string( v.reason ) ) + "): " + v.detail;
      }
      return s.report( j, human, verdict_exit( v ) );
    }
    if ( refines_cmd->parsed() )
    {
      const auto pm = load_pointed( spec_sel );
      const auto pn = load_pointed( impl_sel );
      const signature sig( split_list( cov ), split_list( contra ) );
      const auto z = largest_refinement( pm.m, pn.m, split_list( restrict ), sig );
      const bool ok = z.contains( pm.point, pn.point );
      if ( !emit.empty() )
        write_file( emit, relation_to_json( z.pairs(), pm.m, pn.m ) + "\n" );
      return s.report( json{ { "refines", ok }, { "relation_size", z.size() } },
                       ok ? "True: " + pm.point_id() + " is refined by " + pn.point_id()
                          : "False: " + pm.point_id() + " is not refined by " + pn.point_id(),
                       ok ? exit_true : exit_false );
    }
    if ( translate_cmd->parsed() )
    {
      const auto f = parse( formula_text );
      const auto caps = caps_text.empty() ? elim_caps{} : parse_caps( caps_text );
      const auto g = eliminate( f, caps );
      return s.report( json{ { "result", g.text() } }, g.text(), exit_true );
    }
    if ( witness_cmd->parsed() )
    {
      const auto pm = load_pointed( model_sel );
      const auto f = parse( formula_text, pm.m.alphabet() );
      const signature sig( split_list( cov ), split_list( contra ) );
      const auto w = witness_search( pm, sig, f, max_states );
      if ( !w )
        return s.report( json{ { "found", false } }, "no witness with at most " + std::to_string( max_states ) + " states",
                         exit_false );
      const auto text = model_to_json( w->model.m, w->model.point );
      if ( !emit.empty() )
        write_file( emit, text + "\n" );
      return s.report( json{ { "found", true },
                             { "model", json::parse( text ) },
                             { "relation", json::parse( relation_to_json( w->relation, pm.m, w->model.m ) ) } },
                       "witness:\n" + text, exit_true );
    }
    if ( dnf_cmd->parsed() )
    {
      const auto g = ensure_df( parse( formula_text ) );
      return s.report( json{ { "result", g.text() } }, g.text(), exit_true );
    }
    if ( tableau_cmd->parsed() )
    {
      const auto t = build_tableau( parse( formula_text ) );
      const auto text = t.to_dot();
      if ( !dot.empty() )
        write_file( dot, text );
      json j{ { "nodes", t.nodes.size() } };
      std::string human = dot.empty() ? text : "tableau with " + std::to_string( t.nodes.size() ) + " nodes written to " + dot;
      if ( dot.empty() )
        j["dot"] = text;
      int code = exit_true;
      if ( !model_sel.empty() )
      {
        const auto pm = load_pointed( model_sel );
        const auto mk = find_marking( t, pm );
        if ( mk )
        {
          auto pairs = json::array();
          for ( const auto& [st_, v] : *mk )
            pairs.push_back( { pm.m.id( st_ ), v } );
          j["marking"] = pairs;
          human += "\nmarking: " + pairs.dump();
        }
        else
        {
          j["marking"] = nullptr;
          human += "\nno consistent marking";
          code = exit_false;
        }
      }
      return s.report( j, human, code );
    }
    if ( selftest_cmd->parsed() )
    {
      const auto results = run_selftest( st );
      auto suites = json::array();
      std::string human;
      bool all = true;
      for ( const auto& r : results )
      {
        all = all && r.passed();
        suites.push_back( { { "suite", r.name }, { "cases", r.cases }, { "failures", r.failures }, { "examples", r.examples } } );
        human += ( r.passed() ? "PASS " : "FAIL " ) + r.name + " (" + std::to_string( r.cases ) + " cases, " +
                 std::to_string( r.failures ) + " failures)\n";
        for ( const auto& e : r.examples )
          human += "  " + e + "\n";
      }
      human.pop_back();
      return s.report( json{ { "passed", all }, { "suites", suites } }, human, all ? exit_true : exit_false );
    }
  }
  catch ( const error& e )
  {
    return s.fail( e );
  }
  return exit_other;
}

int main( int argc, char** argv )
{
  std::vector<std::string> args( argv + 1, argv + argc );
  return run( args, std::cout, std::cerr );
}

} // namespace ccrmu::cli
