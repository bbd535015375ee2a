#include <ccrmu/corpus.hpp>
#include <ccrmu/dnf.hpp>
#include <ccrmu/elim.hpp>
#include <ccrmu/mc.hpp>
#include <ccrmu/search.hpp>
#include <ccrmu/selftest.hpp>
#include <ccrmu/syntax.hpp>
#include <ccrmu/tableau.hpp>

namespace ccrmu
{

namespace
{

void record( suite_result& r, bool ok, const std::string& what )
{
  ++r.cases;
  if ( ok )
    return;
  ++r.failures;
  if ( r.examples.size() < 5u )
    r.examples.push_back( what );
}

std::string where( const formula& f, const pointed_model& pm )
{
  return f.text() + " @ " + model_to_json( pm.m, pm.point );
}

} // namespace

std::vector<suite_result> run_selftest( const selftest_options& options )
{
  const action_alphabet alphabet{ "a", "b" };
  const auto models = enumerate_models( alphabet, { "p" }, options.max_states );
  std::vector<suite_result> out;

  suite_result round_trip{ "render-parse round trip", 0, 0, {} };
  for ( const auto& e : corpus() )
  {
    const auto f = parse( e.text );
    record( round_trip, parse( f.text() ) == f && parse( f.text() ).text() == f.text(), std::string( e.text ) );
  }
  out.push_back( std::move( round_trip ) );

  suite_result df_labels{ "df recognition", 0, 0, {} };
  for ( const auto& e : corpus() )
    record( df_labels, is_df( parse( e.text ) ) == e.df, std::string( e.text ) );
  out.push_back( std::move( df_labels ) );

  suite_result negation{ "negation normal form", 0, 0, {} };
  suite_result disjunctive{ "disjunctive form", 0, 0, {} };
  suite_result tableaux{ "tableau against model checking", 0, 0, {} };
  for ( const auto& e : corpus() )
  {
    const auto f = parse( e.text );
    const auto g = nnf( f );
    const bool fixpoint_free = !has_fixpoint( f );
    const auto d = fixpoint_free ? to_df( f ) : f;
    std::optional<tableau> t;
    if ( fixpoint_free && e.df )
      t = build_tableau( f );
    if ( fixpoint_free )
      record( disjunctive, is_df( d ), "not df: " + d.text() );
    for ( const auto& pm : models )
    {
      const auto ext = extension( pm.m, f );
      record( negation, ext == extension( pm.m, g ), where( f, pm ) );
      if ( fixpoint_free )
        record( disjunctive, ext == extension( pm.m, d ), where( f, pm ) );
      if ( t )
      {
        const auto mk = find_marking( *t, pm );
        record( tableaux, mk.has_value() == ext.test( pm.point ) && ( !mk || verify_marking( *t, pm, *mk ) ), where( f, pm ) );
      }
    }
  }
  out.push_back( std::move( negation ) );
  out.push_back( std::move( disjunctive ) );
  out.push_back( std::move( tableaux ) );

  suite_result soundness{ "elimination against witness search", 0, 0, {} };
  const signature sig( { "a" }, { "b" } );
  for ( const auto& f : df_corpus() )
  {
    const auto q = exists( sig, f );
    for ( const auto& pm : models )
    {
      const auto v = check_cc( pm, q );
      const auto w = witness_search( pm, sig, f, options.witness_bound );
      record( soundness, !w || v.is_yes(), where( q, pm ) );
    }
  }
  out.push_back( std::move( soundness ) );
  return out;
}

} // namespace ccrmu
