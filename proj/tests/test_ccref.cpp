#include "oracles.hpp"

#include <ccrmu/ccref.hpp>
#include <ccrmu/search.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace ccrmu;

namespace
{

const action_alphabet ab{ "a", "b" };

oracle::pair_set as_set( const refinement_relation& z )
{
  const auto p = z.pairs();
  return { p.begin(), p.end() };
}

model random_model( std::mt19937& rng, std::size_t n, double density )
{
  std::vector<std::string> ids;
  for ( std::size_t i = 0; i < n; ++i )
    ids.push_back( "x" + std::to_string( i ) );
  model m( ab, ids, { "p", "q" } );
  std::bernoulli_distribution edge( density ), label( 0.5 );
  for ( std::size_t a = 0; a < 2; ++a )
    for ( std::size_t s = 0; s < n; ++s )
      for ( std::size_t t = 0; t < n; ++t )
        if ( edge( rng ) )
          m.add_transition( s, a, t );
  for ( const auto* p : { "p", "q" } )
    for ( std::size_t s = 0; s < n; ++s )
      m.set_atom( p, s, label( rng ) );
  return m;
}

} // namespace

TEST( verify_relation, examples )
{
  model m( ab, { "s", "t" } );
  m.add_transition( "s", "a", "t" );
  model n( ab, { "u" } );
  const signature sig( { "a" }, { "b" } );
  EXPECT_TRUE( verify_relation( {}, m, n, {}, sig ) );
  EXPECT_TRUE( verify_relation( { { 0, 0 }, { 1, 1 } }, m, m, {}, sig ) );
  EXPECT_FALSE( verify_relation( { { 0, 0 } }, m, n, {}, sig ) );
}

TEST( largest_refinement, contravariant_examples )
{
  const signature sig( { "a" }, { "b" } );
  model m( ab, { "s", "t" } );
  m.add_transition( "s", "b", "t" );
  model n( ab, { "u" } );
  EXPECT_TRUE( largest_refinement( m, n, {}, sig ).contains( 0, 0 ) );

  model single( ab, { "s" } );
  model grown( ab, { "u", "v" } );
  grown.add_transition( "u", "b", "v" );
  EXPECT_FALSE( largest_refinement( single, grown, {}, sig ).contains( 0, 0 ) );
}

TEST( refines, reflexive_for_every_signature )
{
  for ( const auto& pm : enumerate_models( ab, { "p" }, 2 ) )
    for ( const auto& sig : { signature(), signature( { "a" }, {} ), signature( { "a" }, { "b" } ), signature( {}, { "a", "b" } ) } )
      EXPECT_TRUE( refines( pm, pm, {}, sig ) );
}

TEST( refines, added_covariant_successor )
{
  model spec( ab, { "s0" }, { "p" } );
  spec.set_atom( "p", 0 );
  model impl( ab, { "u", "v", "w" }, { "p" } );
  impl.set_atom( "p", 0 );
  impl.add_transition( "u", "a", "v" );
  const signature sig( { "a" }, { "b" } );
  EXPECT_TRUE( refines( pointed_model( spec, 0 ), pointed_model( impl, 0 ), {}, sig ) );
  EXPECT_TRUE( oracle::exhaustive_refinement( spec, impl, {}, sig.cov, sig.contra ).count( { 0, 0 } ) );
}

TEST( largest_refinement, matches_exhaustive_oracle )
{
  const std::vector<signature> sigs{ signature(), signature( { "a" }, {} ), signature( {}, { "b" } ),
                                     signature( { "a" }, { "b" } ), signature( { "a", "b" }, {} ) };
  const auto models = enumerate_models( ab, { "p" }, 2 );
  std::size_t checked = 0;
  for ( std::size_t i = 0; i < models.size(); i += 7 )
    for ( std::size_t j = 0; j < models.size(); j += 5 )
      for ( const auto& sig : sigs )
        for ( const auto& p : { std::set<std::string>{}, std::set<std::string>{ "p" } } )
        {
          const auto& m = models[i].m;
          const auto& n = models[j].m;
          const auto z = largest_refinement( m, n, p, sig );
          EXPECT_EQ( as_set( z ), oracle::exhaustive_refinement( m, n, p, sig.cov, sig.contra ) );
          EXPECT_TRUE( verify_relation( z.pairs(), m, n, p, sig ) );
          ++checked;
        }
  EXPECT_GT( checked, 1000u );
}

TEST( largest_refinement, special_cases_on_random_models )
{
  std::mt19937 rng( 7 );
  for ( int round = 0; round < 20; ++round )
  {
    const auto m = random_model( rng, 3 + round % 12, 0.15 );
    const auto n = random_model( rng, 3 + ( round * 5 ) % 12, 0.15 );
    EXPECT_EQ( as_set( largest_refinement( m, n, {}, signature() ) ), oracle::bisimilarity( m, n ) );
    EXPECT_EQ( as_set( largest_refinement( m, n, {}, signature( { "a", "b" }, {} ) ) ), oracle::simulation( m, n ) );
    oracle::pair_set flipped;
    for ( const auto& [t, s] : oracle::simulation( n, m ) )
      flipped.emplace( s, t );
    EXPECT_EQ( as_set( largest_refinement( m, n, {}, signature( {}, { "a", "b" } ) ) ), flipped );
  }
}

TEST( largest_refinement, restriction_only_widens )
{
  const signature sig( { "a" }, { "b" } );
  const auto models = enumerate_models( ab, { "p" }, 2 );
  for ( std::size_t i = 0; i < models.size(); i += 11 )
    for ( std::size_t j = 0; j < models.size(); j += 13 )
    {
      const auto narrow = as_set( largest_refinement( models[i].m, models[j].m, {}, sig ) );
      const auto wide = as_set( largest_refinement( models[i].m, models[j].m, { "p" }, sig ) );
      for ( const auto& c : narrow )
        EXPECT_TRUE( wide.count( c ) );
    }
}
