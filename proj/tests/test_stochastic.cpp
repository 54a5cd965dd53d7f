#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <monodec/nondet.hpp>
#include <monodec/random_gen.hpp>
#include <monodec/randomized.hpp>
#include <monodec/selftest.hpp>

using namespace monodec;

namespace
{

truth_table tt( int n, uint64_t bits )
{
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, ( bits >> x ) & 1u );
  return t;
}

} // namespace

TEST_CASE( "dyadic arithmetic" )
{
  CHECK( dyadic( 1, 1 ) + dyadic( 1, 2 ) == dyadic( 3, 2 ) );
  CHECK( dyadic( 1, 2 ) + dyadic( 1, 2 ) == dyadic( 1, 1 ) );
  CHECK( dyadic( 0, 5 ) == dyadic( 0, 0 ) );
  CHECK( dyadic( 1, 2 ) < dyadic( 1, 1 ) );
  CHECK( !( dyadic( 1, 1 ) < dyadic( 1, 1 ) ) );
  CHECK( dyadic( 2, 2 ) == dyadic( 1, 1 ) );
  CHECK( dyadic( 3, 2 ).str() == "3/2^2" );
}

TEST_CASE( "acceptance probability of a small coin tree" )
{
  /* coin -> (query AND2 -> 0/1, leaf 1): p = 1/2 [f] + 1/2 */
  auto and2 = query::from_table( tt( 2, 0x8 ) );
  rmdt t{ 2, make_rmdt_coin(
                 make_rmdt_query( and2, make_rmdt_leaf( false ), make_rmdt_leaf( true ) ),
                 make_rmdt_leaf( true ) ) };
  CHECK( rmdt_accept_prob( t, 0 ) == dyadic( 1, 1 ) );
  CHECK( rmdt_accept_prob( t, 3 ) == dyadic( 1, 0 ) );
  CHECK( rmdt_accept_prob( t, 0 ) == rmdt_accept_prob_oracle( t, 0 ) );
  CHECK( rmdt_function_half( t ).is_const1() ); /* p >= 1/2 everywhere */
}

TEST_CASE( "closed-form probability equals coin enumeration on a corpus" )
{
  std::mt19937 rng( 19 );
  for ( int i = 0; i < 120; ++i )
  {
    int n = 2 + i % 4;
    auto t = random_rmdt( rng, n, 2 + i % 4 );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
      CHECK( rmdt_accept_prob( t, x ) == rmdt_accept_prob_oracle( t, x ) );
  }
}

TEST_CASE( "computing a function at both thresholds" )
{
  auto or2 = query::from_table( tt( 2, 0xE ) );
  /* plain deterministic query tree computes OR2 at any threshold */
  rmdt t{ 2, make_rmdt_query( or2, make_rmdt_leaf( false ), make_rmdt_leaf( true ) ) };
  CHECK( rmdt_computes( t, tt( 2, 0xE ), rmdt_threshold::half ) );
  CHECK( rmdt_computes( t, tt( 2, 0xE ), rmdt_threshold::two_thirds ) );
  CHECK( !rmdt_computes( t, tt( 2, 0x8 ), rmdt_threshold::half ) );

  /* a fair coin over constant leaves computes nothing at 2/3 */
  rmdt c{ 2, make_rmdt_coin( make_rmdt_leaf( false ), make_rmdt_leaf( true ) ) };
  CHECK( !rmdt_computes( c, make_const( 2, true ), rmdt_threshold::two_thirds ) );
  CHECK( rmdt_computes( c, make_const( 2, true ), rmdt_threshold::half ) );
}

TEST_CASE( "normal form preserves acceptance probabilities exactly" )
{
  std::mt19937 rng( 23 );
  for ( int i = 0; i < 60; ++i )
  {
    int n = 2 + i % 3;
    auto t = random_rmdt( rng, n, 2 + i % 3 );
    auto norm = rmdt_normalize( t );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
      CHECK( rmdt_accept_prob( t, x ) == rmdt_accept_prob( norm, x ) );
  }
}

TEST_CASE( "derandomization at threshold one half" )
{
  std::mt19937 rng( 29 );
  for ( int i = 0; i < 80; ++i )
  {
    int n = 2 + i % 3;
    int h = 2 + i % 4;
    auto t = random_rmdt( rng, n, h );
    auto d = rmdt_derandomize( t );
    CHECK( mdt_height( d ) <= rmdt_height( t ) );
    CHECK( mdt_table( d ) == rmdt_function_half( t ) );
  }
}

TEST_CASE( "query-set expansion preserves child probabilities" )
{
  auto q1 = query::from_table( tt( 2, 0x8 ) );
  auto q2 = query::from_table( tt( 2, 0xE ) );
  rmdt w{ 2, make_rmdt_qset( { q1, q2 }, make_rmdt_leaf( false ),
                             make_rmdt_leaf( true ) ) };
  auto r = wrmdt_to_rmdt( w );
  CHECK( rmdt_height( r ) == 2 ); /* (1 + log 2) * 1 */
  for ( uint64_t x = 0; x < 4; ++x )
    CHECK( rmdt_accept_prob( w, x ) == rmdt_accept_prob( r, x ) );

  std::mt19937 rng( 31 );
  for ( int w_sz : { 2, 4, 8 } )
  {
    int k = ceil_log2( w_sz );
    for ( int i = 0; i < 8; ++i )
    {
      rmdt t{ 3, detail::random_qset_node( rng, 3, w_sz, 2 ) };
      auto e = wrmdt_to_rmdt( t );
      CHECK( rmdt_height( e ) == ( 1 + k ) * 2 );
      for ( uint64_t x = 0; x < 8; ++x )
        CHECK( rmdt_accept_prob( t, x ) == rmdt_accept_prob( e, x ) );
    }
  }
}

TEST_CASE( "majority form votes like the original tree" )
{
  std::mt19937 rng( 37 );
  for ( int i = 0; i < 40; ++i )
  {
    int n = 2 + i % 3;
    auto t = random_rmdt( rng, n, 2 + i % 3 );
    auto parts = rmdt_to_majority_form( t );
    REQUIRE( !parts.empty() );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
    {
      size_t votes = 0;
      for ( auto const& p : parts )
        votes += mdt_eval( p, x ) ? 1 : 0;
      CHECK( ( 2 * votes >= parts.size() ) == rmdt_function_half( t ).get_bit( x ) );
    }
  }
}

TEST_CASE( "nondeterministic trees from the decomposition" )
{
  auto f = make_parity( 2 );
  auto t = nmdt_build( f );
  CHECK( nmdt_branches( t ) == 1 );
  CHECK( nmdt_height( t.root ) == 2 );
  for ( uint64_t x = 0; x < 4; ++x )
    CHECK( nmdt_eval( t, x ) == f.get_bit( x ) );

  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << 8 ); ++v )
  {
    auto g = tt( 3, v );
    auto u = nmdt_build( g );
    int b = nmdt_branches( u );
    CHECK( b == ( alternation( g ) + 1 ) / 2 + ( alternation( g ) % 2 == 0 &&
                                                 g.get_bit( 0 ) ? 1 : 0 ) );
    auto m2 = m1_to_m2( u );
    auto back = m2_to_m1( m2 );
    CHECK( nmdt_height( m2.root ) == 2 * nmdt_height( u.root ) );
    for ( uint64_t x = 0; x < 8; ++x )
    {
      CHECK( nmdt_eval( u, x ) == g.get_bit( x ) );
      CHECK( nmdt_eval( m2, x ) == g.get_bit( x ) );
      CHECK( nmdt_eval( back, x ) == g.get_bit( x ) );
    }
  }
}
