#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <monodec/certificate.hpp>
#include <monodec/decision_tree.hpp>
#include <monodec/io.hpp>
#include <monodec/nonadaptive.hpp>
#include <monodec/random_gen.hpp>
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

TEST_CASE( "decision list from XOR2 decomposition" )
{
  auto f = make_parity( 2 );
  auto l = mdl_from_decomposition( alternation_decomposition( f ) );
  /* (AND2, 0)(OR2, 1)(1, 0): constants alternate and end low */
  REQUIRE( l.nodes.size() == 3 );
  CHECK( !l.nodes[0].c );
  CHECK( l.nodes[1].c );
  CHECK( !l.nodes[2].c );
  CHECK( l.nodes[2].q.materialize( 2 ).is_const1() );
  CHECK( mdl_table( l ) == f );
}

TEST_CASE( "list semantics for every small function" )
{
  for ( int n = 0; n <= 3; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = tt( n, v );
      auto l = mdl_from_decomposition( alternation_decomposition( f ) );
      CHECK( mdl_table( l ) == f );
      CHECK( l.nodes.size() == size_t( alternation( f ) + 1 ) );
    }
  }
}

TEST_CASE( "normal forms preserve semantics and are idempotent" )
{
  std::mt19937 rng( 11 );
  for ( int i = 0; i < 60; ++i )
  {
    auto l = detail::random_mdl( rng, 3 );
    auto ref = mdl_table( l );

    auto a = mdl_normalize_alternating( l );
    CHECK( mdl_table( a ) == ref );
    for ( size_t j = 0; j + 1 < a.nodes.size(); ++j )
      CHECK( a.nodes[j].c != a.nodes[j + 1].c );
    CHECK( mdl_normalize_alternating( a ).nodes.size() == a.nodes.size() );

    auto ff = mdl_normalize_forward_firing( l );
    CHECK( mdl_table( ff ) == ref );
    for ( size_t j = 0; j + 1 < ff.nodes.size(); ++j )
      CHECK( ff.nodes[j].q.materialize( 3 ).implies( ff.nodes[j + 1].q.materialize( 3 ) ) );
  }
}

TEST_CASE( "tree from list: exhaustive equivalence and height" )
{
  for ( int n = 0; n <= 3; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = tt( n, v );
      auto t = mdt_build( f );
      CHECK( mdt_table( t ) == f );
      CHECK( mdt_height( t ) == ceil_log2( alternation( f ) + 1 ) );
    }
  }
}

TEST_CASE( "binary search tree shape over an eight-node list" )
{
  CHECK( detail::binary_search_shape_ok() );
}

TEST_CASE( "list extracted from a complete tree, path by path" )
{
  CHECK( detail::tree_to_list_shape_ok() );
}

TEST_CASE( "round trips between lists and trees" )
{
  std::mt19937 rng( 13 );
  for ( int i = 0; i < 80; ++i )
  {
    auto l = detail::random_mdl( rng, 2 + i % 3 );
    auto ref = mdl_table( l );
    auto t = mdt_from_mdl( l );
    auto l2 = mdl_from_mdt( t );
    CHECK( mdt_table( t ) == ref );
    CHECK( mdl_table( l2 ) == ref );
    CHECK( mdt_table( mdt_from_mdl( l2 ) ) == ref );
  }
}

TEST_CASE( "non-adaptive trees" )
{
  auto f = make_parity( 2 );
  auto t = namdt_build( f );
  REQUIRE( t.queries.size() == 2 );
  /* answer pattern r = (f1, f2): odd-weight patterns are accepting */
  CHECK( t.labels == std::vector<bool>{ false, true, true, false } );
  CHECK( namdt_table( t ) == f );

  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << 8 ); ++v )
  {
    auto g = tt( 3, v );
    auto u = namdt_build( g );
    CHECK( namdt_height( u ) == alternation( g ) );
    CHECK( namdt_table( u ) == g );
  }
}

TEST_CASE( "monotone certificates" )
{
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << 8 ); ++v )
  {
    auto f = tt( 3, v );
    for ( uint64_t x = 0; x < 8; ++x )
    {
      auto s = adaptive_certificate( f, x );
      CHECK( s.functions.size() <= 2 );
      CHECK( verify_certificate( f, s ) );
    }
    auto g = nonadaptive_certificate( f );
    CHECK( g.functions.size() == size_t( alternation( f ) ) );
    CHECK( verify_certificate( f, g ) );
  }
}

TEST_CASE( "model JSON round trips with shared query table" )
{
  auto f = make_candidate_fn( 4 );
  auto l = mdl_from_decomposition( alternation_decomposition( f ) );
  auto lj = mdl_to_json( l );
  CHECK( mdl_table( mdl_from_json( lj ) ) == f );

  auto t = mdt_build( f );
  auto jt = mdt_to_json( t );
  auto t2 = mdt_from_json( jt );
  CHECK( mdt_table( t2 ) == f );
  CHECK( mdt_height( t2 ) == mdt_height( t ) );

  /* the tree reuses list queries: the query table must deduplicate */
  auto l2 = mdl_from_mdt( t );
  auto j2 = mdl_to_json( l2 );
  CHECK( j2["queries"].size() <= 2 * l2.nodes.size() );
  CHECK( mdl_table( mdl_from_json( j2 ) ) == f );

  auto na = namdt_build( f );
  CHECK( namdt_table( namdt_from_json( namdt_to_json( na ) ) ) == f );
}

TEST_CASE( "text formats round trip" )
{
  auto f = make_candidate_fn( 4 );
  CHECK( tt_from_text( tt_to_text( f ) ) == f );
  auto d = alternation_decomposition( f );
  auto d2 = decomposition_from_text( decomposition_to_text( d ) );
  CHECK( d2.components == d.components );
  CHECK( d2.target == d.target );
  CHECK_THROWS( tt_from_text( "m=3\nff\n" ) );
  CHECK_THROWS( decomposition_from_text( "n=2 m=4 dir=asc\n8\n" ) );
}
