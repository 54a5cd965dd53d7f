#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <monodec/alternation.hpp>
#include <monodec/families.hpp>

#include <random>

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

TEST_CASE( "truth table basics and hex round trip" )
{
  auto f = truth_table::from_hex( 2, "6" ); /* XOR2 */
  CHECK( !f.get_bit( 0 ) );
  CHECK( f.get_bit( 1 ) );
  CHECK( f.get_bit( 2 ) );
  CHECK( !f.get_bit( 3 ) );
  CHECK( f.to_hex() == "6" );
  CHECK( truth_table::from_hex( 5, f.to_hex() + "0000000" ).num_vars() == 5 );
  CHECK_THROWS( truth_table::from_hex( 2, "1f" ) ); /* overflow bits set */

  auto g = make_threshold( 4, 2 );
  CHECK( truth_table::from_hex( 4, g.to_hex() ) == g );
  CHECK( ( f & ~f ).is_const0() );
  CHECK( ( f | ~f ).is_const1() );
}

TEST_CASE( "implication and monotonicity" )
{
  CHECK( make_threshold( 4, 3 ).implies( make_threshold( 4, 2 ) ) );
  CHECK( !make_threshold( 4, 2 ).implies( make_threshold( 4, 3 ) ) );
  CHECK( is_monotone( make_threshold( 5, 2 ) ) );
  CHECK( !is_monotone( make_parity( 3 ) ) );
  CHECK( !is_monotone( make_candidate_fn( 4 ) ) );
}

TEST_CASE( "alternation profile frozen values" )
{
  /* XOR2: a(00)=2, a(01)=a(10)=1, a(11)=0 */
  auto p = alt_profile( make_parity( 2 ) );
  CHECK( p.a == std::vector<int>{ 2, 1, 1, 0 } );

  /* AND2: one flip on every chain from below */
  auto q = alt_profile( tt( 2, 0x8 ) );
  CHECK( q.a == std::vector<int>{ 1, 1, 1, 0 } );

  CHECK( alternation( make_parity( 4 ) ) == 4 );
  CHECK( alternation( make_candidate_fn( 4 ) ) == 4 );
  CHECK( alternation( make_const( 3, false ) ) == 0 );
  CHECK( alternation( make_threshold( 4, 2 ) ) == 1 );
  CHECK( alternation( tt( 4, 0xF00F ) ) == 2 ); /* indicator-style two flips */
}

TEST_CASE( "dynamic program agrees with chain enumeration" )
{
  for ( int n = 1; n <= 4; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = tt( n, v );
      CHECK( alternation( f ) == alternation_bruteforce( f ) );
    }
  }
}

TEST_CASE( "alternation properties" )
{
  std::mt19937 rng( 7 );
  std::uniform_int_distribution<uint64_t> dist;
  for ( int i = 0; i < 100; ++i )
  {
    int n = 1 + i % 4;
    auto f = tt( n, dist( rng ) & ( ( uint64_t( 1 ) << ( 1 << n ) ) - 1 ) );
    CHECK( alternation( f ) == alternation( ~f ) );
    CHECK( alternation( f ) <= n );
    if ( is_monotone( f ) )
      CHECK( decrease( f ) == 0 );
  }
  CHECK( decrease( ~make_variable( 3, 1 ) ) == 1 );
  CHECK( decrease( make_parity( 3 ) ) == 1 );
  CHECK( decrease( make_parity( 4 ) ) == 2 );
}

TEST_CASE( "uniform alternation flag" )
{
  CHECK( is_uniform_alternation( make_parity( 3 ) ) );
  CHECK( is_uniform_alternation( make_const( 2, true ) ) );
  CHECK( is_uniform_alternation( tt( 2, 0x8 ) ) ); /* both AND2 chains flip once */
  /* indicator of the point 10: the chain through it flips twice, the
     chain through 01 never flips */
  CHECK( !is_uniform_alternation( make_point_indicator( 2, 1 ) ) );
  CHECK( !is_uniform_alternation( make_candidate_fn( 4 ) ) );
}

TEST_CASE( "builtin families" )
{
  auto th = make_threshold( 3, 2 );
  for ( uint64_t x = 0; x < 8; ++x )
    CHECK( th.get_bit( x ) == ( __builtin_popcountll( x ) >= 2 ) );
  CHECK( make_threshold( 3, 0 ).is_const1() );
  CHECK( make_threshold( 3, 4 ).is_const0() );

  auto f4 = make_candidate_fn( 4 ); /* !x1 x2 | !x3 x4 */
  CHECK( f4.get_bit( 0b0010 ) );
  CHECK( f4.get_bit( 0b1000 ) );
  CHECK( !f4.get_bit( 0b0001 ) );
  CHECK( !f4.get_bit( 0b1111 ) );
  CHECK( make_point_indicator( 3, 5 ).get_bit( 5 ) );
  CHECK( !make_point_indicator( 3, 5 ).get_bit( 4 ) );
  for ( uint64_t x = 0; x < 8; ++x )
    CHECK( make_variable( 3, 2 ).get_bit( x ) == bool( ( x >> 1 ) & 1u ) );
}
