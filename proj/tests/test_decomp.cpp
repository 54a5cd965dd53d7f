#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <monodec/decomposition.hpp>
#include <monodec/families.hpp>

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

TEST_CASE( "alternation decomposition of XOR2 is AND2, OR2" )
{
  auto d = alternation_decomposition( make_parity( 2 ) );
  REQUIRE( d.components.size() == 2 );
  CHECK( d.components[0] == tt( 2, 0x8 ) ); /* AND2 */
  CHECK( d.components[1] == tt( 2, 0xE ) ); /* OR2 */
  CHECK( verify_decomposition( make_parity( 2 ), d ).all_ok() );
}

TEST_CASE( "decomposition report over all small functions" )
{
  for ( int n = 0; n <= 4; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = tt( n, v );
      auto d = alternation_decomposition( f );
      auto rep = verify_decomposition( f, d );
      CHECK( rep.all_ok() );
      /* length alt(f), plus a constant-one component when f(0)=1 */
      CHECK( rep.length == size_t( alternation( f ) + ( f.get_bit( 0 ) ? 1 : 0 ) ) );
    }
  }
}

TEST_CASE( "threshold-interleaved decomposition" )
{
  auto f = make_parity( 2 );
  auto d = threshold_interleaved_decomposition( f );
  REQUIRE( d.components.size() == 5 );
  truth_table acc( 2 );
  for ( size_t i = 0; i < d.components.size(); ++i )
  {
    CHECK( is_monotone( d.components[i] ) );
    if ( i + 1 < d.components.size() )
      CHECK( d.components[i].implies( d.components[i + 1] ) );
    acc = acc ^ d.components[i];
  }
  CHECK( acc == f );

  /* not length-optimal in general: 2n+1 components regardless of alt */
  CHECK( threshold_interleaved_decomposition( make_const( 3, false ) ).components.size() ==
         7 );
}

TEST_CASE( "uniform-chain decomposition equals the canonical one" )
{
  for ( auto f : { make_parity( 2 ), make_parity( 3 ), make_threshold( 3, 2 ),
                   make_const( 3, true ) } )
  {
    REQUIRE( is_uniform_alternation( f ) );
    CHECK( uniform_chain_decomposition( f ).components ==
           alternation_decomposition( f ).components );
  }
  CHECK_THROWS( uniform_chain_decomposition( make_point_indicator( 2, 1 ) ) );
}

TEST_CASE( "four evaluation forms agree" )
{
  monotone_decomposition d;
  d.target = make_parity( 2 );
  d.components = { tt( 2, 0x8 ), tt( 2, 0xE ) };
  CHECK( four_forms_check( d ) );

  monotone_decomposition zeros;
  zeros.target = make_const( 2, false );
  zeros.components = { make_const( 2, false ), make_const( 2, false ) };
  CHECK( four_forms_check( zeros ) );

  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << 16 ); v += 7 )
  {
    auto f = tt( 4, v );
    CHECK( four_forms_check( pad_even( alternation_decomposition( f ) ) ) );
  }
}

TEST_CASE( "pad_even prepends a constant-zero component" )
{
  auto d = pad_even( alternation_decomposition( make_threshold( 3, 2 ) ) );
  REQUIRE( d.components.size() == 2 );
  CHECK( d.components[0].is_const0() );
  CHECK( d.components[1] == make_threshold( 3, 2 ) );
}

TEST_CASE( "no shorter decomposition exists at small arity" )
{
  /* a length-1 decomposition is a single monotone function equal to f,
     so any f with alt(f) = 2 and f(0) = 0 cannot be decomposed shorter */
  for ( int n = 1; n <= 3; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = tt( n, v );
      if ( f.get_bit( 0 ) || alternation( f ) != 2 )
        continue;
      CHECK( !is_monotone( f ) );
    }
  }
}
