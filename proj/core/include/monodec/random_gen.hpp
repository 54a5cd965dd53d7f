#pragma once

#include "circuit.hpp"
#include "randomized.hpp"

#include <random>

namespace monodec
{

/* Seeded generators for test corpora. All draws go through the passed
   engine, so corpora are reproducible from a single seed. */

inline truth_table random_monotone_function( std::mt19937& rng, int n )
{
  std::uniform_int_distribution<int> shape( 0, 9 );
  int s = shape( rng );
  if ( s == 0 )
    return make_const( n, false );
  if ( s == 1 )
    return make_const( n, true );
  /* union of upward closures of a few random points */
  std::uniform_int_distribution<int> cnt( 1, 3 );
  std::uniform_int_distribution<uint64_t> pt( 0, ( uint64_t( 1 ) << n ) - 1 );
  truth_table f( n );
  int points = cnt( rng );
  for ( int i = 0; i < points; ++i )
  {
    uint64_t p = pt( rng );
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
      if ( ( x & p ) == p )
        f.set_bit( x, true );
  }
  return f;
}

inline truth_table random_function( std::mt19937& rng, int n )
{
  truth_table f( n );
  std::uniform_int_distribution<int> bit( 0, 1 );
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
    f.set_bit( x, bit( rng ) );
  return f;
}

inline circuit random_circuit( std::mt19937& rng, int n, int num_gates, int max_nots )
{
  circuit c( n );
  std::uniform_int_distribution<int> kind( 0, 4 );
  int nots = 0;
  int last = -1;
  for ( int g = 0; g < num_gates; ++g )
  {
    int hi = static_cast<int>( c.gates().size() ) - 1;
    std::uniform_int_distribution<int> pick( 0, hi );
    std::uniform_int_distribution<int> arity( 2, 3 );
    int k = kind( rng );
    if ( k == 4 && nots >= max_nots )
      k = 0;
    switch ( k )
    {
    case 0:
    case 1:
    {
      std::vector<int> fanins;
      int a = arity( rng );
      for ( int i = 0; i < a; ++i )
        fanins.push_back( pick( rng ) );
      last = k == 0 ? c.add_and( std::move( fanins ) ) : c.add_or( std::move( fanins ) );
      break;
    }
    case 2:
      last = c.add_const( std::uniform_int_distribution<int>( 0, 1 )( rng ) != 0 );
      break;
    case 3:
    {
      std::vector<int> fanins;
      int a = arity( rng );
      for ( int i = 0; i < a; ++i )
        fanins.push_back( pick( rng ) );
      std::uniform_int_distribution<int> th( 0, a + 1 );
      last = c.add_th( th( rng ), std::move( fanins ) );
      break;
    }
    case 4:
      last = c.add_not( pick( rng ) );
      ++nots;
      break;
    }
  }
  if ( last < 0 )
    last = c.add_const( false );
  c.set_outputs( { last } );
  return c;
}

inline rmdt_ptr random_rmdt_node( std::mt19937& rng, int n, int depth )
{
  std::uniform_int_distribution<int> coinflip( 0, 1 );
  if ( depth == 0 )
    return make_rmdt_leaf( coinflip( rng ) != 0 );
  std::uniform_int_distribution<int> kind( 0, 9 );
  int k = kind( rng );
  if ( k < 2 ) /* stop early */
    return make_rmdt_leaf( coinflip( rng ) != 0 );
  auto c0 = random_rmdt_node( rng, n, depth - 1 );
  auto c1 = random_rmdt_node( rng, n, depth - 1 );
  if ( k < 6 )
    return make_rmdt_coin( std::move( c0 ), std::move( c1 ) );
  return make_rmdt_query( query::from_table( random_monotone_function( rng, n ) ),
                          std::move( c0 ), std::move( c1 ) );
}

inline rmdt random_rmdt( std::mt19937& rng, int n, int height )
{
  return { n, random_rmdt_node( rng, n, height ) };
}

} // namespace monodec
