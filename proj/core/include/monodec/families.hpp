#pragma once

#include "truth_table.hpp"

#include <bit>

namespace monodec
{

inline truth_table make_const( int n, bool value )
{
  truth_table t( n );
  return value ? ~t : t;
}

/* Th_k(x) = 1 iff wt(x) >= k; k in [0, n+1]. */
inline truth_table make_threshold( int n, int k )
{
  if ( k < 0 || k > n + 1 )
    throw std::invalid_argument( "make_threshold: k out of [0, n+1]" );
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, std::popcount( x ) >= k );
  return t;
}

inline truth_table make_parity( int n )
{
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, std::popcount( x ) & 1 );
  return t;
}

/* f^n(x) = ~x1 x2 | ~x3 x4 | ... | ~x_{n-1} x_n; n even. */
inline truth_table make_candidate_fn( int n )
{
  if ( n % 2 != 0 )
    throw std::invalid_argument( "make_candidate_fn: arity must be even" );
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    bool v = false;
    for ( int i = 0; i < n; i += 2 )
      v |= !( ( x >> i ) & 1 ) && ( ( x >> ( i + 1 ) ) & 1 );
    t.set_bit( x, v );
  }
  return t;
}

inline truth_table make_point_indicator( int n, uint64_t point )
{
  truth_table t( n );
  if ( point >= t.num_bits() )
    throw std::invalid_argument( "make_point_indicator: point out of range" );
  t.set_bit( point, true );
  return t;
}

/* Single variable x_i as a function, i in [1, n]. */
inline truth_table make_variable( int n, int i )
{
  if ( i < 1 || i > n )
    throw std::invalid_argument( "make_variable: index out of range" );
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, ( x >> ( i - 1 ) ) & 1 );
  return t;
}

} // namespace monodec
