#pragma once

#include "truth_table.hpp"

#include <algorithm>
#include <numeric>

namespace monodec
{

/*
 * Alternation profile of a function: for every point x, the maximum
 * number of value flips of f along any chain starting at x. Computed
 * by a dynamic program descending from the all-ones point over
 * covering pairs; refining any chain to a maximal one never decreases
 * its flip count, so covering steps suffice.
 */
struct alt_profile_t
{
  int n;
  std::vector<int> a; /* indexed by assignment */
};

namespace detail
{

template<typename Combine>
inline std::vector<int> chain_flip_dp( truth_table const& f, Combine combine, int init )
{
  uint64_t size = f.num_bits();
  std::vector<int> a( size, 0 );
  /* iterate indices downward: every cover y = x | bit has a larger index */
  for ( uint64_t xi = size; xi-- > 0; )
  {
    if ( xi + 1 == size )
      continue; /* all-ones point: no chain continues */
    int best = init;
    bool fx = f.get_bit( xi );
    for ( int i = 0; i < f.num_vars(); ++i )
    {
      uint64_t y = xi | ( uint64_t( 1 ) << i );
      if ( y == xi )
        continue;
      int cand = a[y] + ( fx != f.get_bit( y ) ? 1 : 0 );
      best = combine( best, cand );
    }
    a[xi] = best;
  }
  return a;
}

} // namespace detail

inline alt_profile_t alt_profile( truth_table const& f, int max_n = default_max_n )
{
  if ( f.num_vars() > max_n )
    throw std::invalid_argument( "alt_profile: arity above max_n" );
  return { f.num_vars(),
           detail::chain_flip_dp( f, []( int a, int b ) { return std::max( a, b ); }, 0 ) };
}

inline int alternation( truth_table const& f, int max_n = default_max_n )
{
  return alt_profile( f, max_n ).a[0];
}

/* Maximum flips over all n! maximal chains, by direct enumeration.
   Independent oracle for alternation(); exponentially slower. */
inline int alternation_bruteforce( truth_table const& f )
{
  if ( f.num_vars() > 6 )
    throw std::invalid_argument( "alternation_bruteforce: arity too large for enumeration" );
  int n = f.num_vars();
  std::vector<int> perm( n );
  std::iota( perm.begin(), perm.end(), 0 );
  int best = 0;
  do
  {
    uint64_t x = 0;
    bool prev = f.get_bit( 0 );
    int flips = 0;
    for ( int i = 0; i < n; ++i )
    {
      x |= uint64_t( 1 ) << perm[i];
      bool cur = f.get_bit( x );
      if ( cur != prev )
        ++flips;
      prev = cur;
    }
    best = std::max( best, flips );
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return best;
}

/* Maximum number of 1 -> 0 drops of f along any increasing chain.
   Zero exactly for monotone functions; the negation lower bound for
   depth-d circuits is stated in terms of this measure. */
inline int decrease( truth_table const& f, int max_n = default_max_n )
{
  if ( f.num_vars() > max_n )
    throw std::invalid_argument( "decrease: arity above max_n" );
  uint64_t size = f.num_bits();
  std::vector<int> d( size, 0 );
  for ( uint64_t xi = size; xi-- > 0; )
  {
    if ( xi + 1 == size )
      continue;
    bool fx = f.get_bit( xi );
    int best = 0;
    for ( int i = 0; i < f.num_vars(); ++i )
    {
      uint64_t y = xi | ( uint64_t( 1 ) << i );
      if ( y == xi )
        continue;
      int cand = d[y] + ( fx && !f.get_bit( y ) ? 1 : 0 );
      best = std::max( best, cand );
    }
    d[xi] = best;
  }
  return d[0];
}

/* True iff every maximal chain has the same number of flips: the
   min-flip DP from 0^n agrees with the max-flip DP. */
inline bool is_uniform_alternation( truth_table const& f, int max_n = default_max_n )
{
  if ( f.num_vars() > max_n )
    throw std::invalid_argument( "is_uniform_alternation: arity above max_n" );
  if ( f.num_vars() == 0 )
    return true;
  auto max_dp = detail::chain_flip_dp(
      f, []( int a, int b ) { return std::max( a, b ); }, 0 );
  auto min_dp = detail::chain_flip_dp(
      f, []( int a, int b ) { return a < 0 ? b : std::min( a, b ); }, -1 );
  return max_dp[0] == min_dp[0];
}

} // namespace monodec
