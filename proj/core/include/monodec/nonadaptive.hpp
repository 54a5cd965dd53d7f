#pragma once

#include "decomposition.hpp"

#include <bit>

namespace monodec
{

/*
 * Non-adaptive monotone decision tree: a fixed list of h monotone
 * queries plus a label table over the 2^h result strings. The result
 * string (f_1(x), ..., f_h(x)) indexes the table with f_1 least
 * significant.
 */
struct namdt
{
  int n = 0;
  std::vector<truth_table> queries;
  std::vector<bool> labels; /* size 2^h */
};

inline int namdt_height( namdt const& t ) { return static_cast<int>( t.queries.size() ); }

inline bool namdt_eval( namdt const& t, uint64_t x )
{
  uint64_t idx = 0;
  for ( size_t i = 0; i < t.queries.size(); ++i )
    if ( t.queries[i].get_bit( x ) )
      idx |= uint64_t( 1 ) << i;
  return t.labels[idx];
}

inline truth_table namdt_table( namdt const& t )
{
  truth_table tab( t.n );
  for ( uint64_t x = 0; x < tab.num_bits(); ++x )
    tab.set_bit( x, namdt_eval( t, x ) );
  return tab;
}

/*
 * Height-alt(f) non-adaptive tree. Queries are the alternation
 * decomposition components g_i = [a_f(x) < i]; exactly k - a_f(x) of
 * them pass, so the parity of the result string determines f when
 * f(0^n) = 0 and its complement does when f(0^n) = 1. Result strings
 * never produced by any input are labeled by the same rule.
 */
inline namdt namdt_build( truth_table const& f, int max_n = default_max_n )
{
  namdt t;
  t.n = f.num_vars();
  int k = alternation( f, max_n );
  auto d = alternation_decomposition( f, max_n );
  t.queries.assign( d.components.begin(), d.components.begin() + k );
  bool flip = f.get_bit( 0 );
  t.labels.resize( uint64_t( 1 ) << k );
  for ( uint64_t r = 0; r < t.labels.size(); ++r )
    t.labels[r] = ( std::popcount( r ) % 2 == 1 ) != flip;
  return t;
}

} // namespace monodec
