#pragma once

#include "circuit.hpp"

#include <cmath>
#include <string>

namespace monodec
{

struct negation_budget_report
{
  int negations_used = 0;
  int bound = 0;
  std::string bound_formula;
};

inline int ceil_log2( long long v ) /* ceil(log2(v)), v >= 1 */
{
  int r = 0;
  long long p = 1;
  while ( p < v )
  {
    p <<= 1;
    ++r;
  }
  return r;
}

namespace detail
{

/*
 * Emits gates inverting the sorted wire vector s (ascending, 0^j 1^(m-j))
 * inside an existing circuit; returns the output wires. One NOT per
 * recursion level: the pivot bit s_{q+1} (q = floor(m/2)) selects which
 * half still contains the 0/1 switch, and a single recursive inverter of
 * size q is shared between the halves through monotone multiplexers.
 */
inline std::vector<int> emit_sorted_inverter( circuit& c, std::vector<int> const& s )
{
  size_t m = s.size();
  if ( m == 0 )
    return {};
  size_t q = m / 2;
  int pivot = s[q]; /* s_{q+1} */
  int npivot = c.add_not( pivot );
  if ( m == 1 )
    return { npivot };

  /* recursive inverter input: first half if pivot=1, tail (1-padded) if pivot=0 */
  std::vector<int> t( q );
  int one = -1;
  for ( size_t i = 0; i < q; ++i )
  {
    int alt;
    if ( q + 1 + i < m )
      alt = s[q + 1 + i];
    else
    {
      if ( one < 0 )
        one = c.add_const( true );
      alt = one;
    }
    t[i] = c.add_or( { c.add_and( { pivot, s[i] } ), c.add_and( { npivot, alt } ) } );
  }
  auto r = emit_sorted_inverter( c, t );

  std::vector<int> out( m );
  for ( size_t i = 0; i < q; ++i )
    out[i] = c.add_or( { r[i], npivot } );
  out[q] = npivot;
  for ( size_t i = q + 1; i < m; ++i )
    out[i] = c.add_and( { npivot, r[i - q - 1] } );
  return out;
}

/*
 * Block-structured variant: split the sorted wire vector into t blocks,
 * spend two NOTs per block to classify it, route the unique
 * switch-carrying block to the next level, and wire constant blocks
 * directly. The base (levels exhausted or vector too short) inverts
 * naively, one NOT per wire.
 */
inline std::vector<int> emit_block_inverter( circuit& c, std::vector<int> w, int t,
                                             int levels )
{
  size_t len = w.size();
  if ( levels == 0 || len <= 1 || t == 1 )
  {
    std::vector<int> out( len );
    for ( size_t i = 0; i < len; ++i )
      out[i] = c.add_not( w[i] );
    return out;
  }
  int p = static_cast<int>( ( len + t - 1 ) / t );
  /* pad to t*p with constant ones; appending 1s keeps the string sorted */
  size_t padded = size_t( t ) * p;
  int one = -1;
  while ( w.size() < padded )
  {
    if ( one < 0 )
      one = c.add_const( true );
    w.push_back( one );
  }

  std::vector<int> b( t ), nlast( t );
  for ( int i = 0; i < t; ++i )
  {
    int first = w[size_t( i ) * p];
    int last = w[size_t( i ) * p + p - 1];
    nlast[i] = c.add_not( last );
    b[i] = c.add_and( { c.add_not( first ), last } ); /* block carries the 0->1 switch */
  }

  /* special block: OR over blocks gated by b_i */
  std::vector<int> special( p );
  for ( int j = 0; j < p; ++j )
  {
    std::vector<int> terms;
    for ( int i = 0; i < t; ++i )
      terms.push_back( c.add_and( { b[i], w[size_t( i ) * p + j] } ) );
    special[j] = c.add_or( terms );
  }

  auto nspecial = emit_block_inverter( c, special, t, levels - 1 );

  std::vector<int> out( len );
  for ( size_t idx = 0; idx < len; ++idx )
  {
    int i = static_cast<int>( idx ) / p;
    int j = static_cast<int>( idx ) % p;
    /* special block gets the inverted wires, constant blocks ~last */
    out[idx] = c.add_or( { c.add_and( { b[i], nspecial[j] } ), nlast[i] } );
  }
  return out;
}

/*
 * General inverter over arbitrary wires: thresholds Th_m..Th_1 of the
 * wires form an ascending sorted vector; inverting it yields all ~Th_k,
 * from which each complement is recovered as
 *   ~z_i = OR_{k=0}^{m-1} [wt(z)=k] & Th_k(z \ {z_i}).
 * Uses exactly ceil(log(m+1)) NOT gates.
 */
inline std::vector<int> emit_fischer_inverter( circuit& c, std::vector<int> const& z )
{
  int m = static_cast<int>( z.size() );

  /* th[k] computes Th_k(z), k = 1..m */
  std::vector<int> th( m + 1 );
  for ( int k = 1; k <= m; ++k )
    th[k] = c.add_th( k, z );

  std::vector<int> sorted( m );
  for ( int i = 0; i < m; ++i )
    sorted[i] = th[m - i]; /* ascending: Th_m <= ... <= Th_1 */
  auto inv = emit_sorted_inverter( c, sorted );
  std::vector<int> nth( m + 1 ); /* nth[k] = ~Th_k(z) */
  for ( int k = 1; k <= m; ++k )
    nth[k] = inv[m - k];

  std::vector<int> outs( m );
  for ( int i = 0; i < m; ++i )
  {
    std::vector<int> others;
    for ( int j = 0; j < m; ++j )
      if ( j != i )
        others.push_back( z[j] );
    std::vector<int> terms;
    for ( int k = 0; k < m; ++k )
    {
      /* [wt(z)=k] = Th_k & ~Th_{k+1}; Th_0 = 1, Th_k over z minus z_i */
      std::vector<int> factors;
      if ( k >= 1 )
      {
        factors.push_back( th[k] );
        factors.push_back( c.add_th( k, others ) );
      }
      factors.push_back( nth[k + 1] );
      terms.push_back( c.add_and( factors ) );
    }
    outs[i] = terms.empty() ? c.add_const( false ) : c.add_or( terms );
  }
  return outs;
}

} // namespace detail

/*
 * m-input m-output circuit that complements every ascending-sorted
 * input 0^j 1^(m-j); behavior on unsorted inputs is unspecified.
 * Uses exactly ceil(log(m+1)) NOT gates: T(m) = 1 + T(floor(m/2)).
 */
inline circuit invert_sorted_log( int m )
{
  if ( m < 0 )
    throw std::invalid_argument( "invert_sorted_log: negative width" );
  circuit c( m );
  std::vector<int> in( m );
  for ( int i = 0; i < m; ++i )
    in[i] = c.input_gate( i + 1 );
  c.set_outputs( detail::emit_sorted_inverter( c, in ) );
  return c;
}

/* General inverter: complements arbitrary m-bit inputs with
   ceil(log(m+1)) negations. */
inline circuit fischer_inverter( int m )
{
  if ( m < 0 )
    throw std::invalid_argument( "fischer_inverter: negative width" );
  circuit c( m );
  std::vector<int> z( m );
  for ( int i = 0; i < m; ++i )
    z[i] = c.input_gate( i + 1 );
  c.set_outputs( detail::emit_fischer_inverter( c, z ) );
  return c;
}

/* Sorted-input inverter trading negations (2t per level plus a naive
   base) for constant extra depth per level. */
inline circuit invert_sorted_blocks( int m, int t, int levels )
{
  if ( m < 0 || t < 1 || levels < 1 )
    throw std::invalid_argument( "invert_sorted_blocks: bad parameters" );
  circuit c( m );
  std::vector<int> s( m );
  for ( int i = 0; i < m; ++i )
    s[i] = c.input_gate( i + 1 );
  c.set_outputs( detail::emit_block_inverter( c, s, t, levels ) );
  return c;
}

inline negation_budget_report report_log_inverter( circuit const& c, int m )
{
  negation_budget_report r;
  r.negations_used = c.negation_count();
  r.bound = ceil_log2( m + 1 );
  r.bound_formula = "ceil(log2(m+1)), m=" + std::to_string( m );
  return r;
}

/* Negation budget of the block construction: 2t per block level plus
   the naive base on the final special block. */
inline int block_inverter_bound( int m, int t, int levels )
{
  int len = m, total = 0, lvl = 0;
  while ( lvl < levels && len > 1 && t > 1 )
  {
    total += 2 * t;
    len = ( len + t - 1 ) / t;
    ++lvl;
  }
  return total + len;
}

inline negation_budget_report report_block_inverter( circuit const& c, int m, int t,
                                                     int levels )
{
  negation_budget_report r;
  r.negations_used = c.negation_count();
  r.bound = block_inverter_bound( m, t, levels );
  r.bound_formula = "sum(2t per level) + naive base; m=" + std::to_string( m ) +
                    " t=" + std::to_string( t ) + " levels=" + std::to_string( levels );
  return r;
}

} // namespace monodec
