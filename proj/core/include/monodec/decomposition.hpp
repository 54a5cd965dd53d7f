#pragma once

#include "alternation.hpp"
#include "families.hpp"
#include "truth_table.hpp"

namespace monodec
{

/*
 * Ordered monotone components f_1, ..., f_m with ascending implication
 * (f_i => f_{i+1}) whose XOR equals the target on every assignment.
 */
struct monotone_decomposition
{
  std::vector<truth_table> components;
  truth_table target;
};

struct decomposition_report
{
  bool xor_equals_target = false;
  bool all_monotone = false;
  bool implication_holds = false;
  size_t length = 0;
  bool is_optimal_length = false;

  bool all_ok() const
  {
    return xor_equals_target && all_monotone && implication_holds && is_optimal_length;
  }
};

/*
 * Canonical alternation decomposition: g_i(x) = [a_f(x) < i] for
 * i = 1..alt(f). When f(0^n) = 1 the constant-1 function is appended
 * so that the XOR of the components equals f unconditionally.
 */
inline monotone_decomposition alternation_decomposition( truth_table const& f,
                                                         int max_n = default_max_n )
{
  auto profile = alt_profile( f, max_n );
  int k = profile.a[0];
  monotone_decomposition d;
  d.target = f;
  for ( int i = 1; i <= k; ++i )
  {
    truth_table g( f.num_vars() );
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
      g.set_bit( x, profile.a[x] < i );
    d.components.push_back( g );
  }
  if ( f.get_bit( 0 ) )
    d.components.push_back( make_const( f.num_vars(), true ) );
  return d;
}

inline decomposition_report verify_decomposition( truth_table const& f,
                                                  monotone_decomposition const& d,
                                                  int max_n = default_max_n )
{
  decomposition_report r;
  r.length = d.components.size();

  truth_table acc( f.num_vars() );
  r.all_monotone = true;
  r.implication_holds = true;
  for ( size_t i = 0; i < d.components.size(); ++i )
  {
    auto const& c = d.components[i];
    if ( c.num_vars() != f.num_vars() )
      throw std::invalid_argument( "verify_decomposition: arity mismatch" );
    if ( !is_monotone( c ) )
      r.all_monotone = false;
    if ( i + 1 < d.components.size() && !c.implies( d.components[i + 1] ) )
      r.implication_holds = false;
    acc = acc ^ c;
  }
  r.xor_equals_target = ( acc == f );

  size_t expected = size_t( alternation( f, max_n ) ) + ( f.get_bit( 0 ) ? 1 : 0 );
  r.is_optimal_length = ( r.length == expected );
  return r;
}

/*
 * Threshold-interleaved decomposition with 2n+1 components:
 * in descending order f_{2k} = Th_k and f_{2k+1} = Th_{k+1} | (Th_k & f).
 * Stored reversed so the ascending implication convention holds.
 */
inline monotone_decomposition threshold_interleaved_decomposition(
    truth_table const& f, int max_n = default_max_n )
{
  if ( f.num_vars() > max_n )
    throw std::invalid_argument( "threshold_interleaved_decomposition: arity above max_n" );
  int n = f.num_vars();
  monotone_decomposition d;
  d.target = f;
  d.components.resize( 2 * n + 1, truth_table( n ) );
  for ( int i = 1; i <= 2 * n + 1; ++i )
  {
    truth_table c( n );
    if ( i % 2 == 0 )
    {
      c = make_threshold( n, i / 2 );
    }
    else
    {
      int k = ( i - 1 ) / 2;
      c = make_threshold( n, k + 1 ) | ( make_threshold( n, k ) & f );
    }
    d.components[2 * n + 1 - i] = c; /* reverse into ascending order */
  }
  return d;
}

/*
 * Decomposition for functions with uniform alternation along all
 * maximal chains. For each x, walk the canonical chain obtained by
 * repeatedly clearing the lowest-index set variable, count the flips
 * of f along it, and threshold the count. Equals the alternation
 * decomposition componentwise (the decomposition is unique here).
 */
inline monotone_decomposition uniform_chain_decomposition( truth_table const& f,
                                                           int max_n = default_max_n )
{
  if ( !is_uniform_alternation( f, max_n ) )
    throw std::invalid_argument( "uniform_chain_decomposition: function lacks uniform alternation" );
  int n = f.num_vars();
  int k = alternation( f, max_n );
  monotone_decomposition d;
  d.target = f;
  d.components.resize( k, truth_table( n ) );
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
  {
    /* flips of f along x > y1 > ... (clear leftmost 1 each step) */
    int flips = 0;
    uint64_t y = x;
    bool prev = f.get_bit( x );
    while ( y != 0 )
    {
      y &= y - 1; /* lowest set bit is the leftmost variable x_1 side */
      bool cur = f.get_bit( y );
      if ( cur != prev )
        ++flips;
      prev = cur;
    }
    for ( int i = 1; i <= k; ++i )
      d.components[i - 1].set_bit( x, flips >= k - i + 1 );
  }
  if ( f.get_bit( 0 ) )
    d.components.push_back( make_const( n, true ) );
  return d;
}

/* Pad to an even number of components; constant-0 prepended keeps the
   ascending implication order intact. */
inline monotone_decomposition pad_even( monotone_decomposition d )
{
  if ( d.components.size() % 2 != 0 )
    d.components.insert( d.components.begin(),
                         make_const( d.target.num_vars(), false ) );
  return d;
}

/*
 * Checks the four equivalent evaluations of a boundary decomposition
 * (even length; odd inputs are const-0 padded): XOR form, decision-list
 * form, DNF-of-pairs, and CNF-of-pairs.
 */
inline bool four_forms_check( monotone_decomposition const& d_in )
{
  auto d = pad_even( d_in );
  auto const& fs = d.components;
  size_t k = fs.size();
  if ( k == 0 )
    return true; /* every form is identically 0 */
  for ( size_t i = 0; i + 1 < k; ++i )
  {
    if ( !fs[i].implies( fs[i + 1] ) )
      throw std::invalid_argument( "four_forms_check: implication violated" );
  }
  int n = d.target.num_vars();
  uint64_t size = uint64_t( 1 ) << n;
  for ( uint64_t x = 0; x < size; ++x )
  {
    bool xor_form = false;
    for ( auto const& f : fs )
      xor_form ^= f.get_bit( x );

    /* decision list (f_1,0)(f_2,1)...(f_k,1)(1,0): first passing query wins */
    bool dl_form = false;
    for ( size_t i = 0; i < k; ++i )
    {
      if ( fs[i].get_bit( x ) )
      {
        dl_form = ( ( i + 1 ) % 2 == 0 ); /* constants alternate 0,1,...,1 */
        break;
      }
    }

    /* DNF of pairs: ~f_1 f_2 | ~f_3 f_4 | ... */
    bool dnf_form = false;
    for ( size_t i = 0; i + 1 < k; i += 2 )
      dnf_form |= !fs[i].get_bit( x ) && fs[i + 1].get_bit( x );

    /* CNF of pairs: (0 | ~f_1) & (f_2 | ~f_3) & ... & (f_k | ~1) */
    bool cnf_form = !fs[0].get_bit( x );
    for ( size_t i = 1; i + 1 < k; i += 2 )
      cnf_form &= fs[i].get_bit( x ) || !fs[i + 1].get_bit( x );
    cnf_form &= fs[k - 1].get_bit( x );

    if ( xor_form != dl_form || xor_form != dnf_form || xor_form != cnf_form )
      return false;
  }
  return true;
}

} // namespace monodec
