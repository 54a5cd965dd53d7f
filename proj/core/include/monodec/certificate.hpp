#pragma once

#include "nonadaptive.hpp"

#include <optional>

namespace monodec
{

/*
 * Monotone certificate: a set of monotone functions whose joint values
 * pin down f. Anchored certificates fix one input x; global
 * certificates must separate every pair of inputs with different
 * f-values.
 */
struct certificate_set
{
  int n = 0;
  std::vector<truth_table> functions;
  std::optional<uint64_t> anchor;
};

/*
 * Two-function certificate for x: the AND of the variables set to 1 in
 * x and the OR of the variables set to 0. The only input agreeing with
 * x on both is x itself. Empty AND is constant-1, empty OR constant-0.
 */
inline certificate_set adaptive_certificate( truth_table const& f, uint64_t x )
{
  int n = f.num_vars();
  uint64_t mask = ( n == 0 ) ? 0 : ( ( uint64_t( 1 ) << n ) - 1 );
  certificate_set s;
  s.n = n;
  s.anchor = x;

  truth_table i_x( n ); /* AND of 1-variables of x */
  truth_table j_x( n ); /* OR of 0-variables of x */
  for ( uint64_t y = 0; y < i_x.num_bits(); ++y )
  {
    i_x.set_bit( y, ( y & x ) == x );
    j_x.set_bit( y, ( y & ~x & mask ) != 0 );
  }
  s.functions = { i_x, j_x };
  return s;
}

/* Query set of the non-adaptive tree; size alt(f), globally valid. */
inline certificate_set nonadaptive_certificate( truth_table const& f,
                                                int max_n = default_max_n )
{
  certificate_set s;
  s.n = f.num_vars();
  s.functions = namdt_build( f, max_n ).queries;
  return s;
}

inline bool verify_certificate( truth_table const& f, certificate_set const& s )
{
  auto agree = [&]( uint64_t x, uint64_t y ) {
    for ( auto const& g : s.functions )
      if ( g.get_bit( x ) != g.get_bit( y ) )
        return false;
    return true;
  };
  if ( s.anchor )
  {
    uint64_t x = *s.anchor;
    for ( uint64_t y = 0; y < f.num_bits(); ++y )
      if ( agree( x, y ) && f.get_bit( x ) != f.get_bit( y ) )
        return false;
    return true;
  }
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
    for ( uint64_t y = x + 1; y < f.num_bits(); ++y )
      if ( agree( x, y ) && f.get_bit( x ) != f.get_bit( y ) )
        return false;
  return true;
}

} // namespace monodec
