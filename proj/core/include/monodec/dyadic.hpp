#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monodec
{

/*
 * Exact dyadic rational num / 2^log_den, kept in lowest terms.
 * Sufficient for all tree probabilities, which are sums of powers of
 * one half; comparisons against arbitrary rationals go through
 * cross-multiplication in 128-bit arithmetic.
 */
struct dyadic
{
  int64_t num = 0;
  int log_den = 0;

  dyadic() = default;
  dyadic( int64_t n, int ld ) : num( n ), log_den( ld )
  {
    if ( ld < 0 || ld > 62 )
      throw std::invalid_argument( "dyadic: denominator exponent out of range" );
    reduce();
  }

  static dyadic zero() { return {}; }
  static dyadic one() { return { 1, 0 }; }
  static dyadic pow2( int e ) /* 2^-e */ { return { 1, e }; }

  void reduce()
  {
    while ( log_den > 0 && num % 2 == 0 )
    {
      num /= 2;
      --log_den;
    }
  }

  dyadic operator+( dyadic const& o ) const
  {
    int ld = std::max( log_den, o.log_den );
    return { ( num << ( ld - log_den ) ) + ( o.num << ( ld - o.log_den ) ), ld };
  }

  dyadic half() const { return { num, log_den + 1 }; }

  bool operator==( dyadic const& o ) const
  {
    return num == o.num && log_den == o.log_den;
  }
  bool operator!=( dyadic const& o ) const { return !( *this == o ); }

  /* comparison with p/q, q > 0 */
  int cmp( int64_t p, int64_t q ) const
  {
    __int128 lhs = static_cast<__int128>( num ) * q;
    __int128 rhs = static_cast<__int128>( p ) << log_den;
    return lhs < rhs ? -1 : ( lhs > rhs ? 1 : 0 );
  }

  bool operator<( dyadic const& o ) const
  {
    return cmp( o.num, int64_t( 1 ) << o.log_den ) < 0;
  }

  std::string str() const
  {
    return std::to_string( num ) + "/2^" + std::to_string( log_den );
  }
};

} // namespace monodec
