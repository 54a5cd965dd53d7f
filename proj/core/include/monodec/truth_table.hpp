#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodec
{

/* Default cap on arity for dense-table operations (1 MiB of bits). */
inline constexpr int default_max_n = 20;

/*
 * Dense truth table of a Boolean function f : {0,1}^n -> {0,1}.
 *
 * Bit index convention: the assignment (x_1, ..., x_n) maps to
 * idx = sum_i x_i * 2^(i-1), i.e. x_1 is the least significant bit.
 */
class truth_table
{
public:
  truth_table() : num_vars_( 0 ), words_( 1, 0u ) {}

  explicit truth_table( int num_vars )
      : num_vars_( num_vars ), words_( word_count( num_vars ), 0u )
  {
    if ( num_vars < 0 || num_vars > 30 )
      throw std::invalid_argument( "truth_table: arity out of range" );
  }

  int num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << num_vars_; }

  bool get_bit( uint64_t idx ) const
  {
    return ( words_[idx >> 6] >> ( idx & 63 ) ) & 1u;
  }

  void set_bit( uint64_t idx, bool value )
  {
    if ( value )
      words_[idx >> 6] |= uint64_t( 1 ) << ( idx & 63 );
    else
      words_[idx >> 6] &= ~( uint64_t( 1 ) << ( idx & 63 ) );
  }

  truth_table operator~() const
  {
    truth_table r( num_vars_ );
    for ( size_t w = 0; w < words_.size(); ++w )
      r.words_[w] = ~words_[w];
    r.mask_unused();
    return r;
  }

  truth_table operator^( truth_table const& other ) const
  {
    check_same_arity( other );
    truth_table r( num_vars_ );
    for ( size_t w = 0; w < words_.size(); ++w )
      r.words_[w] = words_[w] ^ other.words_[w];
    return r;
  }

  truth_table operator&( truth_table const& other ) const
  {
    check_same_arity( other );
    truth_table r( num_vars_ );
    for ( size_t w = 0; w < words_.size(); ++w )
      r.words_[w] = words_[w] & other.words_[w];
    return r;
  }

  truth_table operator|( truth_table const& other ) const
  {
    check_same_arity( other );
    truth_table r( num_vars_ );
    for ( size_t w = 0; w < words_.size(); ++w )
      r.words_[w] = words_[w] | other.words_[w];
    return r;
  }

  bool operator==( truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }
  bool operator!=( truth_table const& other ) const { return !( *this == other ); }

  bool is_const0() const
  {
    for ( auto w : words_ )
      if ( w != 0 )
        return false;
    return true;
  }

  bool is_const1() const { return ( ~*this ).is_const0(); }

  /* Implication as a pointwise relation: f(x)=1 => g(x)=1 everywhere. */
  bool implies( truth_table const& other ) const
  {
    check_same_arity( other );
    for ( size_t w = 0; w < words_.size(); ++w )
      if ( words_[w] & ~other.words_[w] )
        return false;
    return true;
  }

  /* Hex string, most significant digit covering the highest indices,
     zero-padded to ceil(2^n / 4) digits. */
  std::string to_hex() const
  {
    uint64_t digits = ( num_bits() + 3 ) / 4;
    std::string s( digits, '0' );
    for ( uint64_t d = 0; d < digits; ++d )
    {
      unsigned v = 0;
      for ( unsigned b = 0; b < 4; ++b )
      {
        uint64_t idx = 4 * d + b;
        if ( idx < num_bits() && get_bit( idx ) )
          v |= 1u << b;
      }
      s[digits - 1 - d] = "0123456789abcdef"[v];
    }
    return s;
  }

  static truth_table from_hex( int num_vars, std::string const& hex )
  {
    truth_table t( num_vars );
    uint64_t digits = ( t.num_bits() + 3 ) / 4;
    if ( hex.size() != digits )
      throw std::invalid_argument( "truth_table: hex string has wrong length" );
    for ( uint64_t d = 0; d < digits; ++d )
    {
      char c = hex[digits - 1 - d];
      unsigned v;
      if ( c >= '0' && c <= '9' )
        v = c - '0';
      else if ( c >= 'a' && c <= 'f' )
        v = c - 'a' + 10;
      else if ( c >= 'A' && c <= 'F' )
        v = c - 'A' + 10;
      else
        throw std::invalid_argument( "truth_table: invalid hex digit" );
      for ( unsigned b = 0; b < 4; ++b )
      {
        uint64_t idx = 4 * d + b;
        if ( idx < t.num_bits() )
          t.set_bit( idx, ( v >> b ) & 1u );
        else if ( ( v >> b ) & 1u )
          throw std::invalid_argument( "truth_table: hex sets bits beyond 2^n" );
      }
    }
    return t;
  }

  /* Convenience constructor from a bit string b_0 b_1 ... (index order). */
  static truth_table from_bits( int num_vars, std::string const& bits )
  {
    truth_table t( num_vars );
    if ( bits.size() != t.num_bits() )
      throw std::invalid_argument( "truth_table: bit string has wrong length" );
    for ( uint64_t i = 0; i < t.num_bits(); ++i )
      t.set_bit( i, bits[i] == '1' );
    return t;
  }

private:
  static size_t word_count( int num_vars )
  {
    return num_vars >= 6 ? ( size_t( 1 ) << ( num_vars - 6 ) ) : 1;
  }

  void check_same_arity( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
      throw std::invalid_argument( "truth_table: arity mismatch" );
  }

  void mask_unused()
  {
    if ( num_vars_ < 6 )
      words_[0] &= ( uint64_t( 1 ) << num_bits() ) - 1;
  }

  int num_vars_;
  std::vector<uint64_t> words_;
};

/* Assignment to the n inputs, identified with its table index. */
struct assignment
{
  int n;
  uint64_t idx;

  bool bit( int i ) const { return ( idx >> ( i - 1 ) ) & 1u; } /* i in [1, n] */
};

inline bool eval( truth_table const& f, assignment const& x )
{
  if ( x.n != f.num_vars() )
    throw std::invalid_argument( "eval: arity mismatch" );
  return f.get_bit( x.idx );
}

inline bool is_monotone( truth_table const& f )
{
  uint64_t size = f.num_bits();
  for ( uint64_t x = 0; x < size; ++x )
  {
    if ( !f.get_bit( x ) )
      continue;
    /* every cover of a true point must be true */
    for ( int i = 0; i < f.num_vars(); ++i )
    {
      uint64_t y = x | ( uint64_t( 1 ) << i );
      if ( y != x && !f.get_bit( y ) )
        return false;
    }
  }
  return true;
}

} // namespace monodec
