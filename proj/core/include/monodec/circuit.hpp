#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace monodec
{

enum class gate_kind
{
  input,
  constant,
  and_gate,
  or_gate,
  not_gate,
  th_gate
};

struct gate
{
  gate_kind kind;
  int param = 0;            /* input index (1-based), constant value, or TH threshold */
  std::vector<int> fanins;  /* indices into the gate list; must precede this gate */
};

/*
 * Gate DAG in topological order. Inputs appear as gates of kind input;
 * a circuit over n variables always carries n input gates at the front.
 * Multi-output: outputs lists gate indices.
 */
class circuit
{
public:
  explicit circuit( int num_inputs = 0 )
  {
    for ( int i = 1; i <= num_inputs; ++i )
      gates_.push_back( { gate_kind::input, i, {} } );
    num_inputs_ = num_inputs;
  }

  int num_inputs() const { return num_inputs_; }
  std::vector<gate> const& gates() const { return gates_; }
  std::vector<int> const& outputs() const { return outputs_; }

  int add_gate( gate g )
  {
    for ( int f : g.fanins )
    {
      if ( f < 0 || f >= static_cast<int>( gates_.size() ) )
        throw std::invalid_argument( "circuit: fanin does not precede gate" );
    }
    if ( g.kind == gate_kind::not_gate && g.fanins.size() != 1 )
      throw std::invalid_argument( "circuit: NOT takes exactly one fanin" );
    if ( g.kind == gate_kind::th_gate &&
         ( g.param < 0 || g.param > static_cast<int>( g.fanins.size() ) + 1 ) )
      throw std::invalid_argument( "circuit: TH parameter out of range" );
    gates_.push_back( std::move( g ) );
    return static_cast<int>( gates_.size() ) - 1;
  }

  int add_const( bool value ) { return add_gate( { gate_kind::constant, value ? 1 : 0, {} } ); }
  int add_and( std::vector<int> fanins ) { return add_gate( { gate_kind::and_gate, 0, std::move( fanins ) } ); }
  int add_or( std::vector<int> fanins ) { return add_gate( { gate_kind::or_gate, 0, std::move( fanins ) } ); }
  int add_not( int fanin ) { return add_gate( { gate_kind::not_gate, 0, { fanin } } ); }
  int add_th( int k, std::vector<int> fanins ) { return add_gate( { gate_kind::th_gate, k, std::move( fanins ) } ); }

  int input_gate( int i ) const /* i in [1, num_inputs] */
  {
    if ( i < 1 || i > num_inputs_ )
      throw std::invalid_argument( "circuit: input index out of range" );
    return i - 1;
  }

  void set_outputs( std::vector<int> outs )
  {
    for ( int o : outs )
      if ( o < 0 || o >= static_cast<int>( gates_.size() ) )
        throw std::invalid_argument( "circuit: output id out of range" );
    outputs_ = std::move( outs );
  }

  std::vector<bool> eval( uint64_t input_bits ) const
  {
    std::vector<bool> in( num_inputs_ );
    for ( int i = 0; i < num_inputs_ && i < 64; ++i )
      in[i] = ( input_bits >> i ) & 1u;
    return eval( in );
  }

  std::vector<bool> eval( std::vector<bool> const& inputs ) const
  {
    if ( static_cast<int>( inputs.size() ) != num_inputs_ )
      throw std::invalid_argument( "circuit: wrong input vector size" );
    std::vector<bool> value( gates_.size() );
    for ( size_t gi = 0; gi < gates_.size(); ++gi )
    {
      auto const& g = gates_[gi];
      switch ( g.kind )
      {
      case gate_kind::input:
        value[gi] = inputs[g.param - 1];
        break;
      case gate_kind::constant:
        value[gi] = g.param != 0;
        break;
      case gate_kind::and_gate:
      {
        bool v = true;
        for ( int f : g.fanins )
          v = v && value[f];
        value[gi] = v;
        break;
      }
      case gate_kind::or_gate:
      {
        bool v = false;
        for ( int f : g.fanins )
          v = v || value[f];
        value[gi] = v;
        break;
      }
      case gate_kind::not_gate:
        value[gi] = !value[g.fanins[0]];
        break;
      case gate_kind::th_gate:
      {
        int sum = 0;
        for ( int f : g.fanins )
          sum += value[f] ? 1 : 0;
        value[gi] = sum >= g.param;
        break;
      }
      }
    }
    std::vector<bool> out( outputs_.size() );
    for ( size_t i = 0; i < outputs_.size(); ++i )
      out[i] = value[outputs_[i]];
    return out;
  }

  int negation_count() const
  {
    int c = 0;
    for ( auto const& g : gates_ )
      if ( g.kind == gate_kind::not_gate )
        ++c;
    return c;
  }

  bool is_syntactically_monotone() const { return negation_count() == 0; }

  /* longest gate path (inputs and constants contribute depth 0) */
  int depth() const
  {
    std::vector<int> d( gates_.size(), 0 );
    int best = 0;
    for ( size_t gi = 0; gi < gates_.size(); ++gi )
    {
      auto const& g = gates_[gi];
      if ( g.kind == gate_kind::input || g.kind == gate_kind::constant )
        continue;
      int m = 0;
      for ( int f : g.fanins )
        m = std::max( m, d[f] );
      d[gi] = m + 1;
      best = std::max( best, d[gi] );
    }
    return best;
  }

private:
  int num_inputs_ = 0;
  std::vector<gate> gates_;
  std::vector<int> outputs_;
};

inline truth_table truth_table_of( circuit const& c, size_t output_index = 0,
                                   int max_n = default_max_n )
{
  if ( c.num_inputs() > max_n )
    throw std::invalid_argument( "truth_table_of: arity above max_n" );
  if ( output_index >= c.outputs().size() )
    throw std::invalid_argument( "truth_table_of: output index out of range" );
  truth_table t( c.num_inputs() );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, c.eval( x )[output_index] );
  return t;
}

/*
 * Replaces the given NOT gate by the constant b and propagates
 * constants forward with local simplification (AND/OR absorption and
 * TH parameter adjustment). Gate count and indices are preserved;
 * simplified gates become constants or single-fanin ORs.
 */
inline circuit substitute_not( circuit const& c, int not_gate_index, bool b )
{
  if ( not_gate_index < 0 || not_gate_index >= static_cast<int>( c.gates().size() ) ||
       c.gates()[not_gate_index].kind != gate_kind::not_gate )
    throw std::invalid_argument( "substitute_not: gate is not a NOT" );

  circuit r( c.num_inputs() );
  auto gates = c.gates();
  gates[not_gate_index] = { gate_kind::constant, b ? 1 : 0, {} };

  /* constant-ness per gate, for forward propagation */
  std::vector<int> cst( gates.size(), -1 ); /* -1 unknown, 0/1 constant */
  for ( size_t gi = 0; gi < gates.size(); ++gi )
  {
    auto g = gates[gi];
    if ( g.kind == gate_kind::constant )
    {
      cst[gi] = g.param;
    }
    else if ( g.kind == gate_kind::not_gate && cst[g.fanins[0]] >= 0 )
    {
      g = { gate_kind::constant, 1 - cst[g.fanins[0]], {} };
      cst[gi] = g.param;
    }
    else if ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate )
    {
      bool const absorbing = ( g.kind == gate_kind::and_gate ) ? false : true;
      std::vector<int> kept;
      bool absorbed = false;
      for ( int f : g.fanins )
      {
        if ( cst[f] < 0 )
          kept.push_back( f );
        else if ( ( cst[f] != 0 ) == absorbing )
          absorbed = true;
      }
      if ( absorbed )
      {
        g = { gate_kind::constant, absorbing ? 1 : 0, {} };
        cst[gi] = g.param;
      }
      else if ( kept.empty() )
      {
        /* empty AND is 1, empty OR is 0 */
        g = { gate_kind::constant, g.kind == gate_kind::and_gate ? 1 : 0, {} };
        cst[gi] = g.param;
      }
      else
      {
        g.fanins = std::move( kept );
      }
    }
    else if ( g.kind == gate_kind::th_gate )
    {
      std::vector<int> kept;
      int k = g.param;
      for ( int f : g.fanins )
      {
        if ( cst[f] < 0 )
          kept.push_back( f );
        else if ( cst[f] == 1 )
          --k;
      }
      if ( k <= 0 )
      {
        g = { gate_kind::constant, 1, {} };
        cst[gi] = 1;
      }
      else if ( k > static_cast<int>( kept.size() ) )
      {
        g = { gate_kind::constant, 0, {} };
        cst[gi] = 0;
      }
      else
      {
        g.param = k;
        g.fanins = std::move( kept );
      }
    }
    if ( gi >= static_cast<size_t>( c.num_inputs() ) )
      r.add_gate( g );
  }
  r.set_outputs( c.outputs() );
  return r;
}

} // namespace monodec
