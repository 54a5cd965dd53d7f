#pragma once

#include "decision_tree.hpp"
#include "netlist.hpp"

namespace monodec
{

/* Subcircuit consisting of the input cone of one gate, with that gate
   as the single output. All n inputs are kept at the front. */
inline circuit cone_of( circuit const& c, int gate_index )
{
  auto const& gs = c.gates();
  if ( gate_index < 0 || gate_index >= static_cast<int>( gs.size() ) )
    throw std::invalid_argument( "cone_of: gate index out of range" );
  std::vector<bool> in_cone( gs.size(), false );
  in_cone[gate_index] = true;
  for ( int gi = gate_index; gi >= 0; --gi )
  {
    if ( !in_cone[gi] )
      continue;
    for ( int f : gs[gi].fanins )
      in_cone[f] = true;
  }
  circuit r( c.num_inputs() );
  std::vector<int> remap( gs.size(), -1 );
  for ( int i = 0; i < c.num_inputs(); ++i )
    remap[i] = i;
  for ( size_t gi = c.num_inputs(); gi < gs.size(); ++gi )
  {
    if ( !in_cone[gi] )
      continue;
    gate g = gs[gi];
    for ( int& f : g.fanins )
      f = remap[f];
    remap[gi] = r.add_gate( std::move( g ) );
  }
  r.set_outputs( { remap[gate_index] } );
  return r;
}

namespace detail
{

/* NOT gate whose input cone is NOT-free; the topologically first NOT
   always qualifies and is the deterministic choice. */
inline int bottom_most_not( circuit const& c )
{
  for ( size_t gi = 0; gi < c.gates().size(); ++gi )
    if ( c.gates()[gi].kind == gate_kind::not_gate )
      return static_cast<int>( gi );
  return -1;
}

inline mdt_node_ptr mdt_from_circuit_rec( circuit const& c )
{
  int g = bottom_most_not( c );
  if ( g < 0 )
  {
    /* monotone residual circuit: it is the final query */
    auto q = query::from_circuit( std::make_shared<circuit>( c ) );
    return make_mdt_query( std::move( q ), make_mdt_leaf( false ), make_mdt_leaf( true ) );
  }
  int fanin = c.gates()[g].fanins[0];
  auto q = query::from_circuit( std::make_shared<circuit>( cone_of( c, fanin ) ) );
  /* query = 0 means the NOT outputs 1, and vice versa */
  return make_mdt_query( std::move( q ),
                         mdt_from_circuit_rec( substitute_not( c, g, true ) ),
                         mdt_from_circuit_rec( substitute_not( c, g, false ) ) );
}

} // namespace detail

/*
 * Monotone decision tree of height at most negation_count(C)+1
 * computing the single output of C. Each level queries the monotone
 * cone below the bottom-most remaining NOT and branches on the two
 * constant substitutions for it.
 */
inline mdt mdt_from_circuit( circuit const& c )
{
  if ( c.outputs().size() != 1 )
    throw std::invalid_argument( "mdt_from_circuit: circuit must have a single output" );
  mdt t;
  t.n = c.num_inputs();
  t.root = detail::mdt_from_circuit_rec( c );
  return t;
}

} // namespace monodec
