#pragma once

#include "decision_list.hpp"
#include "decomposition.hpp"
#include "inverters.hpp"

namespace monodec
{

namespace detail
{

/* Two-level monotone realization: OR over the minimal true points of t,
   each as the AND of the point's 1-variables. Requires t monotone. */
inline int emit_monotone_sop( circuit& c, truth_table const& t )
{
  std::vector<int> minterms;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    if ( !t.get_bit( x ) )
      continue;
    bool minimal = true;
    for ( int i = 0; i < t.num_vars() && minimal; ++i )
    {
      uint64_t y = x & ~( uint64_t( 1 ) << i );
      if ( y != x && t.get_bit( y ) )
        minimal = false;
    }
    if ( !minimal )
      continue;
    std::vector<int> lits;
    for ( int i = 1; i <= t.num_vars(); ++i )
      if ( ( x >> ( i - 1 ) ) & 1u )
        lits.push_back( c.input_gate( i ) );
    minterms.push_back( lits.empty() ? c.add_const( true ) : c.add_and( lits ) );
  }
  if ( minterms.empty() )
    return c.add_const( false );
  return minterms.size() == 1 ? minterms[0] : c.add_or( minterms );
}

/*
 * Complements of an implication-sorted list of component wires.
 * Constant components are complemented directly; the remaining wires
 * still form a sorted vector on every input and share one sorted-input
 * inverter, which is the only source of NOT gates.
 */
inline std::vector<int> complement_sorted_components(
    circuit& c, std::vector<int> const& wires, std::vector<int> const& const_value,
    std::vector<int> ( *invert )( circuit&, std::vector<int> const& ) )
{
  std::vector<int> live;
  std::vector<size_t> live_pos;
  for ( size_t i = 0; i < wires.size(); ++i )
  {
    if ( const_value[i] < 0 )
    {
      live.push_back( wires[i] );
      live_pos.push_back( i );
    }
  }
  auto inv = invert( c, live );
  std::vector<int> out( wires.size() );
  size_t li = 0;
  for ( size_t i = 0; i < wires.size(); ++i )
  {
    if ( const_value[i] < 0 )
      out[i] = inv[li++];
    else
      out[i] = c.add_const( const_value[i] == 0 );
  }
  return out;
}

} // namespace detail

/*
 * Negation-limited circuit for f via the even-padded alternation
 * decomposition: f = ~f_1 f_2 | ~f_3 f_4 | ... with monotone two-level
 * component realizations. The odd components are sorted by implication,
 * so one log-negation sorted inverter supplies every complement and the
 * NOT count stays within ceil(log(alt(f)+1)). Monotone targets need no
 * inverter at all (their odd components are constant).
 */
inline std::pair<circuit, negation_budget_report> markov_circuit(
    truth_table const& f, int max_n = default_max_n )
{
  int alt = alternation( f, max_n );
  auto d = pad_even( alternation_decomposition( f, max_n ) );
  circuit c( f.num_vars() );

  size_t k = d.components.size();
  std::vector<int> odd_wires( k / 2 ), odd_const( k / 2 ), even_wires( k / 2 );
  for ( size_t i = 0; i < k; ++i )
  {
    auto const& comp = d.components[i];
    int cv = comp.is_const0() ? 0 : ( comp.is_const1() ? 1 : -1 );
    int w = cv < 0 ? detail::emit_monotone_sop( c, comp ) : c.add_const( cv == 1 );
    if ( i % 2 == 0 )
    {
      odd_wires[i / 2] = w;
      odd_const[i / 2] = cv;
    }
    else
      even_wires[i / 2] = w;
  }

  auto nodd = detail::complement_sorted_components( c, odd_wires, odd_const,
                                                    &detail::emit_sorted_inverter );
  std::vector<int> pairs;
  for ( size_t i = 0; i < k / 2; ++i )
    pairs.push_back( c.add_and( { nodd[i], even_wires[i] } ) );
  c.set_outputs( { pairs.empty() ? c.add_const( false )
                                 : ( pairs.size() == 1 ? pairs[0] : c.add_or( pairs ) ) } );

  negation_budget_report r;
  r.negations_used = c.negation_count();
  r.bound = ceil_log2( alt + 1 );
  r.bound_formula = "ceil(log2(alt+1)), alt=" + std::to_string( alt );
  return { std::move( c ), r };
}

/*
 * Circuit for the function of a decision list, with the odd-query
 * complements supplied by the block-structured sorted inverter. The
 * list is brought to alternating-constants plus forward-firing form; a
 * dead constant-0 head is prepended when the first constant is 1 so the
 * constants read 0,1,0,1,... and f = ~g_1 g_2 | ~g_3 g_4 | ...
 */
inline std::pair<circuit, negation_budget_report> circuit_from_mdl( mdl const& l_in,
                                                                    int t, int levels )
{
  auto l = mdl_normalize_forward_firing( mdl_normalize_alternating( l_in ) );
  if ( l.nodes.empty() )
    throw std::invalid_argument( "circuit_from_mdl: empty list" );
  if ( l.nodes.front().c )
    l.nodes.insert( l.nodes.begin(),
                    { query::from_table( make_const( l.n, false ) ), false } );

  circuit c( l.n );
  size_t k = l.nodes.size() / 2 * 2; /* a trailing 0-constant node is inert */
  std::vector<int> odd_wires( k / 2 ), odd_const( k / 2 ), even_wires( k / 2 );
  int live = 0;
  for ( size_t i = 0; i < k; ++i )
  {
    auto g = l.nodes[i].q.materialize( l.n );
    int cv = g.is_const0() ? 0 : ( g.is_const1() ? 1 : -1 );
    int w = cv < 0 ? detail::emit_monotone_sop( c, g ) : c.add_const( cv == 1 );
    if ( i % 2 == 0 )
    {
      odd_wires[i / 2] = w;
      odd_const[i / 2] = cv;
      live += cv < 0 ? 1 : 0;
    }
    else
      even_wires[i / 2] = w;
  }

  auto invert = [t, levels]( circuit& cc, std::vector<int> const& w ) {
    return detail::emit_block_inverter( cc, w, t, levels );
  };
  std::vector<int> nodd;
  {
    std::vector<int> inv_in;
    for ( size_t i = 0; i < odd_wires.size(); ++i )
      if ( odd_const[i] < 0 )
        inv_in.push_back( odd_wires[i] );
    auto inv = invert( c, inv_in );
    size_t li = 0;
    for ( size_t i = 0; i < odd_wires.size(); ++i )
      nodd.push_back( odd_const[i] < 0 ? inv[li++] : c.add_const( odd_const[i] == 0 ) );
  }

  std::vector<int> pairs;
  for ( size_t i = 0; i < k / 2; ++i )
    pairs.push_back( c.add_and( { nodd[i], even_wires[i] } ) );
  c.set_outputs( { pairs.empty() ? c.add_const( false )
                                 : ( pairs.size() == 1 ? pairs[0] : c.add_or( pairs ) ) } );

  negation_budget_report r;
  r.negations_used = c.negation_count();
  r.bound = block_inverter_bound( live, t, levels );
  r.bound_formula = "block inverter over " + std::to_string( live ) + " sorted wires";
  return { std::move( c ), r };
}

} // namespace monodec
