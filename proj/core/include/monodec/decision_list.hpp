#pragma once

#include "decomposition.hpp"
#include "query.hpp"

namespace monodec
{

struct mdl_node
{
  query q;
  bool c;
};

/*
 * Monotone decision list (f_1,c_1)...(f_k,c_k): the output on x is the
 * constant of the first node whose query passes. The last query is the
 * constant-1 function, so evaluation is total.
 */
struct mdl
{
  int n = 0;
  std::vector<mdl_node> nodes;
};

inline bool mdl_eval( mdl const& l, uint64_t x )
{
  for ( auto const& node : l.nodes )
    if ( node.q.eval( x ) )
      return node.c;
  throw std::invalid_argument( "mdl_eval: no query passed (missing constant-1 tail)" );
}

inline truth_table mdl_table( mdl const& l )
{
  truth_table t( l.n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, mdl_eval( l, x ) );
  return t;
}

/* Merge maximal runs of equal constants into disjunctions; constants of
   the result strictly alternate. */
inline mdl mdl_normalize_alternating( mdl const& l )
{
  mdl r;
  r.n = l.n;
  size_t i = 0;
  while ( i < l.nodes.size() )
  {
    size_t j = i;
    std::vector<query> run;
    while ( j < l.nodes.size() && l.nodes[j].c == l.nodes[i].c )
      run.push_back( l.nodes[j++].q );
    r.nodes.push_back( { run.size() == 1 ? run[0] : query::disjunction( std::move( run ) ),
                         l.nodes[i].c } );
    i = j;
  }
  return r;
}

/* Replace query i by the disjunction of queries 1..i, so that once a
   query passes all later ones pass as well. */
inline mdl mdl_normalize_forward_firing( mdl const& l )
{
  mdl r;
  r.n = l.n;
  std::vector<query> prefix;
  for ( auto const& node : l.nodes )
  {
    prefix.push_back( node.q );
    r.nodes.push_back( { prefix.size() == 1 ? prefix[0] : query::disjunction( prefix ),
                         node.c } );
  }
  return r;
}

/*
 * Decision list computing the target of an ascending decomposition.
 * With m components, the first passing index on x is a_f(x)+1 and the
 * target value is (m - a_f(x)) mod 2, so node i gets the constant
 * [(m - i) even]. A (1,0) tail is appended unless the last component
 * already is constant-1. Length is always alt(f)+1.
 */
inline mdl mdl_from_decomposition( monotone_decomposition const& d )
{
  auto rep = verify_decomposition( d.target, d );
  if ( !rep.xor_equals_target || !rep.all_monotone || !rep.implication_holds )
    throw std::invalid_argument( "mdl_from_decomposition: invalid decomposition" );

  mdl l;
  l.n = d.target.num_vars();
  size_t m = d.components.size();
  for ( size_t i = 1; i <= m; ++i )
    l.nodes.push_back( { query::from_table( d.components[i - 1] ), ( m - i ) % 2 == 0 } );
  if ( d.components.empty() || !d.components.back().is_const1() )
    l.nodes.push_back( { query::from_table( make_const( l.n, true ) ), false } );
  return l;
}

} // namespace monodec
