#pragma once

#include "decomposition.hpp"
#include "query.hpp"

#include <memory>

namespace monodec
{

/*
 * Nondeterministic monotone decision trees in two flavors.
 *
 * Model 1: edges are labeled by a monotone query plus a polarity; an
 * edge is active on x when the query's value matches the polarity.
 * Model 2: internal nodes are labeled by a monotone query and edges by
 * a bit; an edge is active when the bit equals the query's value.
 * Either way, x is accepted iff some root-to-1-leaf path is all-active.
 */

struct nmdt1_node;
using nmdt1_ptr = std::shared_ptr<const nmdt1_node>;

struct nmdt1_edge
{
  query q;
  bool negated;
  nmdt1_ptr target;
};

struct nmdt1_node
{
  bool is_leaf;
  bool label = false;
  std::vector<nmdt1_edge> edges;
};

struct nmdt_m1
{
  int n = 0;
  nmdt1_ptr root;
};

struct nmdt2_node;
using nmdt2_ptr = std::shared_ptr<const nmdt2_node>;

struct nmdt2_edge
{
  bool label;
  nmdt2_ptr target;
};

struct nmdt2_node
{
  bool is_leaf;
  bool label = false;
  query q;
  std::vector<nmdt2_edge> edges;
};

struct nmdt_m2
{
  int n = 0;
  nmdt2_ptr root;
};

inline nmdt1_ptr make_nmdt1_leaf( bool label )
{
  auto p = std::make_shared<nmdt1_node>();
  p->is_leaf = true;
  p->label = label;
  return p;
}

inline nmdt1_ptr make_nmdt1_inner( std::vector<nmdt1_edge> edges )
{
  auto p = std::make_shared<nmdt1_node>();
  p->is_leaf = false;
  p->edges = std::move( edges );
  return p;
}

namespace detail
{

inline bool nmdt1_accepts( nmdt1_ptr const& node, uint64_t x )
{
  if ( node->is_leaf )
    return node->label;
  for ( auto const& e : node->edges )
    if ( e.q.eval( x ) != e.negated && nmdt1_accepts( e.target, x ) )
      return true;
  return false;
}

inline bool nmdt2_accepts( nmdt2_ptr const& node, uint64_t x )
{
  if ( node->is_leaf )
    return node->label;
  bool v = node->q.eval( x );
  for ( auto const& e : node->edges )
    if ( e.label == v && nmdt2_accepts( e.target, x ) )
      return true;
  return false;
}

} // namespace detail

inline bool nmdt_eval( nmdt_m1 const& t, uint64_t x )
{
  return detail::nmdt1_accepts( t.root, x );
}

inline bool nmdt_eval( nmdt_m2 const& t, uint64_t x )
{
  return detail::nmdt2_accepts( t.root, x );
}

inline int nmdt_height( nmdt1_ptr const& node )
{
  int h = 0;
  for ( auto const& e : node->edges )
    h = std::max( h, 1 + nmdt_height( e.target ) );
  return h;
}

inline int nmdt_height( nmdt2_ptr const& node )
{
  int h = 0;
  for ( auto const& e : node->edges )
    h = std::max( h, 1 + nmdt_height( e.target ) );
  return h;
}

inline int nmdt_branches( nmdt_m1 const& t )
{
  return static_cast<int>( t.root->edges.size() );
}

/*
 * Height-2 nondeterministic tree from the even-padded alternation
 * decomposition: f = ~f_1 f_2 | ~f_3 f_4 | ..., one root branch per
 * pair, edge (f_odd, negated) then edge (f_even, positive) to a 1-leaf.
 */
inline nmdt_m1 nmdt_build( truth_table const& f, int max_n = default_max_n )
{
  auto d = pad_even( alternation_decomposition( f, max_n ) );
  nmdt_m1 t;
  t.n = f.num_vars();
  std::vector<nmdt1_edge> branches;
  for ( size_t i = 0; i + 1 < d.components.size(); i += 2 )
  {
    auto inner = make_nmdt1_inner(
        { { query::from_table( d.components[i + 1] ), false, make_nmdt1_leaf( true ) } } );
    branches.push_back( { query::from_table( d.components[i] ), true, inner } );
  }
  t.root = make_nmdt1_inner( std::move( branches ) );
  return t;
}

namespace detail
{

inline nmdt2_ptr m1_to_m2_rec( nmdt1_ptr const& node, int n )
{
  auto p = std::make_shared<nmdt2_node>();
  if ( node->is_leaf )
  {
    p->is_leaf = true;
    p->label = node->label;
    return p;
  }
  /* the unlabeled node becomes a constant-1 node; each edge (f, pol)
     becomes an intermediate f-node with one pol-labeled edge */
  p->is_leaf = false;
  p->q = query::from_table( make_const( n, true ) );
  for ( auto const& e : node->edges )
  {
    auto mid = std::make_shared<nmdt2_node>();
    mid->is_leaf = false;
    mid->q = e.q;
    mid->edges = { { !e.negated, m1_to_m2_rec( e.target, n ) } };
    p->edges.push_back( { true, mid } );
  }
  return p;
}

inline nmdt1_ptr m2_to_m1_rec( nmdt2_ptr const& node )
{
  if ( node->is_leaf )
    return make_nmdt1_leaf( node->label );
  std::vector<nmdt1_edge> edges;
  for ( auto const& e : node->edges )
    edges.push_back( { node->q, !e.label, m2_to_m1_rec( e.target ) } );
  return make_nmdt1_inner( std::move( edges ) );
}

} // namespace detail

/* Doubles the height: every Model-1 edge becomes two Model-2 levels. */
inline nmdt_m2 m1_to_m2( nmdt_m1 const& t )
{
  return { t.n, detail::m1_to_m2_rec( t.root, t.n ) };
}

/* Height-preserving: node labels move onto the outgoing edges. */
inline nmdt_m1 m2_to_m1( nmdt_m2 const& t )
{
  return { t.n, detail::m2_to_m1_rec( t.root ) };
}

} // namespace monodec
