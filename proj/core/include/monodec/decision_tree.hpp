#pragma once

#include "decision_list.hpp"

#include <memory>

namespace monodec
{

struct mdt_node;
using mdt_node_ptr = std::shared_ptr<const mdt_node>;

struct mdt_node
{
  bool is_leaf;
  bool label = false;   /* leaf only */
  query q;              /* internal only */
  mdt_node_ptr child0, child1;
};

struct mdt
{
  int n = 0;
  mdt_node_ptr root;
};

inline mdt_node_ptr make_mdt_leaf( bool label )
{
  auto p = std::make_shared<mdt_node>();
  p->is_leaf = true;
  p->label = label;
  return p;
}

inline mdt_node_ptr make_mdt_query( query q, mdt_node_ptr c0, mdt_node_ptr c1 )
{
  auto p = std::make_shared<mdt_node>();
  p->is_leaf = false;
  p->q = std::move( q );
  p->child0 = std::move( c0 );
  p->child1 = std::move( c1 );
  return p;
}

inline bool mdt_eval( mdt const& t, uint64_t x )
{
  auto node = t.root;
  while ( !node->is_leaf )
    node = node->q.eval( x ) ? node->child1 : node->child0;
  return node->label;
}

inline int mdt_height( mdt_node_ptr const& node )
{
  if ( node->is_leaf )
    return 0;
  return 1 + std::max( mdt_height( node->child0 ), mdt_height( node->child1 ) );
}

inline int mdt_height( mdt const& t ) { return mdt_height( t.root ); }

inline truth_table mdt_table( mdt const& t )
{
  truth_table tab( t.n );
  for ( uint64_t x = 0; x < tab.num_bits(); ++x )
    tab.set_bit( x, mdt_eval( t, x ) );
  return tab;
}

namespace detail
{

/* Binary search over list nodes [lo, hi] (1-based). In forward-firing
   form, query g_mid answers whether the first passing index is <= mid. */
inline mdt_node_ptr mdt_from_mdl_range( mdl const& l, size_t lo, size_t hi )
{
  if ( lo == hi )
    return make_mdt_leaf( l.nodes[lo - 1].c );
  size_t mid = ( lo + hi ) / 2;
  return make_mdt_query( l.nodes[mid - 1].q,
                         mdt_from_mdl_range( l, mid + 1, hi ),
                         mdt_from_mdl_range( l, lo, mid ) );
}

} // namespace detail

/* Height-ceil(log k) tree evaluating a k-node decision list by binary
   search over the index of the first passing query. */
inline mdt mdt_from_mdl( mdl const& l_in )
{
  if ( l_in.nodes.empty() )
    throw std::invalid_argument( "mdt_from_mdl: empty list" );
  auto l = mdl_normalize_forward_firing( l_in );
  mdt t;
  t.n = l.n;
  t.root = detail::mdt_from_mdl_range( l, 1, l.nodes.size() );
  return t;
}

namespace detail
{

inline void mdl_from_mdt_rec( mdt_node_ptr const& node, std::vector<query>& passed,
                              std::vector<mdl_node>& out )
{
  if ( node->is_leaf )
  {
    query q = passed.empty()
                  ? query::conjunction( {} )
                  : ( passed.size() == 1 ? passed[0] : query::conjunction( passed ) );
    out.push_back( { std::move( q ), node->label } );
    return;
  }
  passed.push_back( node->q );
  mdl_from_mdt_rec( node->child1, passed, out ); /* right-to-left: 1-edges first */
  passed.pop_back();
  mdl_from_mdt_rec( node->child0, passed, out );
}

} // namespace detail

/*
 * List with one node per leaf, leaves taken right to left (descending
 * lexicographic path order, 1 = query passed); node i's query is the
 * conjunction of the queries passed on the path to leaf i. The all-0
 * path contributes the empty conjunction, i.e. the constant-1 tail.
 */
inline mdl mdl_from_mdt( mdt const& t )
{
  mdl l;
  l.n = t.n;
  std::vector<query> passed;
  detail::mdl_from_mdt_rec( t.root, passed, l.nodes );
  return l;
}

/* Height-optimal tree for f: decompose, list it, binary-search it.
   Height is exactly ceil(log(alt(f)+1)). */
inline mdt mdt_build( truth_table const& f, int max_n = default_max_n )
{
  return mdt_from_mdl( mdl_from_decomposition( alternation_decomposition( f, max_n ) ) );
}

} // namespace monodec
