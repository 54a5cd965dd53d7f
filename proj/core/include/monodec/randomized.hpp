#pragma once

#include "circuit_to_tree.hpp"
#include "dyadic.hpp"
#include "inverters.hpp"
#include "synthesis.hpp"

namespace monodec
{

/*
 * Randomized monotone decision tree: binary tree whose internal nodes
 * are monotone queries, fair coins, or (in the w-query-set variant)
 * multisets of w queries sampled uniformly. Acceptance probability on x
 * is the sum over 1-leaves of 2^(-r_i) c_i(x), with r_i the coins on
 * the leaf's root path and c_i its characteristic function.
 */
struct rmdt_node;
using rmdt_ptr = std::shared_ptr<const rmdt_node>;

struct rmdt_node
{
  enum class kind
  {
    leaf,
    qnode,
    coin,
    qset
  };

  kind k;
  bool label = false;     /* leaf */
  query q;                /* qnode */
  std::vector<query> qs;  /* qset */
  rmdt_ptr c0, c1;
};

struct rmdt
{
  int n = 0;
  rmdt_ptr root;
};

inline rmdt_ptr make_rmdt_leaf( bool label )
{
  auto p = std::make_shared<rmdt_node>();
  p->k = rmdt_node::kind::leaf;
  p->label = label;
  return p;
}

inline rmdt_ptr make_rmdt_query( query q, rmdt_ptr c0, rmdt_ptr c1 )
{
  auto p = std::make_shared<rmdt_node>();
  p->k = rmdt_node::kind::qnode;
  p->q = std::move( q );
  p->c0 = std::move( c0 );
  p->c1 = std::move( c1 );
  return p;
}

inline rmdt_ptr make_rmdt_coin( rmdt_ptr c0, rmdt_ptr c1 )
{
  auto p = std::make_shared<rmdt_node>();
  p->k = rmdt_node::kind::coin;
  p->c0 = std::move( c0 );
  p->c1 = std::move( c1 );
  return p;
}

inline rmdt_ptr make_rmdt_qset( std::vector<query> qs, rmdt_ptr c0, rmdt_ptr c1 )
{
  if ( qs.empty() )
    throw std::invalid_argument( "rmdt: empty query set" );
  auto p = std::make_shared<rmdt_node>();
  p->k = rmdt_node::kind::qset;
  p->qs = std::move( qs );
  p->c0 = std::move( c0 );
  p->c1 = std::move( c1 );
  return p;
}

inline int rmdt_height( rmdt_ptr const& node )
{
  if ( node->k == rmdt_node::kind::leaf )
    return 0;
  return 1 + std::max( rmdt_height( node->c0 ), rmdt_height( node->c1 ) );
}

inline int rmdt_height( rmdt const& t ) { return rmdt_height( t.root ); }

namespace detail
{

inline dyadic rmdt_prob_rec( rmdt_ptr const& node, uint64_t x, int r )
{
  switch ( node->k )
  {
  case rmdt_node::kind::leaf:
    return node->label ? dyadic( 1, r ) : dyadic::zero();
  case rmdt_node::kind::qnode:
    return rmdt_prob_rec( node->q.eval( x ) ? node->c1 : node->c0, x, r );
  case rmdt_node::kind::coin:
  {
    return rmdt_prob_rec( node->c0, x, r + 1 ) + rmdt_prob_rec( node->c1, x, r + 1 );
  }
  case rmdt_node::kind::qset:
  {
    int w = static_cast<int>( node->qs.size() );
    int k = ceil_log2( w );
    if ( ( 1 << k ) != w )
      throw std::invalid_argument( "rmdt: query-set size is not a power of two" );
    int ones = 0;
    for ( auto const& q : node->qs )
      ones += q.eval( x ) ? 1 : 0;
    auto p0 = rmdt_prob_rec( node->c0, x, r + k );
    auto p1 = rmdt_prob_rec( node->c1, x, r + k );
    return dyadic( p0.num * ( w - ones ), p0.log_den ) +
           dyadic( p1.num * ones, p1.log_den );
  }
  }
  return dyadic::zero();
}

inline void rmdt_collect_coins( rmdt_ptr const& node, std::vector<rmdt_node const*>& coins )
{
  if ( node->k == rmdt_node::kind::leaf )
    return;
  if ( node->k == rmdt_node::kind::qset )
    throw std::invalid_argument( "rmdt: coin-string oracle needs a plain tree" );
  if ( node->k == rmdt_node::kind::coin )
    coins.push_back( node.get() );
  rmdt_collect_coins( node->c0, coins );
  rmdt_collect_coins( node->c1, coins );
}

} // namespace detail

/* Closed-form acceptance probability per the leaf-sum characterization. */
inline dyadic rmdt_accept_prob( rmdt const& t, uint64_t x )
{
  return detail::rmdt_prob_rec( t.root, x, 0 );
}

/* Independent oracle: enumerate every assignment of every coin node,
   evaluate deterministically, and average. */
inline dyadic rmdt_accept_prob_oracle( rmdt const& t, uint64_t x )
{
  std::vector<rmdt_node const*> coins;
  detail::rmdt_collect_coins( t.root, coins );
  int nc = static_cast<int>( coins.size() );
  if ( nc > 30 )
    throw std::invalid_argument( "rmdt: too many coins for enumeration" );
  int64_t accepted = 0;
  for ( uint64_t s = 0; s < ( uint64_t( 1 ) << nc ); ++s )
  {
    auto node = t.root;
    while ( node->k != rmdt_node::kind::leaf )
    {
      if ( node->k == rmdt_node::kind::qnode )
        node = node->q.eval( x ) ? node->c1 : node->c0;
      else
      {
        auto it = std::find( coins.begin(), coins.end(), node.get() );
        bool bit = ( s >> ( it - coins.begin() ) ) & 1u;
        node = bit ? node->c1 : node->c0;
      }
    }
    accepted += node->label ? 1 : 0;
  }
  return dyadic( accepted, nc );
}

enum class rmdt_threshold
{
  half,       /* f(x)=1 iff accept probability >= 1/2 */
  two_thirds  /* probability of the f(x)-labeled outcome >= 2/3 */
};

inline bool rmdt_computes( rmdt const& t, truth_table const& f, rmdt_threshold theta )
{
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
  {
    auto p = rmdt_accept_prob( t, x );
    if ( theta == rmdt_threshold::half )
    {
      if ( f.get_bit( x ) != ( p.cmp( 1, 2 ) >= 0 ) )
        return false;
    }
    else
    {
      if ( f.get_bit( x ) ? p.cmp( 2, 3 ) < 0 : p.cmp( 1, 3 ) > 0 )
        return false;
    }
  }
  return true;
}

/* The total function defined by the tree under the 1/2 threshold. */
inline truth_table rmdt_function_half( rmdt const& t )
{
  truth_table f( t.n );
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
    f.set_bit( x, rmdt_accept_prob( t, x ).cmp( 1, 2 ) >= 0 );
  return f;
}

namespace detail
{

inline int rmdt_max_coins( rmdt_ptr const& node )
{
  if ( node->k == rmdt_node::kind::leaf )
    return 0;
  int self = node->k == rmdt_node::kind::coin ? 1 : 0;
  return self + std::max( rmdt_max_coins( node->c0 ), rmdt_max_coins( node->c1 ) );
}

/* step 1: every root-leaf path gets exactly r coins (dummy coins with
   identical children keep probabilities intact) */
inline rmdt_ptr rmdt_equalize_coins( rmdt_ptr const& node, int seen, int r )
{
  if ( node->k == rmdt_node::kind::leaf )
  {
    rmdt_ptr cur = node;
    for ( int i = seen; i < r; ++i )
      cur = make_rmdt_coin( cur, cur );
    return cur;
  }
  int next = seen + ( node->k == rmdt_node::kind::coin ? 1 : 0 );
  auto p = std::make_shared<rmdt_node>( *node );
  p->c0 = rmdt_equalize_coins( node->c0, next, r );
  p->c1 = rmdt_equalize_coins( node->c1, next, r );
  return p;
}

/* step 2: pad every leaf to depth h with constant-1 query nodes */
inline rmdt_ptr rmdt_complete( rmdt_ptr const& node, int depth, int h, int n )
{
  if ( node->k == rmdt_node::kind::leaf )
  {
    rmdt_ptr cur = node;
    for ( int i = depth; i < h; ++i )
      cur = make_rmdt_query( query::from_table( make_const( n, true ) ), cur, cur );
    return cur;
  }
  auto p = std::make_shared<rmdt_node>( *node );
  p->c0 = rmdt_complete( node->c0, depth + 1, h, n );
  p->c1 = rmdt_complete( node->c1, depth + 1, h, n );
  return p;
}

/* deterministic residue T_s: the j-th coin on any path answers s_j */
inline rmdt_ptr rmdt_fix_coins( rmdt_ptr const& node, uint64_t s, int pos )
{
  if ( node->k == rmdt_node::kind::leaf )
    return node;
  if ( node->k == rmdt_node::kind::coin )
    return rmdt_fix_coins( ( s >> pos ) & 1u ? node->c1 : node->c0, s, pos + 1 );
  auto p = std::make_shared<rmdt_node>( *node );
  p->c0 = rmdt_fix_coins( node->c0, s, pos );
  p->c1 = rmdt_fix_coins( node->c1, s, pos );
  return p;
}

inline rmdt_ptr rmdt_coin_top( std::vector<rmdt_ptr> const& subtrees, uint64_t base,
                               int level, int r )
{
  if ( level == r )
    return subtrees[base];
  return make_rmdt_coin( rmdt_coin_top( subtrees, base, level + 1, r ),
                         rmdt_coin_top( subtrees, base | ( uint64_t( 1 ) << level ),
                                        level + 1, r ) );
}

inline bool rmdt_has_qset( rmdt_ptr const& node )
{
  if ( node->k == rmdt_node::kind::leaf )
    return false;
  return node->k == rmdt_node::kind::qset || rmdt_has_qset( node->c0 ) ||
         rmdt_has_qset( node->c1 );
}

} // namespace detail

/*
 * Normal form: equalize the coin count over all root-leaf paths,
 * complete the tree to uniform leaf depth, then lift all coins to the
 * top by building the family of deterministic residues T_s. Acceptance
 * probability is preserved exactly on every input; the result is r coin
 * levels above 2^r deterministic subtrees.
 */
inline rmdt rmdt_normalize( rmdt const& t )
{
  if ( detail::rmdt_has_qset( t.root ) )
    throw std::invalid_argument( "rmdt_normalize: convert query sets first" );
  int r = detail::rmdt_max_coins( t.root );
  auto eq = detail::rmdt_equalize_coins( t.root, 0, r );
  auto full = detail::rmdt_complete( eq, 0, rmdt_height( eq ), t.n );
  std::vector<rmdt_ptr> subtrees( uint64_t( 1 ) << r );
  for ( uint64_t s = 0; s < subtrees.size(); ++s )
    subtrees[s] = detail::rmdt_fix_coins( full, s, 0 );
  return { t.n, detail::rmdt_coin_top( subtrees, 0, 0, r ) };
}

namespace detail
{

inline mdt_node_ptr rmdt_to_mdt_rec( rmdt_ptr const& node )
{
  if ( node->k == rmdt_node::kind::leaf )
    return make_mdt_leaf( node->label );
  if ( node->k != rmdt_node::kind::qnode )
    throw std::invalid_argument( "rmdt: residue still contains random nodes" );
  return make_mdt_query( node->q, rmdt_to_mdt_rec( node->c0 ),
                         rmdt_to_mdt_rec( node->c1 ) );
}

inline void rmdt_subtrees_below_coins( rmdt_ptr const& node, std::vector<mdt_node_ptr>& out )
{
  if ( node->k == rmdt_node::kind::coin )
  {
    rmdt_subtrees_below_coins( node->c0, out );
    rmdt_subtrees_below_coins( node->c1, out );
    return;
  }
  out.push_back( rmdt_to_mdt_rec( node ) );
}

struct rmdt_leaf_info
{
  std::vector<std::pair<query, bool>> decisions; /* (query, value on path) */
  int coins = 0;
  bool label = false;
};

inline void rmdt_collect_leaves( rmdt_ptr const& node,
                                 std::vector<std::pair<query, bool>>& decisions,
                                 int coins, std::vector<rmdt_leaf_info>& out )
{
  if ( node->k == rmdt_node::kind::leaf )
  {
    out.push_back( { decisions, coins, node->label } );
    return;
  }
  if ( node->k == rmdt_node::kind::coin )
  {
    rmdt_collect_leaves( node->c0, decisions, coins + 1, out );
    rmdt_collect_leaves( node->c1, decisions, coins + 1, out );
    return;
  }
  decisions.emplace_back( node->q, false );
  rmdt_collect_leaves( node->c0, decisions, coins, out );
  decisions.back().second = true;
  rmdt_collect_leaves( node->c1, decisions, coins, out );
  decisions.pop_back();
}

inline mdt_node_ptr mdt_flip_labels( mdt_node_ptr const& node )
{
  if ( node->is_leaf )
    return make_mdt_leaf( !node->label );
  return make_mdt_query( node->q, mdt_flip_labels( node->child0 ),
                         mdt_flip_labels( node->child1 ) );
}

} // namespace detail

/*
 * Deterministic tree of height at most h computing the function the
 * RMDT defines at the 1/2 threshold. The leaf-sum characterization
 * S(x) = sum over 1-leaves of 2^(h-r_i) c_i(x) turns the threshold
 * S >= 2^(h-1) into one TH gate over weight-replicated leaf wires; the
 * complements of the failed-query disjunctions come from one shared
 * general inverter. When 1-leaves are in the majority (or tie with a
 * 0-labeled right-most leaf) the leaf-flipped tree is derandomized
 * against threshold 2^(h-1)+1 and the final labels flipped back, which
 * caps the inverter width at 2^(h-1) and hence the tree height at h.
 */
inline mdt rmdt_derandomize( rmdt const& t )
{
  if ( detail::rmdt_has_qset( t.root ) )
    throw std::invalid_argument( "rmdt_derandomize: convert query sets first" );
  int h = rmdt_height( t );
  if ( h == 0 )
    return { t.n, make_mdt_leaf( t.root->label ) };

  std::vector<detail::rmdt_leaf_info> leaves;
  std::vector<std::pair<query, bool>> decisions;
  detail::rmdt_collect_leaves( t.root, decisions, 0, leaves );

  size_t ones = 0;
  for ( auto const& lf : leaves )
    ones += lf.label ? 1 : 0;
  /* right-most leaf = all child1 branches = last one collected */
  bool rightmost = leaves.back().label;
  bool flip = 2 * ones > leaves.size() || ( 2 * ones == leaves.size() && !rightmost );
  int64_t th = ( int64_t( 1 ) << ( h - 1 ) ) + ( flip ? 1 : 0 );

  circuit c( t.n );
  std::vector<size_t> live;            /* indices of contributing leaves */
  std::vector<std::vector<int>> passed_wires;
  std::vector<int> fail_or;            /* OR of failed queries, or -1 */
  for ( size_t i = 0; i < leaves.size(); ++i )
  {
    if ( leaves[i].label == flip )
      continue;
    std::vector<int> pw, fw;
    for ( auto const& [q, v] : leaves[i].decisions )
    {
      int w = detail::emit_monotone_sop( c, q.materialize( t.n ) );
      ( v ? pw : fw ).push_back( w );
    }
    live.push_back( i );
    passed_wires.push_back( std::move( pw ) );
    fail_or.push_back( fw.empty() ? -1 : ( fw.size() == 1 ? fw[0] : c.add_or( fw ) ) );
  }

  std::vector<int> to_invert;
  for ( int w : fail_or )
    if ( w >= 0 )
      to_invert.push_back( w );
  auto inverted = detail::emit_fischer_inverter( c, to_invert );

  std::vector<int> fanins;
  size_t ii = 0;
  for ( size_t j = 0; j < live.size(); ++j )
  {
    auto wires = passed_wires[j];
    if ( fail_or[j] >= 0 )
      wires.push_back( inverted[ii++] );
    int leaf_wire = wires.empty() ? c.add_const( true )
                                  : ( wires.size() == 1 ? wires[0] : c.add_and( wires ) );
    int64_t weight = int64_t( 1 ) << ( h - leaves[live[j]].coins );
    for ( int64_t k = 0; k < weight; ++k )
      fanins.push_back( leaf_wire );
  }

  int out;
  if ( th <= 0 )
    out = c.add_const( true );
  else if ( th > static_cast<int64_t>( fanins.size() ) )
    out = c.add_const( false );
  else
    out = c.add_th( static_cast<int>( th ), fanins );
  c.set_outputs( { out } );

  auto tree = mdt_from_circuit( c );
  if ( flip )
    tree.root = detail::mdt_flip_labels( tree.root );
  return tree;
}

/*
 * Expand every w-query-set node (w = 2^k) into a complete coin tree of
 * depth k whose leaves query the respective set members; each child
 * subtree keeps its exact probability of being taken. Height is
 * multiplied by exactly 1+k.
 */
inline rmdt wrmdt_to_rmdt( rmdt const& t )
{
  struct expander
  {
    rmdt_ptr operator()( rmdt_ptr const& node ) const
    {
      if ( node->k == rmdt_node::kind::leaf )
        return node;
      if ( node->k != rmdt_node::kind::qset )
      {
        auto p = std::make_shared<rmdt_node>( *node );
        p->c0 = ( *this )( node->c0 );
        p->c1 = ( *this )( node->c1 );
        return p;
      }
      int w = static_cast<int>( node->qs.size() );
      int k = ceil_log2( w );
      if ( ( 1 << k ) != w )
        throw std::invalid_argument( "wrmdt_to_rmdt: set size is not a power of two" );
      auto c0 = ( *this )( node->c0 );
      auto c1 = ( *this )( node->c1 );
      return build( node->qs, 0, w, c0, c1 );
    }

    rmdt_ptr build( std::vector<query> const& qs, int lo, int len, rmdt_ptr const& c0,
                    rmdt_ptr const& c1 ) const
    {
      if ( len == 1 )
        return make_rmdt_query( qs[lo], c0, c1 );
      return make_rmdt_coin( build( qs, lo, len / 2, c0, c1 ),
                             build( qs, lo + len / 2, len / 2, c0, c1 ) );
    }
  };
  return { t.n, expander{}( t.root ) };
}

/* Normalize and return the deterministic subtrees under the coin
   levels; when the tree computes f at the 2/3 threshold, at least two
   thirds of them output f(x) on every x. */
inline std::vector<mdt> rmdt_to_majority_form( rmdt const& t )
{
  auto norm = rmdt_normalize( t );
  std::vector<mdt_node_ptr> roots;
  detail::rmdt_subtrees_below_coins( norm.root, roots );
  std::vector<mdt> out;
  for ( auto& r : roots )
    out.push_back( { t.n, std::move( r ) } );
  return out;
}

} // namespace monodec
