#pragma once

#include "certificate.hpp"
#include "circuit_to_tree.hpp"
#include "decision_tree.hpp"
#include "nonadaptive.hpp"
#include "nondet.hpp"
#include "random_gen.hpp"
#include "randomized.hpp"
#include "synthesis.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace monodec
{

struct selftest_options
{
  bool full = true;       /* full: n=4 sweeps, m<=256 inverters; quick: n<=3 */
  unsigned seed = 0xC0FFEEu;
  int jobs = 1;
};

struct criterion_result
{
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail
{

inline truth_table table_from_index( int n, uint64_t v )
{
  truth_table t( n );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
    t.set_bit( x, ( v >> x ) & 1u );
  return t;
}

/* deterministic conjunction over a sweep, optionally chunked on threads */
inline uint64_t count_failures( uint64_t count, int jobs,
                                std::function<bool( uint64_t )> const& fn )
{
  if ( jobs <= 1 )
  {
    uint64_t failures = 0;
    for ( uint64_t i = 0; i < count; ++i )
      if ( !fn( i ) )
        ++failures;
    return failures;
  }
  std::atomic<uint64_t> failures{ 0 };
  std::vector<std::thread> workers;
  uint64_t chunk = ( count + jobs - 1 ) / jobs;
  for ( int w = 0; w < jobs; ++w )
  {
    uint64_t lo = uint64_t( w ) * chunk;
    uint64_t hi = std::min( count, lo + chunk );
    workers.emplace_back( [&, lo, hi]() {
      uint64_t local = 0;
      for ( uint64_t i = lo; i < hi; ++i )
        if ( !fn( i ) )
          ++local;
      failures += local;
    } );
  }
  for ( auto& t : workers )
    t.join();
  return failures.load();
}

inline criterion_result make_result( int id, std::string name, uint64_t failures,
                                     std::string scope )
{
  criterion_result r;
  r.id = id;
  r.name = std::move( name );
  r.pass = failures == 0;
  r.detail = std::move( scope ) +
             ( failures ? ", " + std::to_string( failures ) + " failures" : "" );
  return r;
}

inline mdl random_mdl( std::mt19937& rng, int n )
{
  std::uniform_int_distribution<int> len( 1, 6 );
  std::uniform_int_distribution<int> bit( 0, 1 );
  mdl l;
  l.n = n;
  int k = len( rng );
  for ( int i = 0; i < k; ++i )
    l.nodes.push_back(
        { query::from_table( random_monotone_function( rng, n ) ), bit( rng ) != 0 } );
  l.nodes.push_back( { query::from_table( make_const( n, true ) ), bit( rng ) != 0 } );
  return l;
}

/* Eight-node list with distinct threshold queries; the binary-search
   tree over it must query q4 at the root, q2/q6 one level down, and
   q1/q3/q5/q7 above the leaves, with leaf constants c1..c8 from left
   branch to right. */
inline bool binary_search_shape_ok()
{
  int const n = 8;
  std::vector<truth_table> q;
  for ( int i = 1; i <= 8; ++i )
    q.push_back( make_threshold( n, 8 - i ) ); /* Th7 >= ... >= Th0 = const-1 */
  std::vector<bool> c = { true, false, false, true, false, true, false, false };
  mdl l;
  l.n = n;
  for ( int i = 0; i < 8; ++i )
    l.nodes.push_back( { query::from_table( q[i] ), c[i] } );
  auto t = mdt_from_mdl( l );

  std::function<bool( mdt_node_ptr const&, size_t, size_t )> check =
      [&]( mdt_node_ptr const& node, size_t lo, size_t hi ) -> bool {
    if ( lo == hi )
      return node->is_leaf && node->label == c[lo - 1];
    size_t mid = ( lo + hi ) / 2;
    if ( node->is_leaf || node->q.materialize( n ) != q[mid - 1] )
      return false;
    return check( node->child1, lo, mid ) && check( node->child0, mid + 1, hi );
  };
  return mdt_height( t ) == 3 && check( t.root, 1, 8 );
}

/* Complete height-3 tree with queries f1 (root), f2/f3, f4..f7 and
   leaves c1..c8; the extracted list must start (f1&f3&f7, c8),
   (f1&f3, c7) and end with the constant-1 query and c1. */
inline bool tree_to_list_shape_ok()
{
  int const n = 8;
  std::vector<truth_table> f;
  for ( int i = 1; i <= 7; ++i )
    f.push_back( make_threshold( n, i ) );
  std::vector<bool> c = { false, true, true, false, true, false, false, true };

  std::function<mdt_node_ptr( int, int, int )> build = [&]( int idx, int depth,
                                                            int base ) -> mdt_node_ptr {
    if ( depth == 3 )
      return make_mdt_leaf( c[base] );
    return make_mdt_query( query::from_table( f[idx - 1] ),
                           build( 2 * idx, depth + 1, base ),
                           build( 2 * idx + 1, depth + 1,
                                  base + ( 1 << ( 2 - depth ) ) ) );
  };
  mdt t{ n, build( 1, 0, 0 ) };

  auto l = mdl_from_mdt( t );
  if ( l.nodes.size() != 8 )
    return false;
  auto conj = [&]( std::vector<int> idx ) {
    truth_table r = make_const( n, true );
    for ( int i : idx )
      r = r & f[i - 1];
    return r;
  };
  return l.nodes[0].q.materialize( n ) == conj( { 1, 3, 7 } ) && l.nodes[0].c == c[7] &&
         l.nodes[1].q.materialize( n ) == conj( { 1, 3 } ) && l.nodes[1].c == c[6] &&
         l.nodes[7].q.materialize( n ) == conj( {} ) && l.nodes[7].c == c[0] &&
         mdl_table( l ) == mdt_table( t );
}

/* pure query-set tree: every internal node holds w random monotone queries */
inline rmdt_ptr random_qset_node( std::mt19937& rng, int n, int w, int depth )
{
  std::uniform_int_distribution<int> bit( 0, 1 );
  if ( depth == 0 )
    return make_rmdt_leaf( bit( rng ) != 0 );
  std::vector<query> qs;
  for ( int i = 0; i < w; ++i )
    qs.push_back( query::from_table( random_monotone_function( rng, n ) ) );
  return make_rmdt_qset( std::move( qs ), random_qset_node( rng, n, w, depth - 1 ),
                         random_qset_node( rng, n, w, depth - 1 ) );
}

inline bool sorted_inverter_ok( circuit const& c, int m )
{
  for ( int j = 0; j <= m; ++j )
  {
    std::vector<bool> in( m );
    for ( int i = 0; i < m; ++i )
      in[i] = i >= j; /* ascending 0^j 1^(m-j) */
    auto out = c.eval( in );
    for ( int i = 0; i < m; ++i )
      if ( out[i] == in[i] )
        return false;
  }
  return true;
}

inline bool negation_lower_bound_ok( circuit const& c, int max_n = 12 )
{
  if ( c.num_inputs() > max_n )
    return true; /* table extraction infeasible; covered at smaller sizes */
  int d = c.depth();
  if ( d == 0 )
    return true;
  for ( size_t o = 0; o < c.outputs().size(); ++o )
  {
    int k = decrease( truth_table_of( c, o ) );
    double bound = d * std::pow( double( k + 1 ), 1.0 / d ) - d;
    if ( c.negation_count() + 1e-9 < bound )
      return false;
  }
  return true;
}

} // namespace detail

/* criterion 1: adaptive trees are height-optimal and exact */
inline criterion_result criterion_mdt_height( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    auto t = mdt_build( f );
    return mdt_height( t ) == ceil_log2( alternation( f ) + 1 ) && mdt_table( t ) == f;
  } );
  return detail::make_result( 1, "adaptive tree height = ceil(log(alt+1))", failures,
                              "all functions, n=" + std::to_string( n ) );
}

/* criterion 2: non-adaptive trees have height alt(f) and are exact */
inline criterion_result criterion_namdt_height( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    auto t = namdt_build( f );
    return namdt_height( t ) == alternation( f ) && namdt_table( t ) == f;
  } );
  return detail::make_result( 2, "non-adaptive tree height = alt", failures,
                              "all functions, n=" + std::to_string( n ) );
}

/* criterion 3: alternation decomposition is valid and length-optimal */
inline criterion_result criterion_decomposition( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    return verify_decomposition( f, alternation_decomposition( f ) ).all_ok();
  } );
  return detail::make_result( 3, "alternation decomposition valid and optimal", failures,
                              "all functions, n=" + std::to_string( n ) );
}

/* criterion 4: threshold-interleaved decomposition has 2n+1 components */
inline criterion_result criterion_threshold_decomposition( selftest_options const& o )
{
  uint64_t failures = 0, checked = 0;
  auto check = [&]( truth_table const& f ) {
    int n = f.num_vars();
    auto d = threshold_interleaved_decomposition( f );
    bool ok = d.components.size() == size_t( 2 * n + 1 );
    truth_table acc( n );
    for ( size_t i = 0; i < d.components.size(); ++i )
    {
      ok = ok && is_monotone( d.components[i] );
      if ( i + 1 < d.components.size() )
        ok = ok && d.components[i].implies( d.components[i + 1] );
      acc = acc ^ d.components[i];
    }
    ok = ok && acc == f;
    ++checked;
    failures += ok ? 0 : 1;
  };
  for ( int n = 1; n <= 3; ++n )
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
      check( detail::table_from_index( n, v ) );
  if ( o.full )
  {
    std::mt19937 rng( o.seed );
    for ( int i = 0; i < 256; ++i )
      check( random_function( rng, 4 ) );
    check( make_candidate_fn( 4 ) );
    check( make_parity( 4 ) );
  }
  return detail::make_result( 4, "threshold-interleaved decomposition", failures,
                              std::to_string( checked ) + " functions, n<=4" );
}

/* criterion 5: uniqueness under uniform alternation */
inline criterion_result criterion_uniqueness( selftest_options const& o )
{
  int n_max = o.full ? 4 : 3;
  uint64_t failures = 0, checked = 0;
  for ( int n = 0; n <= n_max; ++n )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    {
      auto f = detail::table_from_index( n, v );
      if ( !is_uniform_alternation( f ) )
        continue;
      ++checked;
      auto a = alternation_decomposition( f );
      auto u = uniform_chain_decomposition( f );
      if ( a.components != u.components )
        ++failures;
    }
  }
  return detail::make_result( 5, "uniform-alternation decomposition unique", failures,
                              std::to_string( checked ) + " uniform functions, n<=" +
                                  std::to_string( n_max ) );
}

/* criterion 6: list/tree conversions round-trip; figure shapes reproduced */
inline criterion_result criterion_conversions( selftest_options const& o )
{
  std::mt19937 rng( o.seed + 6 );
  int instances = o.full ? 500 : 100;
  uint64_t failures = 0;
  for ( int i = 0; i < instances; ++i )
  {
    int n = 2 + i % 4;
    auto l = detail::random_mdl( rng, n );
    auto ref = mdl_table( l );
    auto t = mdt_from_mdl( l );
    auto l2 = mdl_from_mdt( t );
    auto t2 = mdt_from_mdl( l2 );
    if ( mdt_table( t ) != ref || mdl_table( l2 ) != ref || mdt_table( t2 ) != ref )
      ++failures;
  }
  if ( !detail::binary_search_shape_ok() )
    ++failures;
  if ( !detail::tree_to_list_shape_ok() )
    ++failures;
  return detail::make_result( 6, "MDL/MDT round trips and figure shapes", failures,
                              std::to_string( instances ) + " random lists" );
}

/* criterion 7: certificates */
inline criterion_result criterion_certificates( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
    {
      auto s = adaptive_certificate( f, x );
      if ( s.functions.size() > 2 || !verify_certificate( f, s ) )
        return false;
    }
    auto g = nonadaptive_certificate( f );
    return g.functions.size() == size_t( alternation( f ) ) && verify_certificate( f, g );
  } );
  return detail::make_result( 7, "adaptive (<=2) and non-adaptive (=alt) certificates",
                              failures, "all functions, n=" + std::to_string( n ) );
}

/* criterion 8: nondeterministic trees and model conversions */
inline criterion_result criterion_nondeterministic( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    int alt = alternation( f );
    auto t = nmdt_build( f );
    int b = nmdt_branches( t );
    if ( b < ( alt + 1 ) / 2 || b > ( alt + 2 ) / 2 )
      return false;
    if ( nmdt_height( t.root ) != ( b > 0 ? 2 : 0 ) )
      return false;
    auto m2 = m1_to_m2( t );
    if ( nmdt_height( m2.root ) != 2 * nmdt_height( t.root ) )
      return false;
    auto back = m2_to_m1( m2 );
    if ( nmdt_height( back.root ) != nmdt_height( m2.root ) )
      return false;
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
    {
      bool fx = f.get_bit( x );
      if ( nmdt_eval( t, x ) != fx || nmdt_eval( m2, x ) != fx ||
           nmdt_eval( back, x ) != fx )
        return false;
    }
    return true;
  } );
  return detail::make_result( 8, "height-2 nondeterministic trees, model conversions",
                              failures, "all functions, n=" + std::to_string( n ) );
}

/* criterion 9: probability characterization and derandomization */
inline criterion_result criterion_randomized( selftest_options const& o )
{
  std::mt19937 rng( o.seed + 9 );
  int instances = o.full ? 220 : 60;
  uint64_t failures = 0;
  for ( int i = 0; i < instances; ++i )
  {
    int n = 2 + i % ( o.full ? 5 : 3 );
    int h = 2 + i % ( o.full ? 4 : 3 );
    auto t = random_rmdt( rng, n, h );
    bool ok = true;
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
      ok = ok && rmdt_accept_prob( t, x ) == rmdt_accept_prob_oracle( t, x );
    auto f = rmdt_function_half( t );
    auto dr = rmdt_derandomize( t );
    ok = ok && mdt_height( dr ) <= rmdt_height( t ) && mdt_table( dr ) == f;
    failures += ok ? 0 : 1;
  }
  return detail::make_result( 9, "leaf-sum probability = coin enumeration; derandomize",
                              failures, std::to_string( instances ) + " random trees" );
}

/* criterion 10: query-set expansion factor 1+k, probabilities preserved */
inline criterion_result criterion_query_sets( selftest_options const& o )
{
  std::mt19937 rng( o.seed + 10 );
  uint64_t failures = 0;
  for ( int w : { 2, 4, 8 } )
  {
    int k = ceil_log2( w );
    for ( int i = 0; i < 10; ++i )
    {
      int n = 3;
      int depth = 2;
      rmdt t{ n, detail::random_qset_node( rng, n, w, depth ) };
      auto r = wrmdt_to_rmdt( t );
      bool ok = rmdt_height( r ) == ( 1 + k ) * depth;
      for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
        ok = ok && rmdt_accept_prob( t, x ) == rmdt_accept_prob( r, x );
      failures += ok ? 0 : 1;
    }
  }
  return detail::make_result( 10, "w-query-set expansion (w in {2,4,8})", failures,
                              "30 random query-set trees" );
}

/* criterion 11: inverter constructions */
inline criterion_result criterion_inverters( selftest_options const& o )
{
  uint64_t failures = 0;
  int m_sorted = o.full ? 256 : 64;
  for ( int m = 0; m <= m_sorted; ++m )
  {
    auto c = invert_sorted_log( m );
    if ( !detail::sorted_inverter_ok( c, m ) || c.negation_count() != ceil_log2( m + 1 ) )
      ++failures;
  }
  int m_fischer = o.full ? 12 : 8;
  for ( int m = 0; m <= m_fischer; ++m )
  {
    auto c = fischer_inverter( m );
    if ( c.negation_count() != ceil_log2( m + 1 ) )
      ++failures;
    for ( uint64_t z = 0; z < ( uint64_t( 1 ) << m ); ++z )
    {
      auto out = c.eval( z );
      for ( int i = 0; i < m; ++i )
        if ( out[i] == bool( ( z >> i ) & 1u ) )
        {
          ++failures;
          z = ( uint64_t( 1 ) << m ) - 1;
          break;
        }
    }
  }
  std::vector<int> ms = o.full ? std::vector<int>{ 8, 16, 64 } : std::vector<int>{ 8, 16 };
  for ( int m : ms )
    for ( int t : { 2, 4, 8 } )
      for ( int lv : { 1, 2, 3 } )
      {
        auto c = invert_sorted_blocks( m, t, lv );
        auto rep = report_block_inverter( c, m, t, lv );
        if ( !detail::sorted_inverter_ok( c, m ) || rep.negations_used > rep.bound )
          ++failures;
      }
  /* two levels leave a strictly smaller naive base than one: 1 bit vs 4 */
  {
    auto base_len = []( int m, int t, int lv ) {
      int len = m;
      for ( int i = 0; i < lv && len > 1 && t > 1; ++i )
        len = ( len + t - 1 ) / t;
      return len;
    };
    if ( base_len( 16, 4, 2 ) >= base_len( 16, 4, 1 ) )
      ++failures;
  }
  return detail::make_result( 11, "sorted/general/block inverters", failures,
                              "m<=" + std::to_string( m_sorted ) + " sorted, m<=" +
                                  std::to_string( m_fischer ) + " general" );
}

/* criterion 12: negation budget ceil(log(alt+1)) met constructively */
inline criterion_result criterion_markov( selftest_options const& o )
{
  int n = o.full ? 4 : 3;
  uint64_t count = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
  auto failures = detail::count_failures( count, o.jobs, [n]( uint64_t v ) {
    auto f = detail::table_from_index( n, v );
    auto [c, rep] = markov_circuit( f );
    return rep.negations_used <= rep.bound && truth_table_of( c ) == f;
  } );
  return detail::make_result( 12, "negation-limited synthesis within ceil(log(alt+1))",
                              failures, "all functions, n=" + std::to_string( n ) );
}

/* criterion 13: negation lower bound d(alt+1)^(1/d) - d on synthesized circuits */
inline criterion_result criterion_lower_bound( selftest_options const& o )
{
  uint64_t failures = 0, checked = 0;
  auto check = [&]( circuit const& c ) {
    ++checked;
    if ( !detail::negation_lower_bound_ok( c ) )
      ++failures;
  };
  for ( int m = 0; m <= 12; ++m )
    check( invert_sorted_log( m ) );
  for ( int m = 0; m <= ( o.full ? 12 : 8 ); ++m )
    check( fischer_inverter( m ) );
  for ( int t : { 2, 4, 8 } )
    for ( int lv : { 1, 2, 3 } )
      check( invert_sorted_blocks( 8, t, lv ) );
  int n = o.full ? 4 : 3;
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
    check( markov_circuit( detail::table_from_index( n, v ) ).first );
  return detail::make_result( 13, "depth-d negation lower bound (chain decrease) holds",
                              failures,
                              std::to_string( checked ) + " circuits (tables at n<=12)" );
}

/* criterion 14: alt(f) <= 2^height for every constructed tree */
inline criterion_result criterion_height_sanity( selftest_options const& o )
{
  uint64_t failures = 0, checked = 0;
  int n = o.full ? 4 : 3;
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << ( 1 << n ) ); ++v )
  {
    auto f = detail::table_from_index( n, v );
    auto t = mdt_build( f );
    ++checked;
    if ( alternation( f ) > ( 1 << mdt_height( t ) ) )
      ++failures;
  }
  std::mt19937 rng( o.seed + 14 );
  for ( int i = 0; i < 50; ++i )
  {
    auto c = random_circuit( rng, 3 + i % 4, 12, 4 );
    auto t = mdt_from_circuit( c );
    ++checked;
    if ( alternation( mdt_table( t ) ) > ( 1 << mdt_height( t ) ) )
      ++failures;
  }
  return detail::make_result( 14, "alt <= 2^height for all constructed trees", failures,
                              std::to_string( checked ) + " trees" );
}

inline std::vector<criterion_result> run_acceptance( selftest_options const& o )
{
  return {
      criterion_mdt_height( o ),        criterion_namdt_height( o ),
      criterion_decomposition( o ),     criterion_threshold_decomposition( o ),
      criterion_uniqueness( o ),        criterion_conversions( o ),
      criterion_certificates( o ),      criterion_nondeterministic( o ),
      criterion_randomized( o ),        criterion_query_sets( o ),
      criterion_inverters( o ),         criterion_markov( o ),
      criterion_lower_bound( o ),       criterion_height_sanity( o ),
  };
}

} // namespace monodec
