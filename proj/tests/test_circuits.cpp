#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <monodec/circuit_to_tree.hpp>
#include <monodec/inverters.hpp>
#include <monodec/netlist.hpp>
#include <monodec/random_gen.hpp>
#include <monodec/synthesis.hpp>

using namespace monodec;

TEST_CASE( "netlist parse and emit round trip" )
{
  std::string src = "INPUTS 3\n"
                    "g1=AND(x1,x2)\n"
                    "g2=NOT(g1)\n"
                    "g3=TH2(g2,x3,x1)\n"
                    "g4=CONST1\n"
                    "g5=OR(g3,g4)\n"
                    "OUTPUTS g5,g3\n";
  auto c = parse_netlist( src );
  CHECK( c.num_inputs() == 3 );
  CHECK( c.outputs().size() == 2 );
  CHECK( c.negation_count() == 1 );
  auto c2 = parse_netlist( emit_netlist( c ) );
  for ( uint64_t x = 0; x < 8; ++x )
    CHECK( c.eval( x ) == c2.eval( x ) );
}

TEST_CASE( "netlist parser rejects malformed input" )
{
  CHECK_THROWS( parse_netlist( "g1=AND(x1)\nOUTPUTS g1\n" ) );          /* no INPUTS */
  CHECK_THROWS( parse_netlist( "INPUTS 2\ng1=AND(x1,g2)\ng2=CONST0\nOUTPUTS g1\n" ) );
  CHECK_THROWS( parse_netlist( "INPUTS 2\ng1=CONST0\ng1=CONST1\nOUTPUTS g1\n" ) );
  CHECK_THROWS( parse_netlist( "INPUTS 2\ng1=NOT(x1,x2)\nOUTPUTS g1\n" ) );
}

TEST_CASE( "substituting a NOT gate propagates constants" )
{
  circuit c( 2 );
  int a = c.add_and( { c.input_gate( 1 ), c.input_gate( 2 ) } );
  int n = c.add_not( a );
  int o = c.add_or( { n, c.input_gate( 1 ) } );
  c.set_outputs( { o } );

  auto c1 = substitute_not( c, n, true ); /* OR absorbs the constant 1 */
  CHECK( c1.negation_count() == 0 );
  CHECK( truth_table_of( c1 ).is_const1() );

  auto c0 = substitute_not( c, n, false ); /* OR keeps only x1 */
  CHECK( truth_table_of( c0 ) == make_variable( 2, 1 ) );
}

TEST_CASE( "cone extraction keeps all inputs and reachable gates" )
{
  circuit c( 2 );
  int a = c.add_and( { c.input_gate( 1 ), c.input_gate( 2 ) } );
  c.add_or( { c.input_gate( 1 ) } ); /* unrelated */
  c.set_outputs( { a } );
  auto cone = cone_of( c, a );
  CHECK( cone.num_inputs() == 2 );
  CHECK( cone.gates().size() == 3 );
  CHECK( truth_table_of( cone ) == truth_table_of( c ) );
}

TEST_CASE( "tree extracted from a circuit with few negations" )
{
  std::mt19937 rng( 17 );
  for ( int i = 0; i < 200; ++i )
  {
    int n = 2 + i % 5;
    auto c = random_circuit( rng, n, 4 + i % 12, 4 );
    auto t = mdt_from_circuit( c );
    CHECK( mdt_table( t ) == truth_table_of( c ) );
    CHECK( mdt_height( t ) <= c.negation_count() + 1 );
    /* every query must be a monotone function */
    std::function<void( mdt_node_ptr const& )> walk = [&]( mdt_node_ptr const& node ) {
      if ( node->is_leaf )
        return;
      CHECK( is_monotone( node->q.materialize( n ) ) );
      walk( node->child0 );
      walk( node->child1 );
    };
    walk( t.root );
  }
}

TEST_CASE( "logarithmic sorted-input inverter" )
{
  auto c = invert_sorted_log( 4 );
  CHECK( c.negation_count() == 3 ); /* ceil(log 5) */
  /* 0011 ascending -> 1100 */
  auto out = c.eval( std::vector<bool>{ false, false, true, true } );
  CHECK( out == std::vector<bool>{ true, true, false, false } );

  for ( int m : { 0, 1, 2, 3, 7, 8, 31 } )
  {
    auto inv = invert_sorted_log( m );
    CHECK( inv.negation_count() == ceil_log2( m + 1 ) );
    for ( int j = 0; j <= m; ++j )
    {
      std::vector<bool> in( m );
      for ( int i = 0; i < m; ++i )
        in[i] = i >= j;
      auto o = inv.eval( in );
      for ( int i = 0; i < m; ++i )
        CHECK( o[i] != in[i] );
    }
  }
}

TEST_CASE( "general inverter over all inputs" )
{
  auto c = fischer_inverter( 3 );
  CHECK( c.negation_count() == 2 );
  auto out = c.eval( uint64_t( 0b101 ) );
  CHECK( out == std::vector<bool>{ false, true, false } );

  for ( int m = 0; m <= 6; ++m )
  {
    auto inv = fischer_inverter( m );
    CHECK( inv.negation_count() == ceil_log2( m + 1 ) );
    for ( uint64_t z = 0; z < ( uint64_t( 1 ) << m ); ++z )
    {
      auto o = inv.eval( z );
      for ( int i = 0; i < m; ++i )
        CHECK( o[i] == !( ( z >> i ) & 1u ) );
    }
  }
}

TEST_CASE( "block inverter trades negations for levels" )
{
  auto one = invert_sorted_blocks( 16, 4, 1 );
  auto two = invert_sorted_blocks( 16, 4, 2 );
  /* one level: 2t + naive 4-bit base = 12; two levels shrink the naive
     base to a single bit at the cost of another 2t: 17 total */
  CHECK( one.negation_count() == 12 );
  CHECK( two.negation_count() == 17 );
  CHECK( block_inverter_bound( 16, 4, 1 ) == 12 );
  CHECK( block_inverter_bound( 16, 4, 2 ) == 17 );

  for ( int m : { 8, 16 } )
    for ( int t : { 2, 4 } )
      for ( int lv : { 1, 2, 3 } )
      {
        auto c2 = invert_sorted_blocks( m, t, lv );
        CHECK( c2.negation_count() == block_inverter_bound( m, t, lv ) );
        for ( int j = 0; j <= m; ++j )
        {
          std::vector<bool> in( m );
          for ( int i = 0; i < m; ++i )
            in[i] = i >= j;
          auto o = c2.eval( in );
          for ( int i = 0; i < m; ++i )
            CHECK( o[i] != in[i] );
        }
      }
}

TEST_CASE( "negation-limited synthesis from the alternation decomposition" )
{
  auto f = make_parity( 2 );
  auto [c, rep] = markov_circuit( f );
  CHECK( truth_table_of( c ) == f );
  CHECK( rep.negations_used <= 2 );
  CHECK( rep.bound == 2 );

  auto [cm, rm] = markov_circuit( make_threshold( 3, 2 ) );
  CHECK( rm.negations_used == 0 ); /* monotone functions need no negation */
  CHECK( truth_table_of( cm ) == make_threshold( 3, 2 ) );

  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << 8 ); ++v )
  {
    truth_table g( 3 );
    for ( uint64_t x = 0; x < 8; ++x )
      g.set_bit( x, ( v >> x ) & 1u );
    auto [cg, rg] = markov_circuit( g );
    CHECK( truth_table_of( cg ) == g );
    CHECK( rg.negations_used <= ceil_log2( alternation( g ) + 1 ) );
  }
}

TEST_CASE( "circuit from a decision list via the block inverter" )
{
  auto f = make_candidate_fn( 4 );
  auto l = mdl_from_decomposition( alternation_decomposition( f ) );
  for ( int t : { 2, 4 } )
    for ( int lv : { 1, 2 } )
    {
      auto [c, rep] = circuit_from_mdl( l, t, lv );
      CHECK( truth_table_of( c ) == f );
      CHECK( rep.negations_used <= rep.bound );
    }
}
