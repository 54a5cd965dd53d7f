#include <benchmark/benchmark.h>

#include <monodec/alternation.hpp>
#include <monodec/decomposition.hpp>
#include <monodec/inverters.hpp>
#include <monodec/synthesis.hpp>

#include <random>

using namespace monodec;

namespace
{

truth_table random_table( int n, unsigned seed )
{
  std::mt19937 rng( seed );
  std::uniform_int_distribution<int> bit( 0, 1 );
  truth_table f( n );
  for ( uint64_t x = 0; x < f.num_bits(); ++x )
    f.set_bit( x, bit( rng ) );
  return f;
}

} // namespace

static void bm_alt_profile( benchmark::State& state )
{
  auto f = random_table( static_cast<int>( state.range( 0 ) ), 42 );
  for ( auto _ : state )
    benchmark::DoNotOptimize( alt_profile( f ) );
}
BENCHMARK( bm_alt_profile )->Arg( 12 )->Arg( 16 );

static void bm_alternation_decomposition( benchmark::State& state )
{
  auto f = random_table( static_cast<int>( state.range( 0 ) ), 42 );
  for ( auto _ : state )
    benchmark::DoNotOptimize( alternation_decomposition( f ) );
}
BENCHMARK( bm_alternation_decomposition )->Arg( 10 )->Arg( 14 );

static void bm_invert_sorted_log( benchmark::State& state )
{
  for ( auto _ : state )
    benchmark::DoNotOptimize( invert_sorted_log( static_cast<int>( state.range( 0 ) ) ) );
}
BENCHMARK( bm_invert_sorted_log )->Arg( 64 )->Arg( 256 );

static void bm_markov_circuit( benchmark::State& state )
{
  auto f = random_table( 4, 7 );
  for ( auto _ : state )
    benchmark::DoNotOptimize( markov_circuit( f ) );
}
BENCHMARK( bm_markov_circuit );

BENCHMARK_MAIN();
