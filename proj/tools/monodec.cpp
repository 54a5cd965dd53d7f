#include <monodec/io.hpp>
#include <monodec/monodec.hpp>
#include <monodec/selftest.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace monodec;

namespace
{

/* exit codes: 0 success/EQUIV, 1 verified-NOT-equivalent, 2 usage/parse error */
constexpr int exit_ok = 0;
constexpr int exit_not_equiv = 1;
constexpr int exit_usage = 2;

struct global_opts
{
  int max_n = default_max_n;
  unsigned seed = 0xC0FFEEu;
  int jobs = 1;
  std::string out;
};

void emit( global_opts const& g, std::string const& content )
{
  if ( g.out.empty() )
    std::cout << content;
  else
    write_file( g.out, content );
}

std::string dirname_of( std::string const& path )
{
  auto slash = path.rfind( '/' );
  return slash == std::string::npos ? std::string() : path.substr( 0, slash );
}

/* Reduce any artifact file to a truth table, sniffing the format from
   content: JSON object (typed model), netlist, decomposition, or raw
   truth table. */
truth_table artifact_table( std::string const& path, int max_n )
{
  auto text = read_file( path );
  auto first = text.find_first_not_of( " \t\r\n" );
  if ( first == std::string::npos )
    throw std::invalid_argument( path + ": empty artifact" );

  if ( text[first] == '{' )
  {
    auto j = json::parse( text );
    auto type = j.at( "type" ).get<std::string>();
    auto base = dirname_of( path );
    if ( type == "mdl" )
      return mdl_table( mdl_from_json( j, base ) );
    if ( type == "mdt" )
      return mdt_table( mdt_from_json( j, base ) );
    if ( type == "namdt" )
      return namdt_table( namdt_from_json( j, base ) );
    if ( type == "rmdt" )
      return rmdt_function_half( rmdt_from_json( j, base ) );
    if ( type == "nmdt1" )
    {
      auto t = nmdt_from_json( j, base );
      truth_table f( t.n );
      for ( uint64_t x = 0; x < f.num_bits(); ++x )
        f.set_bit( x, nmdt_eval( t, x ) );
      return f;
    }
    throw std::invalid_argument( path + ": unknown artifact type " + type );
  }
  if ( text.compare( first, 6, "INPUTS" ) == 0 )
  {
    auto c = parse_netlist( text );
    if ( c.num_inputs() > max_n )
      throw std::invalid_argument( path + ": arity above max_n" );
    return truth_table_of( c );
  }
  if ( text.find( " m=" ) != std::string::npos )
  {
    auto d = decomposition_from_text( text );
    truth_table f( d.target.num_vars() );
    for ( auto const& c : d.components )
      f = f ^ c;
    return f;
  }
  return tt_from_text( text );
}

int cmd_alt( global_opts const& g, std::string const& file )
{
  auto f = tt_from_text( read_file( file ) );
  if ( f.num_vars() > g.max_n )
    throw std::invalid_argument( "alt: arity above max_n" );
  int k = alternation( f );
  std::printf( "alt=%d uniform=%s dtm=%d dtm_na=%d\n", k,
               is_uniform_alternation( f ) ? "true" : "false", ceil_log2( k + 1 ), k );
  return exit_ok;
}

int cmd_decompose( global_opts const& g, std::string const& file, std::string const& kind )
{
  auto f = tt_from_text( read_file( file ) );
  monotone_decomposition d;
  if ( kind == "alt" )
    d = alternation_decomposition( f );
  else if ( kind == "threshold" )
    d = threshold_interleaved_decomposition( f );
  else if ( kind == "uniform" )
  {
    if ( !is_uniform_alternation( f ) )
      throw std::invalid_argument( "decompose: function has non-uniform alternation" );
    d = uniform_chain_decomposition( f );
  }
  else
    throw std::invalid_argument( "decompose: unknown kind " + kind );

  auto rep = verify_decomposition( f, d );
  emit( g, decomposition_to_text( d ) );
  std::printf( "components=%zu xor=%s monotone=%s implication=%s optimal=%s\n",
               rep.length, rep.xor_equals_target ? "ok" : "FAIL",
               rep.all_monotone ? "ok" : "FAIL", rep.implication_holds ? "ok" : "FAIL",
               rep.is_optimal_length ? "ok" : "n/a" );
  return rep.all_ok() || kind == "threshold" ? exit_ok : exit_not_equiv;
}

int cmd_build( global_opts const& g, std::string const& file, std::string const& model )
{
  auto f = tt_from_text( read_file( file ) );
  json j;
  if ( model == "mdl" )
    j = mdl_to_json( mdl_from_decomposition( alternation_decomposition( f ) ) );
  else if ( model == "mdt" )
    j = mdt_to_json( mdt_build( f ) );
  else if ( model == "namdt" )
    j = namdt_to_json( namdt_build( f ) );
  else if ( model == "nmdt" )
    j = nmdt_to_json( nmdt_build( f ) );
  else
    throw std::invalid_argument( "build: unknown model " + model );
  emit( g, j.dump( 2 ) + "\n" );
  return exit_ok;
}

int cmd_convert( global_opts const& g, std::string const& file, std::string const& to )
{
  auto j = json::parse( read_file( file ) );
  auto from = j.at( "type" ).get<std::string>();
  auto base = dirname_of( file );
  json out;
  if ( from == "mdl" && to == "mdt" )
    out = mdt_to_json( mdt_from_mdl( mdl_from_json( j, base ) ) );
  else if ( from == "mdt" && to == "mdl" )
    out = mdl_to_json( mdl_from_mdt( mdt_from_json( j, base ) ) );
  else if ( from == "rmdt" && to == "rmdt" )
    out = rmdt_to_json( wrmdt_to_rmdt( rmdt_from_json( j, base ) ) );
  else
    throw std::invalid_argument( "convert: unsupported pair " + from + " -> " + to );
  emit( g, out.dump( 2 ) + "\n" );
  return exit_ok;
}

int cmd_synth( global_opts const& g, std::string const& file, std::string const& target,
               int m, int t, int levels )
{
  auto finish = [&]( circuit const& c, negation_budget_report const& rep ) {
    emit( g, emit_netlist( c ) );
    std::printf( "negations=%d bound=%d (%s)\n", rep.negations_used, rep.bound,
                 rep.bound_formula.c_str() );
    return exit_ok;
  };
  if ( target == "markov" )
  {
    auto f = tt_from_text( read_file( file ) );
    auto [c, rep] = markov_circuit( f );
    int rc = finish( c, rep );
    std::printf( "%s\n", truth_table_of( c ) == f ? "EQUIV" : "NOT-EQUIV" );
    return truth_table_of( c ) == f ? rc : exit_not_equiv;
  }
  if ( target == "mdt_from_circuit" )
  {
    auto c = parse_netlist( read_file( file ) );
    emit( g, mdt_to_json( mdt_from_circuit( c ) ).dump( 2 ) + "\n" );
    return exit_ok;
  }
  if ( target == "inverter_sorted" )
  {
    auto c = invert_sorted_log( m );
    return finish( c, report_log_inverter( c, m ) );
  }
  if ( target == "inverter_fischer" )
  {
    auto c = fischer_inverter( m );
    return finish( c, report_log_inverter( c, m ) );
  }
  if ( target == "inverter_blocks" )
  {
    auto c = invert_sorted_blocks( m, t, levels );
    return finish( c, report_block_inverter( c, m, t, levels ) );
  }
  if ( target == "circuit_from_mdl" )
  {
    auto j = json::parse( read_file( file ) );
    auto [c, rep] = circuit_from_mdl( mdl_from_json( j, dirname_of( file ) ), t, levels );
    return finish( c, rep );
  }
  throw std::invalid_argument( "synth: unknown target " + target );
}

int cmd_rmdt( global_opts const& g, std::string const& file, std::string const& sub,
              uint64_t x, std::string const& f_file, std::string const& theta )
{
  auto j = json::parse( read_file( file ) );
  auto t = rmdt_from_json( j, dirname_of( file ) );
  if ( sub == "prob" )
  {
    std::printf( "p=%s\n", rmdt_accept_prob( t, x ).str().c_str() );
    return exit_ok;
  }
  if ( sub == "computes" )
  {
    auto f = tt_from_text( read_file( f_file ) );
    auto th = theta == "two_thirds" ? rmdt_threshold::two_thirds : rmdt_threshold::half;
    bool ok = rmdt_computes( t, f, th );
    std::printf( "%s\n", ok ? "yes" : "no" );
    return ok ? exit_ok : exit_not_equiv;
  }
  if ( sub == "normalize" )
  {
    emit( g, rmdt_to_json( rmdt_normalize( t ) ).dump( 2 ) + "\n" );
    return exit_ok;
  }
  if ( sub == "derandomize" )
  {
    emit( g, mdt_to_json( rmdt_derandomize( t ) ).dump( 2 ) + "\n" );
    return exit_ok;
  }
  if ( sub == "from_wrmdt" )
  {
    emit( g, rmdt_to_json( wrmdt_to_rmdt( t ) ).dump( 2 ) + "\n" );
    return exit_ok;
  }
  if ( sub == "majority" )
  {
    json items = json::array();
    for ( auto const& sub_tree : rmdt_to_majority_form( t ) )
      items.push_back( mdt_to_json( sub_tree ) );
    emit( g, json{ { "type", "mdt_list" }, { "items", items } }.dump( 2 ) + "\n" );
    return exit_ok;
  }
  throw std::invalid_argument( "rmdt: unknown subcommand " + sub );
}

int cmd_verify( global_opts const& g, std::string const& a, std::string const& b )
{
  auto fa = artifact_table( a, g.max_n );
  auto fb = artifact_table( b, g.max_n );
  if ( fa.num_vars() != fb.num_vars() )
    throw std::invalid_argument( "verify: artifacts have different arity" );
  bool eq = fa == fb;
  std::printf( "%s\n", eq ? "EQUIV" : "NOT-EQUIV" );
  return eq ? exit_ok : exit_not_equiv;
}

int cmd_selftest( global_opts const& g, std::string const& level )
{
  selftest_options o;
  o.full = level == "full";
  o.seed = g.seed;
  o.jobs = g.jobs;
  bool all = true;
  for ( auto const& r : run_acceptance( o ) )
  {
    std::printf( "criterion %2d [%s] %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                 r.name.c_str(), r.detail.c_str() );
    all = all && r.pass;
  }
  return all ? exit_ok : exit_not_equiv;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "alternation analysis, monotone decision models, and negation-limited synthesis" };
  app.require_subcommand( 1 );

  global_opts g;
  app.add_option( "--max-n", g.max_n, "largest supported arity" );
  app.add_option( "--seed", g.seed, "seed for randomized corpora" );
  app.add_option( "--jobs", g.jobs, "threads for exhaustive sweeps" );
  app.add_option( "--out", g.out, "output file (default stdout)" );

  std::string file, file_b, kind = "alt", model = "mdt", to = "mdt", target, sub,
                    f_file, theta = "half";
  int m = 0, t = 2, levels = 1;
  uint64_t x = 0;

  auto* alt_cmd = app.add_subcommand( "alt", "alternation and derived tree measures" );
  alt_cmd->add_option( "file", file, "truth-table file" )->required();

  auto* dec_cmd = app.add_subcommand( "decompose", "monotone decomposition + report" );
  dec_cmd->add_option( "file", file, "truth-table file" )->required();
  dec_cmd->add_option( "--kind", kind, "alt | threshold | uniform" );

  auto* build_cmd = app.add_subcommand( "build", "construct a decision model" );
  build_cmd->add_option( "file", file, "truth-table file" )->required();
  build_cmd->add_option( "--model", model, "mdl | mdt | namdt | nmdt" );

  auto* conv_cmd = app.add_subcommand( "convert", "convert between models" );
  conv_cmd->add_option( "file", file, "model JSON file" )->required();
  conv_cmd->add_option( "--to", to, "mdl | mdt | rmdt" )->required();

  auto* synth_cmd = app.add_subcommand( "synth", "circuit synthesis" );
  synth_cmd->add_option( "--target", target,
                         "markov | mdt_from_circuit | inverter_sorted | inverter_fischer "
                         "| inverter_blocks | circuit_from_mdl" )
      ->required();
  synth_cmd->add_option( "file", file, "input artifact (when required)" );
  synth_cmd->add_option( "--m", m, "inverter width" );
  synth_cmd->add_option( "--t", t, "blocks per level" );
  synth_cmd->add_option( "--levels", levels, "recursion levels" );

  auto* rmdt_cmd = app.add_subcommand( "rmdt", "randomized-tree operations" );
  rmdt_cmd->add_option( "file", file, "rmdt JSON file" )->required();
  rmdt_cmd->add_option( "--sub", sub,
                        "prob | computes | normalize | derandomize | from_wrmdt | majority" )
      ->required();
  rmdt_cmd->add_option( "--x", x, "input point (prob)" );
  rmdt_cmd->add_option( "--f", f_file, "target truth-table file (computes)" );
  rmdt_cmd->add_option( "--theta", theta, "half | two_thirds" );

  auto* ver_cmd = app.add_subcommand( "verify", "exhaustive equivalence of two artifacts" );
  ver_cmd->add_option( "a", file, "first artifact" )->required();
  ver_cmd->add_option( "b", file_b, "second artifact" )->required();

  std::string level = "quick";
  auto* self_cmd = app.add_subcommand( "selftest", "run the acceptance suites" );
  self_cmd->add_option( "--level", level, "quick | full" );

  /* let --out/--seed/... appear after the subcommand as well */
  for ( auto* s : { alt_cmd, dec_cmd, build_cmd, conv_cmd, synth_cmd, rmdt_cmd, ver_cmd,
                    self_cmd } )
    s->fallthrough();

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int rc = app.exit( e );
    return rc == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( alt_cmd->parsed() )
      return cmd_alt( g, file );
    if ( dec_cmd->parsed() )
      return cmd_decompose( g, file, kind );
    if ( build_cmd->parsed() )
      return cmd_build( g, file, model );
    if ( conv_cmd->parsed() )
      return cmd_convert( g, file, to );
    if ( synth_cmd->parsed() )
      return cmd_synth( g, file, target, m, t, levels );
    if ( rmdt_cmd->parsed() )
      return cmd_rmdt( g, file, sub, x, f_file, theta );
    if ( ver_cmd->parsed() )
      return cmd_verify( g, file, file_b );
    if ( self_cmd->parsed() )
      return cmd_selftest( g, level );
  }
  catch ( std::exception const& e )
  {
    std::fprintf( stderr, "error: %s\n", e.what() );
    return exit_usage;
  }
  return exit_usage;
}
