#pragma once

#include "decision_tree.hpp"
#include "decomposition.hpp"
#include "netlist.hpp"
#include "nonadaptive.hpp"
#include "nondet.hpp"
#include "randomized.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace monodec
{

using json = nlohmann::json;

/* ---------------- truth-table text format ---------------- */

inline std::string tt_to_text( truth_table const& t )
{
  return "n=" + std::to_string( t.num_vars() ) + "\n" + t.to_hex() + "\n";
}

inline truth_table tt_from_text( std::string const& text )
{
  std::istringstream in( text );
  std::string header, hex;
  if ( !std::getline( in, header ) || header.rfind( "n=", 0 ) != 0 )
    throw std::invalid_argument( "truth table: missing n= header" );
  if ( !std::getline( in, hex ) )
    throw std::invalid_argument( "truth table: missing hex line" );
  return truth_table::from_hex( std::stoi( header.substr( 2 ) ), hex );
}

/* ---------------- decomposition file ---------------- */

inline std::string decomposition_to_text( monotone_decomposition const& d )
{
  std::ostringstream out;
  out << "n=" << d.target.num_vars() << " m=" << d.components.size() << " dir=asc\n";
  for ( auto const& c : d.components )
    out << c.to_hex() << "\n";
  out << d.target.to_hex() << "\n";
  return out.str();
}

inline monotone_decomposition decomposition_from_text( std::string const& text )
{
  std::istringstream in( text );
  std::string header;
  if ( !std::getline( in, header ) )
    throw std::invalid_argument( "decomposition: empty file" );
  int n = -1;
  size_t m = 0;
  {
    std::istringstream hs( header );
    std::string tok;
    bool have_dir = false;
    while ( hs >> tok )
    {
      if ( tok.rfind( "n=", 0 ) == 0 )
        n = std::stoi( tok.substr( 2 ) );
      else if ( tok.rfind( "m=", 0 ) == 0 )
        m = std::stoul( tok.substr( 2 ) );
      else if ( tok == "dir=asc" )
        have_dir = true;
      else
        throw std::invalid_argument( "decomposition: bad header token: " + tok );
    }
    if ( n < 0 || !have_dir )
      throw std::invalid_argument( "decomposition: incomplete header" );
  }
  monotone_decomposition d;
  std::string line;
  for ( size_t i = 0; i < m; ++i )
  {
    if ( !std::getline( in, line ) )
      throw std::invalid_argument( "decomposition: missing component line" );
    d.components.push_back( truth_table::from_hex( n, line ) );
  }
  if ( !std::getline( in, line ) )
    throw std::invalid_argument( "decomposition: missing target line" );
  d.target = truth_table::from_hex( n, line );
  return d;
}

/* ---------------- query tables in JSON models ---------------- */

namespace detail
{

class query_table_builder
{
public:
  explicit query_table_builder( int n ) : n_( n ) {}

  int add( query const& q )
  {
    switch ( q.node_kind() )
    {
    case query::kind::table:
      return intern( json{ { "tt", q.table().to_hex() } } );
    case query::kind::conj:
    case query::kind::disj:
    {
      std::vector<int> ids;
      for ( auto const& c : q.children() )
        ids.push_back( add( c ) );
      char const* key = q.node_kind() == query::kind::conj ? "and" : "or";
      return intern( json{ { key, ids } } );
    }
    case query::kind::circ:
      /* circuit handles are materialized on emission */
      return intern( json{ { "tt", q.materialize( n_ ).to_hex() } } );
    }
    throw std::logic_error( "query_table_builder: bad kind" );
  }

  json const& table() const { return arr_; }

private:
  int intern( json obj )
  {
    auto key = obj.dump();
    auto it = memo_.find( key );
    if ( it != memo_.end() )
      return it->second;
    arr_.push_back( std::move( obj ) );
    int id = static_cast<int>( arr_.size() ) - 1;
    memo_.emplace( std::move( key ), id );
    return id;
  }

  int n_;
  json arr_ = json::array();
  std::map<std::string, int> memo_;
};

inline std::vector<query> parse_query_table( json const& arr, int n,
                                             std::string const& base_dir )
{
  std::vector<query> out;
  for ( auto const& obj : arr )
  {
    if ( obj.contains( "tt" ) )
    {
      out.push_back( query::from_table(
          truth_table::from_hex( n, obj["tt"].get<std::string>() ) ) );
    }
    else if ( obj.contains( "and" ) || obj.contains( "or" ) )
    {
      bool conj = obj.contains( "and" );
      std::vector<query> children;
      for ( int id : obj[conj ? "and" : "or"] )
      {
        if ( id < 0 || id >= static_cast<int>( out.size() ) )
          throw std::invalid_argument( "query table: forward or invalid reference" );
        children.push_back( out[id] );
      }
      out.push_back( conj ? query::conjunction( std::move( children ) )
                          : query::disjunction( std::move( children ) ) );
    }
    else if ( obj.contains( "circuit" ) )
    {
      auto ref = obj["circuit"].get<std::string>();
      auto hash = ref.rfind( '#' );
      std::string path = hash == std::string::npos ? ref : ref.substr( 0, hash );
      size_t output = hash == std::string::npos ? 0 : std::stoul( ref.substr( hash + 1 ) );
      if ( !base_dir.empty() && path[0] != '/' )
        path = base_dir + "/" + path;
      std::ifstream f( path );
      if ( !f )
        throw std::invalid_argument( "query table: cannot open circuit file " + path );
      std::stringstream ss;
      ss << f.rdbuf();
      auto c = std::make_shared<circuit>( parse_netlist( ss.str() ) );
      out.push_back( query::from_circuit( std::move( c ), output ) );
    }
    else
      throw std::invalid_argument( "query table: unknown query object" );
  }
  return out;
}

} // namespace detail

/* ---------------- decision lists and trees ---------------- */

inline json mdl_to_json( mdl const& l )
{
  detail::query_table_builder qt( l.n );
  json nodes = json::array();
  for ( auto const& node : l.nodes )
    nodes.push_back( { { "q", qt.add( node.q ) }, { "c", node.c ? 1 : 0 } } );
  return { { "type", "mdl" }, { "n", l.n }, { "queries", qt.table() }, { "nodes", nodes } };
}

inline mdl mdl_from_json( json const& j, std::string const& base_dir = "" )
{
  mdl l;
  l.n = j.at( "n" ).get<int>();
  auto queries = detail::parse_query_table( j.at( "queries" ), l.n, base_dir );
  for ( auto const& node : j.at( "nodes" ) )
    l.nodes.push_back(
        { queries.at( node.at( "q" ).get<size_t>() ), node.at( "c" ).get<int>() != 0 } );
  return l;
}

namespace detail
{

inline json mdt_node_to_json( mdt_node_ptr const& node, query_table_builder& qt )
{
  if ( node->is_leaf )
    return { { "leaf", node->label ? 1 : 0 } };
  return { { "q", qt.add( node->q ) },
           { "c0", mdt_node_to_json( node->child0, qt ) },
           { "c1", mdt_node_to_json( node->child1, qt ) } };
}

inline mdt_node_ptr mdt_node_from_json( json const& j, std::vector<query> const& queries )
{
  if ( j.contains( "leaf" ) )
    return make_mdt_leaf( j["leaf"].get<int>() != 0 );
  return make_mdt_query( queries.at( j.at( "q" ).get<size_t>() ),
                         mdt_node_from_json( j.at( "c0" ), queries ),
                         mdt_node_from_json( j.at( "c1" ), queries ) );
}

} // namespace detail

inline json mdt_to_json( mdt const& t )
{
  detail::query_table_builder qt( t.n );
  auto root = detail::mdt_node_to_json( t.root, qt );
  return { { "type", "mdt" }, { "n", t.n }, { "queries", qt.table() }, { "root", root } };
}

inline mdt mdt_from_json( json const& j, std::string const& base_dir = "" )
{
  mdt t;
  t.n = j.at( "n" ).get<int>();
  auto queries = detail::parse_query_table( j.at( "queries" ), t.n, base_dir );
  t.root = detail::mdt_node_from_json( j.at( "root" ), queries );
  return t;
}

inline json namdt_to_json( namdt const& t )
{
  detail::query_table_builder qt( t.n );
  json qs = json::array();
  for ( auto const& q : t.queries )
    qs.push_back( qt.add( query::from_table( q ) ) );
  std::string labels;
  for ( bool b : t.labels )
    labels += b ? '1' : '0';
  return { { "type", "namdt" },
           { "n", t.n },
           { "queries", qt.table() },
           { "order", qs },
           { "labels", labels } };
}

inline namdt namdt_from_json( json const& j, std::string const& base_dir = "" )
{
  namdt t;
  t.n = j.at( "n" ).get<int>();
  auto queries = detail::parse_query_table( j.at( "queries" ), t.n, base_dir );
  for ( auto const& id : j.at( "order" ) )
    t.queries.push_back( queries.at( id.get<size_t>() ).materialize( t.n ) );
  for ( char ch : j.at( "labels" ).get<std::string>() )
    t.labels.push_back( ch == '1' );
  if ( t.labels.size() != uint64_t( 1 ) << t.queries.size() )
    throw std::invalid_argument( "namdt: label table size mismatch" );
  return t;
}

/* ---------------- randomized and nondeterministic trees ---------------- */

namespace detail
{

inline json rmdt_node_to_json( rmdt_ptr const& node, query_table_builder& qt )
{
  switch ( node->k )
  {
  case rmdt_node::kind::leaf:
    return { { "leaf", node->label ? 1 : 0 } };
  case rmdt_node::kind::qnode:
    return { { "q", qt.add( node->q ) },
             { "c0", rmdt_node_to_json( node->c0, qt ) },
             { "c1", rmdt_node_to_json( node->c1, qt ) } };
  case rmdt_node::kind::coin:
    return { { "coin", true },
             { "c0", rmdt_node_to_json( node->c0, qt ) },
             { "c1", rmdt_node_to_json( node->c1, qt ) } };
  case rmdt_node::kind::qset:
  {
    std::vector<int> ids;
    for ( auto const& q : node->qs )
      ids.push_back( qt.add( q ) );
    return { { "qset", ids },
             { "c0", rmdt_node_to_json( node->c0, qt ) },
             { "c1", rmdt_node_to_json( node->c1, qt ) } };
  }
  }
  throw std::logic_error( "rmdt_node_to_json: bad kind" );
}

inline rmdt_ptr rmdt_node_from_json( json const& j, std::vector<query> const& queries )
{
  if ( j.contains( "leaf" ) )
    return make_rmdt_leaf( j["leaf"].get<int>() != 0 );
  auto c0 = rmdt_node_from_json( j.at( "c0" ), queries );
  auto c1 = rmdt_node_from_json( j.at( "c1" ), queries );
  if ( j.contains( "coin" ) )
    return make_rmdt_coin( std::move( c0 ), std::move( c1 ) );
  if ( j.contains( "qset" ) )
  {
    std::vector<query> qs;
    for ( auto const& id : j["qset"] )
      qs.push_back( queries.at( id.get<size_t>() ) );
    return make_rmdt_qset( std::move( qs ), std::move( c0 ), std::move( c1 ) );
  }
  return make_rmdt_query( queries.at( j.at( "q" ).get<size_t>() ), std::move( c0 ),
                          std::move( c1 ) );
}

inline json nmdt1_node_to_json( nmdt1_ptr const& node, query_table_builder& qt )
{
  if ( node->is_leaf )
    return { { "leaf", node->label ? 1 : 0 } };
  json edges = json::array();
  for ( auto const& e : node->edges )
    edges.push_back( { { "q", qt.add( e.q ) },
                       { "neg", e.negated },
                       { "to", nmdt1_node_to_json( e.target, qt ) } } );
  return { { "edges", edges } };
}

inline nmdt1_ptr nmdt1_node_from_json( json const& j, std::vector<query> const& queries )
{
  if ( j.contains( "leaf" ) )
    return make_nmdt1_leaf( j["leaf"].get<int>() != 0 );
  std::vector<nmdt1_edge> edges;
  for ( auto const& e : j.at( "edges" ) )
    edges.push_back( { queries.at( e.at( "q" ).get<size_t>() ), e.at( "neg" ).get<bool>(),
                       nmdt1_node_from_json( e.at( "to" ), queries ) } );
  return make_nmdt1_inner( std::move( edges ) );
}

} // namespace detail

inline json rmdt_to_json( rmdt const& t )
{
  detail::query_table_builder qt( t.n );
  auto root = detail::rmdt_node_to_json( t.root, qt );
  return { { "type", "rmdt" }, { "n", t.n }, { "queries", qt.table() }, { "root", root } };
}

inline rmdt rmdt_from_json( json const& j, std::string const& base_dir = "" )
{
  rmdt t;
  t.n = j.at( "n" ).get<int>();
  auto queries = detail::parse_query_table( j.at( "queries" ), t.n, base_dir );
  t.root = detail::rmdt_node_from_json( j.at( "root" ), queries );
  return t;
}

inline json nmdt_to_json( nmdt_m1 const& t )
{
  detail::query_table_builder qt( t.n );
  auto root = detail::nmdt1_node_to_json( t.root, qt );
  return { { "type", "nmdt1" }, { "n", t.n }, { "queries", qt.table() }, { "root", root } };
}

inline nmdt_m1 nmdt_from_json( json const& j, std::string const& base_dir = "" )
{
  nmdt_m1 t;
  t.n = j.at( "n" ).get<int>();
  auto queries = detail::parse_query_table( j.at( "queries" ), t.n, base_dir );
  t.root = detail::nmdt1_node_from_json( j.at( "root" ), queries );
  return t;
}

/* ---------------- file helpers ---------------- */

inline std::string read_file( std::string const& path )
{
  std::ifstream f( path );
  if ( !f )
    throw std::invalid_argument( "cannot open file: " + path );
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_file( std::string const& path, std::string const& content )
{
  std::ofstream f( path );
  if ( !f )
    throw std::invalid_argument( "cannot write file: " + path );
  f << content;
}

} // namespace monodec
