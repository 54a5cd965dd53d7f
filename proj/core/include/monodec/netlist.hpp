#pragma once

#include "circuit.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>

namespace monodec
{

/*
 * Line-based netlist format:
 *
 *   INPUTS n
 *   g<id>=AND(a,b,...) | OR(...) | NOT(a) | TH<k>(a,...) | CONST0 | CONST1
 *   OUTPUTS g<id>[,g<id>...]
 *
 * Operands are x<i> (1-based input) or previously defined g<id>.
 * Whitespace-insensitive; ids are positive integers; redefinition and
 * forward references are rejected.
 */

namespace detail
{

inline std::string strip_ws( std::string const& s )
{
  std::string r;
  for ( char ch : s )
    if ( !std::isspace( static_cast<unsigned char>( ch ) ) )
      r += ch;
  return r;
}

} // namespace detail

inline circuit parse_netlist( std::string const& text )
{
  std::istringstream in( text );
  std::string line;
  circuit c;
  std::map<long, int> id_to_gate;
  bool have_inputs = false, have_outputs = false;

  auto parse_operand = [&]( std::string const& tok ) -> int {
    if ( tok.empty() )
      throw std::invalid_argument( "netlist: empty operand" );
    if ( tok[0] == 'x' )
    {
      long i = std::stol( tok.substr( 1 ) );
      if ( i < 1 || i > c.num_inputs() )
        throw std::invalid_argument( "netlist: input operand out of range: " + tok );
      return c.input_gate( static_cast<int>( i ) );
    }
    if ( tok[0] == 'g' )
    {
      long id = std::stol( tok.substr( 1 ) );
      auto it = id_to_gate.find( id );
      if ( it == id_to_gate.end() )
        throw std::invalid_argument( "netlist: unknown or forward gate reference: " + tok );
      return it->second;
    }
    throw std::invalid_argument( "netlist: bad operand: " + tok );
  };

  auto split_commas = [&]( std::string const& s ) {
    std::vector<std::string> toks;
    std::string cur;
    for ( char ch : s )
    {
      if ( ch == ',' )
      {
        toks.push_back( cur );
        cur.clear();
      }
      else
        cur += ch;
    }
    if ( !cur.empty() || !toks.empty() )
      toks.push_back( cur );
    return toks;
  };

  while ( std::getline( in, line ) )
  {
    auto s = detail::strip_ws( line );
    if ( s.empty() || s[0] == '#' )
      continue;
    if ( s.rfind( "INPUTS", 0 ) == 0 )
    {
      if ( have_inputs )
        throw std::invalid_argument( "netlist: duplicate INPUTS line" );
      c = circuit( static_cast<int>( std::stol( s.substr( 6 ) ) ) );
      have_inputs = true;
      continue;
    }
    if ( s.rfind( "OUTPUTS", 0 ) == 0 )
    {
      std::vector<int> outs;
      for ( auto const& tok : split_commas( s.substr( 7 ) ) )
        outs.push_back( parse_operand( tok ) );
      c.set_outputs( outs );
      have_outputs = true;
      continue;
    }
    if ( !have_inputs )
      throw std::invalid_argument( "netlist: gate line before INPUTS" );

    auto eq = s.find( '=' );
    if ( eq == std::string::npos || s[0] != 'g' )
      throw std::invalid_argument( "netlist: bad line: " + line );
    long id = std::stol( s.substr( 1, eq - 1 ) );
    if ( id <= 0 )
      throw std::invalid_argument( "netlist: gate ids must be positive" );
    if ( id_to_gate.count( id ) )
      throw std::invalid_argument( "netlist: redefinition of g" + std::to_string( id ) );
    std::string rhs = s.substr( eq + 1 );

    int gi;
    if ( rhs == "CONST0" )
      gi = c.add_const( false );
    else if ( rhs == "CONST1" )
      gi = c.add_const( true );
    else
    {
      auto open = rhs.find( '(' );
      if ( open == std::string::npos || rhs.back() != ')' )
        throw std::invalid_argument( "netlist: bad gate expression: " + rhs );
      std::string op = rhs.substr( 0, open );
      std::vector<int> fanins;
      for ( auto const& tok : split_commas( rhs.substr( open + 1, rhs.size() - open - 2 ) ) )
        fanins.push_back( parse_operand( tok ) );
      if ( op == "AND" )
        gi = c.add_and( fanins );
      else if ( op == "OR" )
        gi = c.add_or( fanins );
      else if ( op == "NOT" )
      {
        if ( fanins.size() != 1 )
          throw std::invalid_argument( "netlist: NOT takes exactly one operand" );
        gi = c.add_not( fanins[0] );
      }
      else if ( op.rfind( "TH", 0 ) == 0 )
        gi = c.add_th( static_cast<int>( std::stol( op.substr( 2 ) ) ), fanins );
      else
        throw std::invalid_argument( "netlist: unknown gate kind: " + op );
    }
    id_to_gate[id] = gi;
  }
  if ( !have_inputs )
    throw std::invalid_argument( "netlist: missing INPUTS line" );
  if ( !have_outputs )
    throw std::invalid_argument( "netlist: missing OUTPUTS line" );
  return c;
}

inline std::string emit_netlist( circuit const& c )
{
  std::ostringstream out;
  out << "INPUTS " << c.num_inputs() << "\n";
  auto operand = [&]( int gi ) -> std::string {
    auto const& g = c.gates()[gi];
    if ( g.kind == gate_kind::input )
      return "x" + std::to_string( g.param );
    return "g" + std::to_string( gi - c.num_inputs() + 1 );
  };
  for ( size_t gi = c.num_inputs(); gi < c.gates().size(); ++gi )
  {
    auto const& g = c.gates()[gi];
    out << "g" << ( gi - c.num_inputs() + 1 ) << "=";
    switch ( g.kind )
    {
    case gate_kind::constant:
      out << ( g.param ? "CONST1" : "CONST0" );
      break;
    case gate_kind::and_gate:
    case gate_kind::or_gate:
    case gate_kind::not_gate:
    case gate_kind::th_gate:
    {
      if ( g.kind == gate_kind::and_gate )
        out << "AND";
      else if ( g.kind == gate_kind::or_gate )
        out << "OR";
      else if ( g.kind == gate_kind::not_gate )
        out << "NOT";
      else
        out << "TH" << g.param;
      out << "(";
      for ( size_t i = 0; i < g.fanins.size(); ++i )
        out << ( i ? "," : "" ) << operand( g.fanins[i] );
      out << ")";
      break;
    }
    case gate_kind::input:
      throw std::logic_error( "emit_netlist: input gate out of place" );
    }
    out << "\n";
  }
  out << "OUTPUTS ";
  for ( size_t i = 0; i < c.outputs().size(); ++i )
    out << ( i ? "," : "" ) << operand( c.outputs()[i] );
  out << "\n";
  return out.str();
}

} // namespace monodec
