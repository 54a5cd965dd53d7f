#pragma once

#include "circuit.hpp"
#include "truth_table.hpp"

#include <memory>
#include <vector>

namespace monodec
{

/*
 * Reference to a monotone function used as a decision-list/tree query.
 * Either an inline truth table, a conjunction or disjunction of other
 * queries, or an output of a circuit. Empty conjunction is constant-1,
 * empty disjunction constant-0. Monotonicity is a semantic property of
 * the referenced function, checked by materializing at desk scale.
 */
class query
{
public:
  enum class kind
  {
    table,
    conj,
    disj,
    circ
  };

  query() : kind_( kind::table ), table_( truth_table( 0 ) ) {}

  static query from_table( truth_table t )
  {
    query q;
    q.kind_ = kind::table;
    q.table_ = std::move( t );
    return q;
  }

  static query conjunction( std::vector<query> children )
  {
    query q;
    q.kind_ = kind::conj;
    q.children_ = std::move( children );
    return q;
  }

  static query disjunction( std::vector<query> children )
  {
    query q;
    q.kind_ = kind::disj;
    q.children_ = std::move( children );
    return q;
  }

  static query from_circuit( std::shared_ptr<const circuit> c, size_t output = 0 )
  {
    if ( !c || output >= c->outputs().size() )
      throw std::invalid_argument( "query: bad circuit handle" );
    query q;
    q.kind_ = kind::circ;
    q.circ_ = std::move( c );
    q.output_ = output;
    return q;
  }

  kind node_kind() const { return kind_; }
  truth_table const& table() const { return table_; }
  std::vector<query> const& children() const { return children_; }
  std::shared_ptr<const circuit> const& circuit_handle() const { return circ_; }
  size_t circuit_output() const { return output_; }

  bool eval( uint64_t x ) const
  {
    switch ( kind_ )
    {
    case kind::table:
      return table_.get_bit( x );
    case kind::conj:
    {
      for ( auto const& c : children_ )
        if ( !c.eval( x ) )
          return false;
      return true;
    }
    case kind::disj:
    {
      for ( auto const& c : children_ )
        if ( c.eval( x ) )
          return true;
      return false;
    }
    case kind::circ:
      return circ_->eval( x )[output_];
    }
    return false;
  }

  truth_table materialize( int n ) const
  {
    truth_table t( n );
    for ( uint64_t x = 0; x < t.num_bits(); ++x )
      t.set_bit( x, eval( x ) );
    return t;
  }

private:
  kind kind_;
  truth_table table_;
  std::vector<query> children_;
  std::shared_ptr<const circuit> circ_;
  size_t output_ = 0;
};

inline bool is_monotone_query( query const& q, int n )
{
  return is_monotone( q.materialize( n ) );
}

} // namespace monodec
