#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "relation.hpp"

namespace opp
{

/*! \brief Complete relation-labelled graph over an ordered set of labels.
 *
 * Every unordered pair of distinct nodes carries exactly one relation
 * (`unconnected` until set). Relations are stored relative to node order:
 * the relation of (node i, node j) with i < j.
 */
class opposition_graph
{
public:
  struct edge
  {
    std::string first;
    std::string second;
    opp::relation rel; ///< relative to (first, second)
  };

  explicit opposition_graph( std::vector<std::string> nodes )
    : _nodes( std::move( nodes ) ),
      _relations( _nodes.size() * ( _nodes.size() > 0 ? _nodes.size() - 1 : 0 ) / 2 )
  {
    std::unordered_set<std::string> seen;
    for ( auto const& n : _nodes )
    {
      if ( n.empty() )
      {
        throw label_error( "graph node labels must be nonempty" );
      }
      if ( !seen.insert( n ).second )
      {
        throw label_error( "duplicate graph node '" + n + "'" );
      }
    }
  }

  std::vector<std::string> const& nodes() const noexcept { return _nodes; }
  std::size_t size() const noexcept { return _nodes.size(); }
  std::size_t pair_count() const noexcept { return _relations.size(); }

  std::optional<std::size_t> index_of( std::string_view label ) const
  {
    auto const it = std::find( _nodes.begin(), _nodes.end(), label );
    if ( it == _nodes.end() )
    {
      return std::nullopt;
    }
    return static_cast<std::size_t>( it - _nodes.begin() );
  }

  bool contains( std::string_view label ) const { return index_of( label ).has_value(); }

  /// Relation of the ordered pair (node i, node j).
  opp::relation relation( std::size_t i, std::size_t j ) const
  {
    if ( i == j )
    {
      throw label_error( "no relation between a node and itself" );
    }
    return i < j ? _relations[slot( i, j )] : _relations[slot( j, i )].flipped();
  }

  opp::relation relation( std::string_view a, std::string_view b ) const
  {
    return relation( require( a ), require( b ) );
  }

  void set( std::size_t i, std::size_t j, opp::relation r )
  {
    if ( i == j )
    {
      throw label_error( "no relation between a node and itself" );
    }
    if ( i < j )
    {
      _relations[slot( i, j )] = r;
    }
    else
    {
      _relations[slot( j, i )] = r.flipped();
    }
  }

  void set( std::string_view a, std::string_view b, opp::relation r ) { set( require( a ), require( b ), r ); }

  /// All pairs in node order: (0,1), (0,2), .., (1,2), ..
  std::vector<edge> edges() const
  {
    std::vector<edge> out;
    out.reserve( _relations.size() );
    for ( std::size_t i = 0; i < _nodes.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < _nodes.size(); ++j )
      {
        out.push_back( { _nodes[i], _nodes[j], _relations[slot( i, j )] } );
      }
    }
    return out;
  }

  std::size_t count( relation_kind k ) const
  {
    return static_cast<std::size_t>(
        std::count_if( _relations.begin(), _relations.end(), [k]( auto const& r ) { return r.kind == k; } ) );
  }

  /// Subalternations as (superaltern, subaltern) label pairs, in pair order.
  std::vector<std::pair<std::string, std::string>> subalternations() const
  {
    std::vector<std::pair<std::string, std::string>> out;
    for ( auto const& e : edges() )
    {
      if ( e.rel.kind == relation_kind::subaltern )
      {
        if ( e.rel.dir == direction::first_to_second )
        {
          out.emplace_back( e.first, e.second );
        }
        else
        {
          out.emplace_back( e.second, e.first );
        }
      }
    }
    return out;
  }

private:
  std::size_t require( std::string_view label ) const
  {
    if ( auto i = index_of( label ) )
    {
      return *i;
    }
    throw label_error( "unknown label '" + std::string( label ) + "'" );
  }

  // index of pair (i, j), i < j, in row-major upper-triangular order
  std::size_t slot( std::size_t i, std::size_t j ) const
  {
    auto const n = _nodes.size();
    return i * ( 2 * n - i - 1 ) / 2 + ( j - i - 1 );
  }

  std::vector<std::string> _nodes;
  std::vector<opp::relation> _relations;
};

/// Same node set (order ignored) and the same relation, direction included,
/// on every pair.
inline bool graph_equal( opposition_graph const& g1, opposition_graph const& g2 )
{
  if ( g1.size() != g2.size() )
  {
    return false;
  }
  std::vector<std::size_t> map( g1.size() );
  for ( std::size_t i = 0; i < g1.size(); ++i )
  {
    auto const j = g2.index_of( g1.nodes()[i] );
    if ( !j )
    {
      return false;
    }
    map[i] = *j;
  }
  for ( std::size_t i = 0; i < g1.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < g1.size(); ++j )
    {
      if ( g1.relation( i, j ) != g2.relation( map[i], map[j] ) )
      {
        return false;
      }
    }
  }
  return true;
}

inline bool operator==( opposition_graph const& g1, opposition_graph const& g2 )
{
  return graph_equal( g1, g2 );
}

} // namespace opp
