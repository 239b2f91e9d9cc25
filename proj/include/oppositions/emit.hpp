#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "relation.hpp"
#include "segment.hpp"

namespace opp
{

/// Version of the structured document layout written by `to_structured`.
inline constexpr int schema_version = 1;

namespace detail
{

inline std::string dot_id( std::string_view s )
{
  std::string out = "\"";
  for ( auto c : s )
  {
    if ( c == '"' || c == '\\' )
    {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

inline relation_kind kind_from_name( std::string_view name )
{
  for ( auto k : { relation_kind::contradictory, relation_kind::contrary, relation_kind::subcontrary, relation_kind::subaltern,
                   relation_kind::equivalent, relation_kind::unconnected } )
  {
    if ( kind_name( k ) == name )
    {
      return k;
    }
  }
  throw error( "unknown relation tag '" + std::string( name ) + "'" );
}

inline nlohmann::ordered_json relation_json( std::string const& a, std::string const& b, relation const& r )
{
  nlohmann::ordered_json j;
  j["a"] = a;
  j["b"] = b;
  j["relation"] = kind_name( r.kind );
  if ( r.kind == relation_kind::subaltern )
  {
    auto const forward = r.dir == direction::first_to_second;
    j["from"] = forward ? a : b;
    j["to"] = forward ? b : a;
  }
  return j;
}

} // namespace detail

/*! \brief Graphviz rendering.
 *
 * One edge per pair. Contradiction dashed, contrariety solid, subcontrariety
 * dotted, all undirected; subalternation is the only arrowed edge, pointing
 * from superaltern to subaltern.
 */
inline std::string to_dot( opposition_graph const& g )
{
  std::string out = "digraph oppositions {\n";
  out += "  node [shape=plaintext];\n";
  for ( auto const& n : g.nodes() )
  {
    out += "  " + detail::dot_id( n ) + ";\n";
  }
  for ( auto const& e : g.edges() )
  {
    auto from = e.first;
    auto to = e.second;
    std::string attrs = "label=\"" + std::string( short_name( e.rel.kind ) ) + "\"";
    switch ( e.rel.kind )
    {
    case relation_kind::contradictory:
      attrs += ", style=dashed, dir=none";
      break;
    case relation_kind::contrary:
      attrs += ", style=solid, dir=none";
      break;
    case relation_kind::subcontrary:
      attrs += ", style=dotted, dir=none";
      break;
    case relation_kind::subaltern:
      attrs += ", style=solid, dir=forward";
      if ( e.rel.dir == direction::second_to_first )
      {
        std::swap( from, to );
      }
      break;
    case relation_kind::equivalent:
      attrs += ", style=bold, dir=none";
      break;
    case relation_kind::unconnected:
      attrs += ", style=invis, dir=none";
      break;
    }
    out += "  " + detail::dot_id( from ) + " -> " + detail::dot_id( to ) + " [" + attrs + "];\n";
  }
  out += "}\n";
  return out;
}

/*! \brief Structured documents (JSON), byte-stable for identical inputs.
 *
 * Graph:
 * \code
 * {"schema_version": 1, "kind": "graph", "nodes": ["A", ...],
 *  "pairs": [{"a": "A", "b": "I", "relation": "subaltern", "from": "A", "to": "I"}, ...]}
 * \endcode
 * Every unordered pair is listed once, unconnected ones included.
 */
inline nlohmann::ordered_json graph_json( opposition_graph const& g )
{
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["kind"] = "graph";
  j["nodes"] = g.nodes();
  auto pairs = nlohmann::ordered_json::array();
  for ( auto const& e : g.edges() )
  {
    pairs.push_back( detail::relation_json( e.first, e.second, e.rel ) );
  }
  j["pairs"] = std::move( pairs );
  return j;
}

/// {"schema_version": 1, "kind": "assignment", "entries": [{"label", "value", "role"}, ...]}
inline nlohmann::ordered_json assignment_json( segment_assignment const& a )
{
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["kind"] = "assignment";
  auto entries = nlohmann::ordered_json::array();
  for ( auto const& e : a.entries() )
  {
    nlohmann::ordered_json x;
    x["label"] = e.label;
    x["value"] = e.value;
    x["role"] = role_name( e.role );
    entries.push_back( std::move( x ) );
  }
  j["entries"] = std::move( entries );
  return j;
}

/// {"schema_version": 1, "kind": "verification", "matches": bool,
///  "mismatches": [{"a", "b", "decoded": {...}, "semantic": {...}}, ...]}
inline nlohmann::ordered_json report_json( verification_report const& r )
{
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["kind"] = "verification";
  j["matches"] = r.matches();
  auto list = nlohmann::ordered_json::array();
  for ( auto const& m : r.mismatches )
  {
    nlohmann::ordered_json x;
    x["a"] = m.first;
    x["b"] = m.second;
    x["decoded"] = detail::relation_json( m.first, m.second, m.decoded );
    x["semantic"] = detail::relation_json( m.first, m.second, m.semantic );
    list.push_back( std::move( x ) );
  }
  j["mismatches"] = std::move( list );
  return j;
}

inline std::string to_structured( opposition_graph const& g ) { return graph_json( g ).dump( 2 ) + "\n"; }
inline std::string to_structured( segment_assignment const& a ) { return assignment_json( a ).dump( 2 ) + "\n"; }
inline std::string to_structured( verification_report const& r ) { return report_json( r ).dump( 2 ) + "\n"; }

/// Reads a graph document written by `to_structured`.
inline opposition_graph graph_from_structured( std::string_view text )
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse( text );
  }
  catch ( nlohmann::json::exception const& ex )
  {
    throw error( std::string( "malformed graph document: " ) + ex.what() );
  }
  if ( j.value( "schema_version", 0 ) != schema_version || j.value( "kind", "" ) != "graph" )
  {
    throw error( "not a version 1 graph document" );
  }
  try
  {
    opposition_graph g( j.at( "nodes" ).get<std::vector<std::string>>() );
    for ( auto const& p : j.at( "pairs" ) )
    {
      auto const a = p.at( "a" ).get<std::string>();
      auto const b = p.at( "b" ).get<std::string>();
      relation r{ detail::kind_from_name( p.at( "relation" ).get<std::string>() ), direction::none };
      if ( r.kind == relation_kind::subaltern )
      {
        r.dir = p.at( "from" ).get<std::string>() == a ? direction::first_to_second : direction::second_to_first;
      }
      g.set( a, b, r );
    }
    return g;
  }
  catch ( nlohmann::json::exception const& ex )
  {
    throw error( std::string( "malformed graph document: " ) + ex.what() );
  }
}

/*! \brief ASCII number line from the smallest to the largest assigned value.
 *
 * Two lines: labels (and `0`) above, ticks below. Every integer in range
 * gets a column `width` characters apart, so a label's column is
 * proportional to its value. Assigned integers are ticked `|`, zero `+`,
 * unassigned integers `.`.
 */
inline std::string render_segment( segment_assignment const& a )
{
  auto const lo = std::min( a.min_value(), 0 );
  auto const hi = std::max( a.max_value(), 0 );
  std::size_t label_width = 1;
  for ( auto const& e : a.entries() )
  {
    label_width = std::max( label_width, e.label.size() );
  }
  auto const width = label_width + 2;
  auto const columns = static_cast<std::size_t>( hi - lo ) * width + label_width;

  std::string labels( columns, ' ' );
  std::string ticks( columns, ' ' );
  for ( int v = lo; v <= hi; ++v )
  {
    auto const col = static_cast<std::size_t>( v - lo ) * width;
    ticks[col] = v == 0 ? '+' : '.';
    if ( v < hi )
    {
      std::fill( ticks.begin() + col + 1, ticks.begin() + col + width, '-' );
    }
  }
  labels[static_cast<std::size_t>( -lo ) * width] = '0';
  for ( auto const& e : a.entries() )
  {
    auto const col = static_cast<std::size_t>( e.value - lo ) * width;
    ticks[col] = '|';
    labels.replace( col, e.label.size(), e.label );
  }
  auto const rtrim = []( std::string s ) {
    s.erase( s.find_last_not_of( ' ' ) + 1 );
    return s;
  };
  return rtrim( labels ) + "\n" + rtrim( ticks ) + "\n";
}

} // namespace opp
