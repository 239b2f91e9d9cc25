#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emit.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "parser.hpp"
#include "segment.hpp"
#include "semantics.hpp"

namespace opp::cli
{

/// Process exit codes.
enum exit_code : int
{
  ok = 0,
  nothing_found = 1,
  parse_failure = 2,
  vocabulary_mismatch = 3,
  bad_shape = 4,
  verification_mismatch = 5
};

struct config
{
  std::string command;
  std::string first;
  std::string second;
  std::string corpus_path;
  std::optional<std::size_t> bound;
  std::optional<std::string> clauses;
  int q = 1;
  int r = 2;
  std::string map = "a-low";
  std::optional<int> magnitude;
  std::string format;
  std::string preset = "categorical";
};

namespace detail
{

inline std::string read_source( std::string const& path, std::istream& in )
{
  if ( path == "-" )
  {
    return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
  }
  std::ifstream file( path, std::ios::binary );
  if ( !file )
  {
    throw parse_error( 1, 1, "cannot open corpus file '" + path + "'" );
  }
  return { std::istreambuf_iterator<char>( file ), std::istreambuf_iterator<char>() };
}

inline std::string format_assignment( segment_assignment const& a )
{
  std::string out = "{";
  bool first = true;
  for ( auto const& e : a.entries() )
  {
    if ( !first )
    {
      out += ", ";
    }
    first = false;
    out += e.label + ":" + std::to_string( e.value );
  }
  return out + "}";
}

inline std::size_t bound_for( config const& cfg, vocabulary const& vocab )
{
  return cfg.bound ? *cfg.bound : default_bound( vocab );
}

/// Square: labels A, E, I, O with A/E universal and I/O existential.
/// Hexagon additionally U = A | E and Y = I & O, syntactically.
inline clause_system corpus_shape( corpus const& c )
{
  auto const* a = c.find( "A" );
  auto const* e = c.find( "E" );
  auto const* i = c.find( "I" );
  auto const* o = c.find( "O" );
  if ( !a || !e || !i || !o )
  {
    throw shape_error( "corpus needs labels A, E, I and O" );
  }
  if ( infer_role( *a ) != role::universal || infer_role( *e ) != role::universal ||
       infer_role( *i ) != role::existential || infer_role( *o ) != role::existential )
  {
    throw shape_error( "A and E must be universal, I and O existential statements" );
  }
  if ( c.size() == 4 )
  {
    return clause_system::square;
  }
  auto const* u = c.find( "U" );
  auto const* y = c.find( "Y" );
  if ( c.size() != 6 || !u || !y )
  {
    throw shape_error( "corpus is neither a square (A, E, I, O) nor a hexagon (A, E, I, O, U, Y)" );
  }
  if ( !( *u == sentence::disjoin( *a, *e ) ) )
  {
    throw shape_error( "U must be defined as A | E" );
  }
  if ( !( *y == sentence::conjoin( *i, *o ) ) )
  {
    throw shape_error( "Y must be defined as I & O" );
  }
  return clause_system::hexagon;
}

inline clause_system clause_system_from( std::string const& name )
{
  return name == "hexagon" ? clause_system::hexagon : clause_system::square;
}

inline int cmd_classify( config const& cfg, std::ostream& out )
{
  auto const& preset = find_preset( cfg.preset );
  auto const a = parse_sentence( cfg.first, preset );
  auto const b = parse_sentence( cfg.second, preset );
  auto const vocab = vocabulary::of( a );
  if ( !( vocab == vocabulary::of( b ) ) )
  {
    throw vocabulary_error( "the two sentences use different predicates" );
  }
  auto const r = classify( vocab, a, b, bound_for( cfg, vocab ) );
  out << describe( r, "first", "second" ) << "\n";
  return ok;
}

inline int cmd_graph( config const& cfg, std::istream& in, std::ostream& out )
{
  auto const c = parse_corpus( read_source( cfg.corpus_path, in ), find_preset( cfg.preset ) );
  if ( c.size() < 2 )
  {
    throw parse_error( 1, 1, "a graph needs at least two corpus entries" );
  }
  auto const g = build_graph( c, bound_for( cfg, c.vocab() ) );
  if ( cfg.format == "dot" )
  {
    out << to_dot( g );
  }
  else if ( cfg.format == "text" )
  {
    for ( auto const& e : g.edges() )
    {
      out << e.first << " " << e.second << " " << describe( e.rel, e.first, e.second ) << "\n";
    }
  }
  else
  {
    out << to_structured( g );
  }
  return ok;
}

inline int cmd_encode( config const& cfg, std::istream& in, std::ostream& out )
{
  auto const c = parse_corpus( read_source( cfg.corpus_path, in ), find_preset( cfg.preset ) );
  auto const shape = corpus_shape( c );
  auto const cs = cfg.clauses ? clause_system_from( *cfg.clauses ) : shape;
  if ( cs == clause_system::hexagon && shape != clause_system::hexagon )
  {
    throw shape_error( "hexagon clauses need a hexagon corpus" );
  }
  auto const map = cfg.map == "a-high" ? universal_map::a_high : universal_map::a_low;
  auto assignment = make_square_assignment( cfg.q, cfg.r, map );
  if ( shape == clause_system::hexagon )
  {
    assignment = extend_hexagon( assignment );
  }
  auto const semantic = build_graph( c, bound_for( cfg, c.vocab() ) );
  auto const report = verify_against( assignment, cs, semantic );

  if ( cfg.format == "structured" )
  {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["kind"] = "encoding";
    j["clauses"] = clause_system_name( cs );
    j["assignment"] = assignment_json( assignment );
    j["verification"] = report_json( report );
    out << j.dump( 2 ) << "\n";
  }
  else
  {
    out << "clauses: " << clause_system_name( cs ) << "\n";
    out << "assignment: " << format_assignment( assignment ) << "\n";
    out << render_segment( assignment );
    for ( auto const& m : report.mismatches )
    {
      out << "mismatch " << m.first << " " << m.second << ": decoded " << describe( m.decoded, m.first, m.second )
          << ", semantic " << describe( m.semantic, m.first, m.second ) << "\n";
    }
    out << "verification: " << ( report.matches() ? "matches" : "mismatch" ) << "\n";
  }
  return report.matches() ? ok : verification_mismatch;
}

inline int cmd_synthesize( config const& cfg, std::istream& in, std::ostream& out )
{
  auto const c = parse_corpus( read_source( cfg.corpus_path, in ), find_preset( cfg.preset ) );
  if ( c.size() < 2 )
  {
    throw parse_error( 1, 1, "synthesis needs at least two corpus entries" );
  }
  auto const roles = infer_roles( c );
  auto const hexagonal = std::any_of( roles.begin(), roles.end(), []( auto const& kv ) { return kv.second == role::disjunction_u; } );
  auto const cs = cfg.clauses ? clause_system_from( *cfg.clauses ) : ( hexagonal ? clause_system::hexagon : clause_system::square );
  auto const magnitude = cfg.magnitude ? *cfg.magnitude : static_cast<int>( c.size() );
  auto const target = build_graph( c, bound_for( cfg, c.vocab() ) );
  auto const found = synthesize( target, roles, cs, magnitude );

  if ( cfg.format == "structured" )
  {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["kind"] = "synthesis";
    j["clauses"] = clause_system_name( cs );
    j["magnitude"] = magnitude;
    auto list = nlohmann::ordered_json::array();
    for ( auto const& a : found )
    {
      list.push_back( assignment_json( a ) );
    }
    j["assignments"] = std::move( list );
    j["count"] = found.size();
    out << j.dump( 2 ) << "\n";
  }
  else
  {
    for ( auto const& a : found )
    {
      out << format_assignment( a ) << "\n";
    }
    out << "count: " << found.size() << "\n";
  }
  return found.empty() ? nothing_found : ok;
}

} // namespace detail

/// Runs the command line; returns the process exit code.
inline int run( int argc, char const* const* argv, std::istream& in, std::ostream& out, std::ostream& err )
{
  config cfg;
  CLI::App app{ "Classify oppositions by finite-model semantics and encode squares and hexagons on an integer line" };
  app.require_subcommand( 1 );
  app.add_option( "--preset", cfg.preset, "Quantifier keywords accepted besides forall/exists" )
      ->check( CLI::IsMember( { "categorical", "alethic", "deontic", "temporal" } ) );

  auto const add_bound = [&]( CLI::App* sub ) {
    sub->add_option( "--bound", cfg.bound, "Largest model domain size (default 2^predicates)" )->check( CLI::Range( 1, 64 ) );
  };
  auto const add_corpus = [&]( CLI::App* sub ) {
    sub->add_option( "corpus,--corpus", cfg.corpus_path, "Corpus file ('-' for stdin)" )->required();
  };
  auto const add_clauses = [&]( CLI::App* sub ) {
    sub->add_option( "--clauses", cfg.clauses, "Clause system" )->check( CLI::IsMember( { "square", "hexagon" } ) );
  };

  auto* classify_cmd = app.add_subcommand( "classify", "Classify the opposition between two sentences" );
  classify_cmd->add_option( "first", cfg.first, "First sentence" )->required();
  classify_cmd->add_option( "second", cfg.second, "Second sentence" )->required();
  add_bound( classify_cmd );

  auto* graph_cmd = app.add_subcommand( "graph", "Opposition graph of a corpus" );
  add_corpus( graph_cmd );
  add_bound( graph_cmd );
  graph_cmd->add_option( "--format", cfg.format, "Output format" )
      ->check( CLI::IsMember( { "structured", "dot", "text" } ) );

  auto* encode_cmd = app.add_subcommand( "encode", "Encode a square or hexagon corpus on a line segment and verify it" );
  add_corpus( encode_cmd );
  add_bound( encode_cmd );
  add_clauses( encode_cmd );
  encode_cmd->add_option( "--q", cfg.q, "Smaller universal magnitude" )->default_val( 1 );
  encode_cmd->add_option( "--r", cfg.r, "Larger universal magnitude" )->default_val( 2 );
  encode_cmd->add_option( "--map", cfg.map, "a-low: i(A)=q, a-high: i(A)=r" )
      ->check( CLI::IsMember( { "a-low", "a-high" } ) )
      ->default_val( "a-low" );
  encode_cmd->add_option( "--format", cfg.format, "Output format" )
      ->check( CLI::IsMember( { "text", "structured" } ) );

  auto* synth_cmd = app.add_subcommand( "synthesize", "Search every line-segment encoding of a corpus graph" );
  add_corpus( synth_cmd );
  add_bound( synth_cmd );
  add_clauses( synth_cmd );
  synth_cmd->add_option( "--magnitude", cfg.magnitude, "Largest magnitude tried (default: number of labels)" )
      ->check( CLI::Range( 1, 12 ) );
  synth_cmd->add_option( "--format", cfg.format, "Output format" )
      ->check( CLI::IsMember( { "text", "structured" } ) );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e, out, err );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e, out, err );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e, out, err );
    return parse_failure;
  }

  try
  {
    if ( cfg.format.empty() )
    {
      cfg.format = graph_cmd->parsed() ? "structured" : "text";
    }
    if ( classify_cmd->parsed() )
    {
      return detail::cmd_classify( cfg, out );
    }
    if ( graph_cmd->parsed() )
    {
      return detail::cmd_graph( cfg, in, out );
    }
    if ( encode_cmd->parsed() )
    {
      return detail::cmd_encode( cfg, in, out );
    }
    return detail::cmd_synthesize( cfg, in, out );
  }
  catch ( parse_error const& e )
  {
    err << "parse error: " << e.what() << "\n";
    return parse_failure;
  }
  catch ( vocabulary_error const& e )
  {
    err << "vocabulary mismatch: " << e.what() << "\n";
    return vocabulary_mismatch;
  }
  catch ( shape_error const& e )
  {
    err << "corpus shape: " << e.what() << "\n";
    return bad_shape;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  }
}

} // namespace opp::cli
