#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <oppositions/semantics.hpp>

#include "generators.hpp"
#include "oracle.hpp"

using namespace opp;

namespace
{

sentence S( char const* text ) { return parse_sentence( text ); }

corpus square_corpus() { return parse_corpus( "A: A[P]\nE: E[P]\nI: I[P]\nO: O[P]\n" ); }
corpus hexagon_corpus() { return parse_corpus( "A: A[P]\nE: E[P]\nI: I[P]\nO: O[P]\nU: U[P]\nY: Y[P]\n" ); }

std::string code( relation const& r )
{
  switch ( r.kind )
  {
  case relation_kind::contradictory:
    return "d";
  case relation_kind::contrary:
    return "c";
  case relation_kind::subcontrary:
    return "sc";
  case relation_kind::equivalent:
    return "eq";
  case relation_kind::unconnected:
    return "u";
  case relation_kind::subaltern:
    return r.dir == direction::first_to_second ? "sub>" : "sub<";
  }
  return "?";
}

} // namespace

TEST_CASE( "enumerate_models counts" )
{
  CHECK( enumerate_models( vocabulary{ "P" }, 1 ).size() == 2 );
  // one predicate on a 2-element domain has 4 extensions: 2 + 4
  CHECK( enumerate_models( vocabulary{ "P" }, 2 ).size() == 6 );
  CHECK( enumerate_models( vocabulary{ "P" }, 3 ).size() == 14 );
  CHECK( enumerate_models( vocabulary{ "P", "Q" }, 1 ).size() == 4 );
  CHECK( enumerate_models( vocabulary{ "P", "Q" }, 2 ).size() == 4 + 16 );
  CHECK( count_models( vocabulary{ "P", "Q", "R" }, 8 ) == 8 + 64 + 512 + 4096 + 32768 + 262144 + 2097152 + 16777216 );
  CHECK_THROWS_AS( enumerate_models( vocabulary{ "P" }, 0 ), std::invalid_argument );
  CHECK_THROWS_AS( count_models( vocabulary{ "P", "Q", "R", "S" }, 16 ), std::length_error );
}

TEST_CASE( "enumeration order is by size then extension tuple" )
{
  auto const models = enumerate_models( vocabulary{ "P", "Q" }, 2 );
  CHECK( models[0].domain_size() == 1 );
  CHECK( models[0].extensions() == std::vector<std::uint64_t>{ 0, 0 } );
  CHECK( models[1].extensions() == std::vector<std::uint64_t>{ 0, 1 } );
  CHECK( models[2].extensions() == std::vector<std::uint64_t>{ 1, 0 } );
  CHECK( models[4].domain_size() == 2 );
  CHECK( models[5].extensions() == std::vector<std::uint64_t>{ 0, 1 } );
  CHECK( models[8].extensions() == std::vector<std::uint64_t>{ 1, 0 } );
  CHECK( models.back().extensions() == std::vector<std::uint64_t>{ 3, 3 } );
}

TEST_CASE( "eval" )
{
  vocabulary const v{ "P" };
  model const full( v, 2, { 0b11 } );
  model const half( v, 2, { 0b01 } );
  model const empty( v, 1, { 0 } );

  CHECK( eval( full, S( "forall x. P(x)" ) ) );
  CHECK_FALSE( eval( half, S( "forall x. P(x)" ) ) );
  CHECK( eval( half, S( "exists x. P(x)" ) ) );
  CHECK( eval( empty, S( "exists x. ~P(x)" ) ) );
  CHECK( eval( half, S( "exists x. P(x) -> P(x)" ) ) );
  CHECK( eval( half, S( "A[P] -> E[P]" ) ) );
  CHECK_FALSE( eval( half, S( "U[P]" ) ) );
  CHECK( eval( half, S( "Y[P]" ) ) );

  CHECK_THROWS_AS( eval( full, S( "A[Q]" ) ), vocabulary_error );
  CHECK_THROWS_AS( model( v, 1, { 0b10 } ), std::invalid_argument );
  CHECK_THROWS_AS( model( v, 0, { 0 } ), std::invalid_argument );
  CHECK( full.holds( "P", 1 ) );
  CHECK_FALSE( half.holds( "P", 1 ) );
}

TEST_CASE( "eval of monadic matrices element-wise" )
{
  vocabulary const v{ "P", "Q" };
  // element 0: P only, element 1: Q only, element 2: both
  model const m( v, 3, { 0b101, 0b110 } );
  CHECK( eval( m, S( "forall x. P(x) | Q(x)" ) ) );
  CHECK_FALSE( eval( m, S( "forall x. P(x) -> Q(x)" ) ) );
  CHECK( eval( m, S( "exists x. P(x) & Q(x)" ) ) );
  CHECK_FALSE( eval( m, S( "exists x. ~P(x) & ~Q(x)" ) ) );
}

TEST_CASE( "classify the square" )
{
  CHECK( classify( S( "A[P]" ), S( "O[P]" ), 2 ) == relation::contradictory() );
  CHECK( classify( S( "A[P]" ), S( "E[P]" ), 2 ) == relation::contrary() );
  CHECK( classify( S( "I[P]" ), S( "O[P]" ), 2 ) == relation::subcontrary() );
  CHECK( classify( S( "A[P]" ), S( "I[P]" ), 2 ) == relation::subaltern_forward() );
  CHECK( classify( S( "I[P]" ), S( "A[P]" ), 2 ) == relation::subaltern_backward() );
  CHECK( classify( S( "E[P]" ), S( "E[P]" ), 2 ) == relation::equivalent() );
}

TEST_CASE( "classify the hexagon edges" )
{
  CHECK( classify( S( "A[P]" ), S( "U[P]" ), 3 ) == relation::subaltern_forward() );
  CHECK( classify( S( "Y[P]" ), S( "I[P]" ), 3 ) == relation::subaltern_forward() );
  CHECK( classify( S( "U[P]" ), S( "Y[P]" ), 3 ) == relation::contradictory() );
  CHECK( classify( S( "U[P]" ), S( "I[P]" ), 3 ) == relation::subcontrary() );
  CHECK( classify( S( "A[P]" ), S( "Y[P]" ), 3 ) == relation::contrary() );
}

TEST_CASE( "classify agrees with the brute-force oracle on all categorical pairs" )
{
  using oracle::cat;
  std::vector<std::pair<cat, char const*>> const forms{ { cat::A, "A[P]" }, { cat::E, "E[P]" }, { cat::I, "I[P]" },
                                                        { cat::O, "O[P]" }, { cat::U, "U[P]" }, { cat::Y, "Y[P]" } };
  for ( int bound = 1; bound <= 4; ++bound )
  {
    for ( auto const& [fa, ta] : forms )
    {
      for ( auto const& [fb, tb] : forms )
      {
        INFO( ta << " vs " << tb << " at bound " << bound );
        CHECK( code( classify( S( ta ), S( tb ), bound ) ) == oracle::relation( fa, fb, bound ) );
      }
    }
  }
}

TEST_CASE( "oracle values for the hexagon are frozen" )
{
  using oracle::cat;
  // computed once with oracle::relation and pinned
  CHECK( oracle::relation( cat::A, cat::U, 3 ) == "sub>" );
  CHECK( oracle::relation( cat::Y, cat::I, 3 ) == "sub>" );
  CHECK( oracle::relation( cat::U, cat::Y, 3 ) == "d" );
  CHECK( oracle::relation( cat::U, cat::I, 3 ) == "sc" );
  // U is valid on one-element domains, so nothing is both false there
  CHECK( oracle::relation( cat::A, cat::U, 1 ) == "sc" );
}

TEST_CASE( "classify requires a shared vocabulary" )
{
  CHECK_THROWS_AS( classify( S( "A[P]" ), S( "A[Q]" ), 2 ), vocabulary_error );
  CHECK_THROWS_AS( classify( vocabulary{ "P" }, S( "A[P]" ), S( "A[Q]" ), 2 ), vocabulary_error );
  CHECK( classify( vocabulary{ "P", "Q" }, S( "A[P]" ), S( "A[Q]" ), 4 ).kind == relation_kind::unconnected );
}

TEST_CASE( "degenerate pairs" )
{
  auto const bottom = S( "A[P] & E[P]" );
  auto const top = S( "I[P] | O[P]" );
  CHECK( classify( bottom, bottom, 2 ) == relation::equivalent() );
  CHECK( classify( top, S( "exists x. P(x) | ~P(x)" ), 2 ) == relation::equivalent() );
  CHECK( classify( bottom, top, 2 ) == relation::contradictory() );
  CHECK( classify( bottom, S( "A[P]" ), 2 ) == relation::contrary() );
  CHECK( classify( top, S( "A[P]" ), 2 ) == relation::subcontrary() );
  // a and a-or-not-a: entailment holds but joint falsity is impossible
  CHECK( classify( S( "A[P]" ), S( "A[P] | ~A[P]" ), 2 ) == relation::subcontrary() );
}

TEST_CASE( "default_bound" )
{
  CHECK( default_bound( vocabulary{ "P" } ) == 2 );
  CHECK( default_bound( vocabulary{ "P", "Q" } ) == 4 );
  CHECK( default_bound( vocabulary{ "P", "Q", "R" } ) == 8 );
}

TEST_CASE( "build_graph" )
{
  SECTION( "square" )
  {
    auto const g = build_graph( square_corpus(), 2 );
    CHECK( g.count( relation_kind::contradictory ) == 2 );
    CHECK( g.count( relation_kind::contrary ) == 1 );
    CHECK( g.count( relation_kind::subcontrary ) == 1 );
    CHECK( g.count( relation_kind::subaltern ) == 2 );
    CHECK( g.relation( "A", "O" ) == relation::contradictory() );
    CHECK( g.relation( "E", "I" ) == relation::contradictory() );
    CHECK( g.relation( "E", "O" ) == relation::subaltern_forward() );
  }

  SECTION( "hexagon" )
  {
    auto const g = build_graph( hexagon_corpus(), 3 );
    CHECK( g.count( relation_kind::contradictory ) == 3 );
    CHECK( g.count( relation_kind::contrary ) == 3 );
    CHECK( g.count( relation_kind::subcontrary ) == 3 );
    CHECK( g.count( relation_kind::subaltern ) == 6 );
    for ( auto const& [a, b] : std::vector<std::pair<char const*, char const*>>{ { "A", "E" }, { "A", "Y" }, { "E", "Y" } } )
    {
      CHECK( g.relation( a, b ) == relation::contrary() );
    }
    for ( auto const& [a, b] : std::vector<std::pair<char const*, char const*>>{ { "I", "O" }, { "I", "U" }, { "O", "U" } } )
    {
      CHECK( g.relation( a, b ) == relation::subcontrary() );
    }
    using edge = std::pair<std::string, std::string>;
    auto subs = g.subalternations();
    std::sort( subs.begin(), subs.end() );
    CHECK( subs == std::vector<edge>{ { "A", "I" }, { "A", "U" }, { "E", "O" }, { "E", "U" }, { "Y", "I" }, { "Y", "O" } } );
  }

  SECTION( "copy of a sentence" )
  {
    auto const g = build_graph( parse_corpus( "A: A[P]\nA-copy: forall x. P(x)\n" ), 2 );
    CHECK( g.relation( "A", "A-copy" ) == relation::equivalent() );
  }

  SECTION( "needs two entries" )
  {
    CHECK_THROWS_AS( build_graph( parse_corpus( "A: A[P]\n" ), 2 ), std::invalid_argument );
  }
}

TEST_CASE( "build_graph agrees with classify pair by pair" )
{
  auto const c = parse_corpus( "a: forall x. P(x) -> Q(x)\nb: exists x. P(x) & ~Q(x)\nc: exists x. Q(x)\nd: A[P]\n" );
  auto const g = build_graph( c, 4 );
  for ( auto const& e : g.edges() )
  {
    CHECK( e.rel == classify( c.vocab(), *c.find( e.first ), *c.find( e.second ), 4 ) );
  }
  CHECK( g.relation( "a", "b" ) == relation::contradictory() );
}

/* properties over random sentence pairs */

namespace
{

struct random_pairs
{
  std::mt19937 rng{ 7 };
  std::vector<std::string> preds{ "P", "Q" };
  vocabulary vocab{ "P", "Q" };

  sentence next() { return gen::random_sentence( rng, preds, 2, 2 ); }
};

} // namespace

TEST_CASE( "classification properties on random pairs" )
{
  random_pairs r;
  for ( int n = 0; n < 300; ++n )
  {
    auto const a = r.next();
    auto const b = r.next();
    INFO( print_sentence( a ) << "  vs  " << print_sentence( b ) );
    auto const ab = classify( r.vocab, a, b, 4 );

    // symmetry
    CHECK( classify( r.vocab, b, a, 4 ) == ab.flipped() );

    // contradiction law
    CHECK( ( ab == relation::contradictory() ) == ( classify( r.vocab, a, sentence::negate( b ), 4 ) == relation::equivalent() ) );

    // exactly one tag condition holds once equivalence is set aside
    auto const ev = gather_evidence( r.vocab, a, b, 4 );
    bool const equivalent = ev.first_entails_second && ev.second_entails_first;
    int holding = 0;
    holding += !ev.both_true && !ev.both_false;
    holding += !ev.both_true && ev.both_false;
    holding += ev.both_true && !ev.both_false;
    holding += ev.first_entails_second && !ev.second_entails_first && ev.both_true && ev.both_false;
    holding += ev.second_entails_first && !ev.first_entails_second && ev.both_true && ev.both_false;
    holding += !( ev.first_entails_second || ev.second_entails_first ) && ev.both_true && ev.both_false;
    if ( equivalent )
    {
      CHECK( ab == relation::equivalent() );
    }
    else
    {
      CHECK( holding == 1 );
    }
  }
}

TEST_CASE( "evidence is monotone in the bound" )
{
  random_pairs r;
  for ( int n = 0; n < 100; ++n )
  {
    auto const a = r.next();
    auto const b = r.next();
    auto prev = gather_evidence( r.vocab, a, b, 1 );
    for ( std::size_t bound = 2; bound <= 5; ++bound )
    {
      auto const ev = gather_evidence( r.vocab, a, b, bound );
      CHECK( ( !prev.both_true || ev.both_true ) );
      CHECK( ( !prev.both_false || ev.both_false ) );
      CHECK( ( prev.first_entails_second || !ev.first_entails_second ) );
      CHECK( ( prev.second_entails_first || !ev.second_entails_first ) );
      prev = ev;
    }
  }
}

TEST_CASE( "representation invariance" )
{
  std::vector<representation> const reps{ representation::mixed, representation::universal_only, representation::existential_only };
  for ( auto f : { form::A, form::E, form::I, form::O, form::U, form::Y } )
  {
    for ( auto r1 : reps )
    {
      for ( auto r2 : reps )
      {
        CHECK( classify( make_categorical( f, "P", r1 ), make_categorical( f, "P", r2 ), 2 ) == relation::equivalent() );
      }
    }
  }
}

TEST_CASE( "oracle graphs are stable in the bound" )
{
  auto const sq = build_graph( square_corpus(), 2 );
  CHECK( graph_equal( sq, build_graph( square_corpus(), 3 ) ) );
  CHECK( graph_equal( sq, build_graph( square_corpus(), 4 ) ) );
  auto const hex = build_graph( hexagon_corpus(), 3 );
  CHECK( graph_equal( hex, build_graph( hexagon_corpus(), 2 ) ) );
  CHECK( graph_equal( hex, build_graph( hexagon_corpus(), 4 ) ) );
}

TEST_CASE( "decorated corpora have the square's shape" )
{
  auto const alethic = parse_corpus( "N: necessarily x. Rain(x)\nI: necessarily x. ~Rain(x)\n"
                                     "P: possibly x. Rain(x)\nC: possibly x. ~Rain(x)\n",
                                     find_preset( "alethic" ) );
  auto const g = build_graph( alethic, default_bound( alethic.vocab() ) );
  CHECK( g.relation( "N", "C" ) == relation::contradictory() );
  CHECK( g.relation( "N", "I" ) == relation::contrary() );
  CHECK( g.relation( "P", "C" ) == relation::subcontrary() );
  CHECK( g.relation( "N", "P" ) == relation::subaltern_forward() );
}
