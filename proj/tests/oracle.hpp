#pragma once

// Test-only brute-force oracles. Nothing here calls into the sentence,
// model or segment code paths the tests check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle
{

/// Categorical forms over one predicate, evaluated directly on a model
/// given as (domain size, extension bitmask).
enum class cat
{
  A,
  E,
  I,
  O,
  U,
  Y
};

inline bool truth( cat f, int n, std::uint32_t ext )
{
  auto const k = __builtin_popcount( ext );
  auto const all = k == n;
  auto const none = k == 0;
  switch ( f )
  {
  case cat::A:
    return all;
  case cat::E:
    return none;
  case cat::I:
    return !none;
  case cat::O:
    return !all;
  case cat::U:
    return all || none;
  case cat::Y:
    return !all && !none;
  }
  return false;
}

/// Relation name from the textbook definitions, "subaltern a->b" style
/// directions reported as "sub>" (first entails second) / "sub<".
inline std::string relation( cat a, cat b, int max_size )
{
  bool bt = false, bf = false, ab = true, ba = true;
  for ( int n = 1; n <= max_size; ++n )
  {
    for ( std::uint32_t ext = 0; ext < ( 1u << n ); ++ext )
    {
      auto const x = truth( a, n, ext );
      auto const y = truth( b, n, ext );
      bt |= x && y;
      bf |= !x && !y;
      ab &= !x || y;
      ba &= !y || x;
    }
  }
  if ( ab && ba )
    return "eq";
  if ( !bt && !bf )
    return "d";
  if ( !bt )
    return "c";
  if ( !bf )
    return "sc";
  if ( ab )
    return "sub>";
  if ( ba )
    return "sub<";
  return "u";
}

/// Square clauses with precedence, on bare integers.
inline std::string square_clause( int a, int b )
{
  if ( a + b == 0 )
    return "d";
  if ( a > 0 && b > 0 )
    return "c";
  if ( a < 0 && b < 0 )
    return "sc";
  return b < 0 ? "sub>" : "sub<";
}

using edge_map = std::map<std::pair<std::string, std::string>, std::string>;

/// Every injection of `labels` into `support` whose square-clause decoding
/// equals `expected` (keys with first < second in label order).
inline std::vector<std::vector<int>> brute_force_square_encodings( std::vector<std::string> const& labels,
                                                                   std::vector<int> support, edge_map const& expected )
{
  std::vector<std::vector<int>> out;
  std::sort( support.begin(), support.end() );
  do
  {
    bool ok = true;
    for ( std::size_t i = 0; i < labels.size() && ok; ++i )
    {
      for ( std::size_t j = i + 1; j < labels.size() && ok; ++j )
      {
        ok = square_clause( support[i], support[j] ) == expected.at( { labels[i], labels[j] } );
      }
    }
    if ( ok )
    {
      out.emplace_back( support.begin(), support.begin() + labels.size() );
    }
  } while ( std::next_permutation( support.begin(), support.end() ) );
  return out;
}

} // namespace oracle
