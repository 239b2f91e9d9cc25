#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "formula.hpp"
#include "graph.hpp"
#include "parser.hpp"
#include "relation.hpp"

namespace opp
{

/// Membership of an assigned integer in the positive or negative nonzero integers.
enum class polarity : std::uint8_t
{
  positive,
  negative
};

/// What kind of statement a label carries; fixes the sign of its integer.
enum class role : std::uint8_t
{
  universal,
  existential,
  disjunction_u,
  conjunction_y
};

inline polarity polarity_of( int value )
{
  if ( value == 0 )
  {
    throw assignment_error( "zero has no polarity" );
  }
  return value > 0 ? polarity::positive : polarity::negative;
}

/// Universal statements and the disjunction sit on the positive side.
inline constexpr polarity required_polarity( role r )
{
  return r == role::universal || r == role::disjunction_u ? polarity::positive : polarity::negative;
}

inline constexpr std::string_view role_name( role r )
{
  switch ( r )
  {
  case role::universal:
    return "universal";
  case role::existential:
    return "existential";
  case role::disjunction_u:
    return "disjunction";
  case role::conjunction_y:
    return "conjunction";
  }
  return "universal";
}

enum class clause_system : std::uint8_t
{
  square,
  hexagon
};

inline constexpr std::string_view clause_system_name( clause_system cs )
{
  return cs == clause_system::square ? "square" : "hexagon";
}

struct segment_entry
{
  std::string label;
  int value;
  opp::role role;

  bool operator==( segment_entry const& ) const = default;
};

/// Values of the disjunction (positive) and the conjunction (negative).
struct distinct_objects
{
  int positive;
  int negative;
};

namespace detail
{

/// Empty when the entries form a valid assignment, the reason otherwise.
inline std::optional<std::string> check_assignment( std::vector<segment_entry> const& entries )
{
  if ( entries.empty() )
  {
    return "an assignment needs at least one label";
  }
  std::unordered_set<std::string> labels;
  std::unordered_set<int> values;
  for ( auto const& e : entries )
  {
    if ( e.label.empty() )
    {
      return "empty label";
    }
    if ( !labels.insert( e.label ).second )
    {
      return "duplicate label '" + e.label + "'";
    }
    if ( e.value == 0 )
    {
      return "label '" + e.label + "' is assigned zero";
    }
    if ( !values.insert( e.value ).second )
    {
      return "value " + std::to_string( e.value ) + " is assigned twice";
    }
    if ( polarity_of( e.value ) != required_polarity( e.role ) )
    {
      return "label '" + e.label + "' has role " + std::string( role_name( e.role ) ) + " but value " + std::to_string( e.value );
    }
  }
  for ( auto v : values )
  {
    if ( !values.count( -v ) )
    {
      return "support is not symmetric: " + std::to_string( v ) + " has no mirror";
    }
  }

  std::size_t universals = 0, existentials = 0, disjunctions = 0, conjunctions = 0;
  int universal_sum = 0, existential_sum = 0, u_value = 0, y_value = 0;
  for ( auto const& e : entries )
  {
    switch ( e.role )
    {
    case role::universal:
      ++universals;
      universal_sum += e.value;
      break;
    case role::existential:
      ++existentials;
      existential_sum += e.value;
      break;
    case role::disjunction_u:
      ++disjunctions;
      u_value = e.value;
      break;
    case role::conjunction_y:
      ++conjunctions;
      y_value = e.value;
      break;
    }
  }
  if ( disjunctions + conjunctions > 0 )
  {
    if ( disjunctions != 1 || conjunctions != 1 || universals != 2 || existentials != 2 )
    {
      return "a hexagon assignment needs two universal, two existential, one disjunction and one conjunction label";
    }
    if ( u_value != universal_sum )
    {
      return "the disjunction must carry the sum of the universal values";
    }
    if ( y_value != existential_sum )
    {
      return "the conjunction must carry the sum of the existential values";
    }
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Injective map from labels to nonzero integers on a symmetric support.
 *
 * Invariants, checked on construction:
 *  - no label maps to zero and no two labels share a value;
 *  - for every assigned j, -j is assigned too;
 *  - universal and disjunction labels are positive, existential and
 *    conjunction labels negative;
 *  - when a disjunction or conjunction label is present the assignment is a
 *    full hexagon and those two carry the sums of the universal and the
 *    existential values respectively.
 */
class segment_assignment
{
public:
  explicit segment_assignment( std::vector<segment_entry> entries )
    : _entries( std::move( entries ) )
  {
    if ( auto why = detail::check_assignment( _entries ) )
    {
      throw assignment_error( *why );
    }
  }

  std::vector<segment_entry> const& entries() const noexcept { return _entries; }
  std::size_t size() const noexcept { return _entries.size(); }

  std::vector<std::string> labels() const
  {
    std::vector<std::string> out;
    for ( auto const& e : _entries )
    {
      out.push_back( e.label );
    }
    return out;
  }

  bool contains( std::string_view label ) const { return find( label ) != nullptr; }

  int value( std::string_view label ) const { return require( label ).value; }
  opp::role role_of( std::string_view label ) const { return require( label ).role; }

  int min_value() const
  {
    return std::min_element( _entries.begin(), _entries.end(), []( auto const& a, auto const& b ) { return a.value < b.value; } )->value;
  }

  int max_value() const
  {
    return std::max_element( _entries.begin(), _entries.end(), []( auto const& a, auto const& b ) { return a.value < b.value; } )->value;
  }

  std::size_t count( opp::role r ) const
  {
    return static_cast<std::size_t>( std::count_if( _entries.begin(), _entries.end(), [r]( auto const& e ) { return e.role == r; } ) );
  }

  /// Two universal and two existential labels, nothing else.
  bool is_square() const
  {
    return size() == 4 && count( role::universal ) == 2 && count( role::existential ) == 2;
  }

  /// A square plus the disjunction and conjunction labels.
  bool is_hexagon() const { return count( role::disjunction_u ) == 1; }

  std::optional<opp::distinct_objects> distinct_objects() const
  {
    if ( !is_hexagon() )
    {
      return std::nullopt;
    }
    opp::distinct_objects d{ 0, 0 };
    for ( auto const& e : _entries )
    {
      if ( e.role == role::disjunction_u )
      {
        d.positive = e.value;
      }
      else if ( e.role == role::conjunction_y )
      {
        d.negative = e.value;
      }
    }
    return d;
  }

  /// Every value multiplied by k > 0.
  segment_assignment scaled( int k ) const
  {
    if ( k <= 0 )
    {
      throw assignment_error( "scale factor must be positive" );
    }
    auto entries = _entries;
    for ( auto& e : entries )
    {
      e.value *= k;
    }
    return segment_assignment( std::move( entries ) );
  }

  bool operator==( segment_assignment const& ) const = default;

private:
  segment_entry const* find( std::string_view label ) const
  {
    for ( auto const& e : _entries )
    {
      if ( e.label == label )
      {
        return &e;
      }
    }
    return nullptr;
  }

  segment_entry const& require( std::string_view label ) const
  {
    if ( auto const* e = find( label ) )
    {
      return *e;
    }
    throw label_error( "label '" + std::string( label ) + "' is not assigned" );
  }

  std::vector<segment_entry> _entries;
};

/// Which universal label receives the smaller magnitude q.
enum class universal_map : std::uint8_t
{
  a_low,
  a_high
};

struct square_labels
{
  std::string a = "A";
  std::string e = "E";
  std::string i = "I";
  std::string o = "O";
};

/*! \brief Square encoding on {-r, -q, q, r}.
 *
 * A and E take q and r (which way is `map`); O gets -i(A) and I gets -i(E)
 * so that both contradictory pairs sum to zero.
 */
inline segment_assignment make_square_assignment( int q, int r, universal_map map = universal_map::a_low,
                                                  square_labels const& labels = {} )
{
  if ( q <= 0 || r <= 0 )
  {
    throw assignment_error( "q and r must be positive" );
  }
  if ( q == r )
  {
    throw assignment_error( "q and r must differ" );
  }
  if ( q > r )
  {
    throw assignment_error( "q must be smaller than r" );
  }
  auto const a = map == universal_map::a_low ? q : r;
  auto const e = map == universal_map::a_low ? r : q;
  return segment_assignment( { { labels.a, a, role::universal },
                               { labels.e, e, role::universal },
                               { labels.i, -e, role::existential },
                               { labels.o, -a, role::existential } } );
}

/// Adds the disjunction label (sum of the universal values) and the
/// conjunction label (sum of the existential values) to a square assignment.
inline segment_assignment extend_hexagon( segment_assignment const& square, std::string const& label_u = "U",
                                          std::string const& label_y = "Y" )
{
  if ( !square.is_square() )
  {
    throw shape_error( "extend_hexagon needs a square assignment" );
  }
  if ( label_u == label_y || square.contains( label_u ) || square.contains( label_y ) )
  {
    throw label_error( "hexagon labels collide with existing labels" );
  }
  int u = 0, y = 0;
  for ( auto const& e : square.entries() )
  {
    ( e.role == role::universal ? u : y ) += e.value;
  }
  auto entries = square.entries();
  entries.push_back( { label_u, u, role::disjunction_u } );
  entries.push_back( { label_y, y, role::conjunction_y } );
  return segment_assignment( std::move( entries ) );
}

namespace detail
{

inline std::pair<int, int> pair_values( segment_assignment const& e, std::string_view a, std::string_view b )
{
  if ( a == b )
  {
    throw label_error( "a relation needs two distinct labels" );
  }
  return { e.value( a ), e.value( b ) };
}

/// Subalternation between (a, b) or nothing. The subaltern is the negative
/// member when the signs differ, the greater value when they agree.
inline std::optional<relation> subalternation( int va, int vb, bool same_sign_allowed )
{
  if ( vb == -va )
  {
    return std::nullopt;
  }
  auto const pa = polarity_of( va );
  auto const pb = polarity_of( vb );
  if ( pa != pb )
  {
    return pb == polarity::negative ? relation::subaltern_forward() : relation::subaltern_backward();
  }
  if ( !same_sign_allowed )
  {
    return std::nullopt;
  }
  return vb > va ? relation::subaltern_forward() : relation::subaltern_backward();
}

} // namespace detail

/*! \brief Every square clause that holds for (a, b), in clause order.
 *
 *  1. contradictory: i(a) + i(b) = 0
 *  2. contrary: both positive
 *  3. subcontrary: both negative
 *  4. subaltern: the subaltern's value is negative and not the mirror of
 *     the other's (tried with b as subaltern first, then a)
 *
 * Without precedence several clauses can hold at once; `square_relation`
 * keeps the first.
 */
inline std::vector<relation> matching_square_clauses( segment_assignment const& e, std::string_view a, std::string_view b )
{
  auto const [va, vb] = detail::pair_values( e, a, b );
  std::vector<relation> out;
  if ( va + vb == 0 )
  {
    out.push_back( relation::contradictory() );
  }
  if ( va > 0 && vb > 0 )
  {
    out.push_back( relation::contrary() );
  }
  if ( va < 0 && vb < 0 )
  {
    out.push_back( relation::subcontrary() );
  }
  if ( vb != -va && vb < 0 )
  {
    out.push_back( relation::subaltern_forward() );
  }
  else if ( va != -vb && va < 0 )
  {
    out.push_back( relation::subaltern_backward() );
  }
  return out;
}

/// Square clauses under precedence: the first clause that holds decides.
inline relation square_relation( segment_assignment const& e, std::string_view a, std::string_view b )
{
  auto const matches = matching_square_clauses( e, a, b );
  return matches.empty() ? relation::unconnected() : matches.front();
}

namespace detail
{

// {a, b} lies in a zero-sum triple of distinct labels that contains a
// label of role `object`
inline bool in_zero_sum_triple( segment_assignment const& e, std::string_view a, std::string_view b, role object )
{
  auto const va = e.value( a );
  auto const vb = e.value( b );
  for ( auto const& g : e.entries() )
  {
    if ( g.role != object )
    {
      continue;
    }
    if ( g.label != a && g.label != b )
    {
      if ( va + vb + g.value == 0 )
      {
        return true;
      }
      continue;
    }
    // one of the pair is the distinct object itself; look for the third member
    for ( auto const& t : e.entries() )
    {
      if ( t.label != a && t.label != b && va + vb + t.value == 0 )
      {
        return true;
      }
    }
  }
  return false;
}

} // namespace detail

/*! \brief Hexagon clauses under precedence.
 *
 * In order, first match wins:
 *  - contradictory: i(a) + i(b) = 0;
 *  - contrary: a and b lie in a zero-sum triple completed by the negative
 *    distinct object;
 *  - subcontrary: same with the positive distinct object;
 *  - subaltern: i(b) != -i(a) and either the signs differ (the negative one
 *    is the subaltern) or they agree (the greater one is the subaltern);
 *  - unconnected.
 */
inline relation hexagon_relation( segment_assignment const& e, std::string_view a, std::string_view b )
{
  if ( !e.is_hexagon() )
  {
    throw shape_error( "hexagon clauses need a hexagon assignment" );
  }
  auto const [va, vb] = detail::pair_values( e, a, b );
  if ( va + vb == 0 )
  {
    return relation::contradictory();
  }
  if ( detail::in_zero_sum_triple( e, a, b, role::conjunction_y ) )
  {
    return relation::contrary();
  }
  if ( detail::in_zero_sum_triple( e, a, b, role::disjunction_u ) )
  {
    return relation::subcontrary();
  }
  if ( auto s = detail::subalternation( va, vb, true ) )
  {
    return *s;
  }
  return relation::unconnected();
}

inline relation decode_relation( segment_assignment const& e, clause_system cs, std::string_view a, std::string_view b )
{
  return cs == clause_system::square ? square_relation( e, a, b ) : hexagon_relation( e, a, b );
}

/*! \brief Reconstructs the full diagram from the line segment.
 *
 * Square clauses apply pairwise to any assignment; hexagon clauses need a
 * hexagon assignment.
 */
inline opposition_graph decode_graph( segment_assignment const& e, clause_system cs )
{
  if ( cs == clause_system::hexagon && !e.is_hexagon() )
  {
    throw shape_error( "hexagon clauses need a hexagon assignment" );
  }
  if ( e.size() < 2 )
  {
    throw shape_error( "decoding needs at least two labels" );
  }
  opposition_graph g( e.labels() );
  auto const& entries = e.entries();
  for ( std::size_t i = 0; i < entries.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < entries.size(); ++j )
    {
      g.set( i, j, decode_relation( e, cs, entries[i].label, entries[j].label ) );
    }
  }
  return g;
}

struct verification_report
{
  struct mismatch
  {
    std::string first;
    std::string second;
    relation decoded;  ///< relative to (first, second)
    relation semantic; ///< relative to (first, second)
  };

  std::vector<mismatch> mismatches;

  bool matches() const noexcept { return mismatches.empty(); }
};

/// Compares the decoded graph with a semantic one pair by pair, in the
/// semantic graph's pair order.
inline verification_report verify_against( segment_assignment const& e, clause_system cs, opposition_graph const& semantic )
{
  auto labels = e.labels();
  auto nodes = semantic.nodes();
  std::sort( labels.begin(), labels.end() );
  std::sort( nodes.begin(), nodes.end() );
  if ( labels != nodes )
  {
    throw label_error( "assignment and graph have different label sets" );
  }
  auto const decoded = decode_graph( e, cs );
  verification_report report;
  for ( auto const& edge : semantic.edges() )
  {
    auto const d = decoded.relation( edge.first, edge.second );
    if ( d != edge.rel )
    {
      report.mismatches.push_back( { edge.first, edge.second, d, edge.rel } );
    }
  }
  return report;
}

/* roles from sentences */

/*! \brief Role of a sentence from its outermost structure.
 *
 * Outer negations are counted: a quantifier under an odd number of them
 * flips flavour (~exists is universal, ~forall existential), and De Morgan
 * swaps disjunction and conjunction. Implication counts as a disjunction.
 */
inline role infer_role( sentence const& s )
{
  bool negated = false;
  auto core = s;
  while ( core.type() == sentence::kind::negation )
  {
    negated = !negated;
    core = core.operand();
  }
  switch ( core.type() )
  {
  case sentence::kind::quantified:
    return ( core.bound_by() == quantifier::forall ) != negated ? role::universal : role::existential;
  case sentence::kind::conjunction:
    return negated ? role::disjunction_u : role::conjunction_y;
  default:
    return negated ? role::conjunction_y : role::disjunction_u;
  }
}

using role_map = std::map<std::string, role, std::less<>>;

inline role_map infer_roles( corpus const& c )
{
  role_map out;
  for ( auto const& e : c.entries() )
  {
    out.emplace( e.label, infer_role( e.statement ) );
  }
  return out;
}

/* synthesis */

namespace detail
{

template<typename Visit>
void for_each_combination( int n, int k, Visit&& visit )
{
  if ( k > n || k <= 0 )
  {
    return;
  }
  std::vector<int> pick( k );
  for ( int i = 0; i < k; ++i )
  {
    pick[i] = i + 1;
  }
  while ( true )
  {
    visit( pick );
    int i = k - 1;
    while ( i >= 0 && pick[i] == n - k + i + 1 )
    {
      --i;
    }
    if ( i < 0 )
    {
      return;
    }
    ++pick[i];
    for ( int j = i + 1; j < k; ++j )
    {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

} // namespace detail

/*! \brief Every encoding of `target` with magnitudes up to `magnitude_bound`.
 *
 * Exhaustive: all injective assignments of the target's labels to nonzero
 * integers in [-bound, bound] with symmetric support, signs fixed by `roles`
 * and, for hexagon roles, the distinct-object sums. An assignment is kept
 * when its decoded graph equals the target. Results are ordered by their
 * values read in node order. An empty result means no encoding exists at
 * this bound.
 */
inline std::vector<segment_assignment> synthesize( opposition_graph const& target, role_map const& roles, clause_system cs,
                                                   int magnitude_bound )
{
  std::vector<segment_assignment> found;
  auto const& nodes = target.nodes();
  for ( auto const& n : nodes )
  {
    if ( roles.find( n ) == roles.end() )
    {
      throw label_error( "no role for label '" + n + "'" );
    }
  }
  if ( nodes.size() < 2 || nodes.size() % 2 != 0 )
  {
    return found;
  }
  auto const half = static_cast<int>( nodes.size() / 2 );

  std::vector<std::size_t> positive_slots, negative_slots;
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    ( required_polarity( roles.find( nodes[i] )->second ) == polarity::positive ? positive_slots : negative_slots ).push_back( i );
  }
  if ( static_cast<int>( positive_slots.size() ) != half )
  {
    return found;
  }

  std::vector<std::pair<std::vector<int>, segment_assignment>> keyed;
  detail::for_each_combination( magnitude_bound, half, [&]( std::vector<int> const& magnitudes ) {
    auto positives = magnitudes;
    auto negatives = magnitudes;
    for ( auto& v : negatives )
    {
      v = -v;
    }
    std::sort( negatives.begin(), negatives.end() );
    do
    {
      auto neg = negatives;
      do
      {
        std::vector<segment_entry> entries( nodes.size() );
        for ( std::size_t i = 0; i < nodes.size(); ++i )
        {
          entries[i].label = nodes[i];
          entries[i].role = roles.find( nodes[i] )->second;
        }
        for ( std::size_t i = 0; i < positive_slots.size(); ++i )
        {
          entries[positive_slots[i]].value = positives[i];
        }
        for ( std::size_t i = 0; i < negative_slots.size(); ++i )
        {
          entries[negative_slots[i]].value = neg[i];
        }
        if ( detail::check_assignment( entries ) )
        {
          continue;
        }
        segment_assignment candidate( std::move( entries ) );
        if ( cs == clause_system::hexagon && !candidate.is_hexagon() )
        {
          continue;
        }
        if ( graph_equal( decode_graph( candidate, cs ), target ) )
        {
          std::vector<int> key;
          for ( auto const& n : nodes )
          {
            key.push_back( candidate.value( n ) );
          }
          keyed.emplace_back( std::move( key ), std::move( candidate ) );
        }
      } while ( std::next_permutation( neg.begin(), neg.end() ) );
    } while ( std::next_permutation( positives.begin(), positives.end() ) );
  } );

  std::sort( keyed.begin(), keyed.end(), []( auto const& x, auto const& y ) { return x.first < y.first; } );
  for ( auto& [key, a] : keyed )
  {
    found.push_back( std::move( a ) );
  }
  return found;
}

} // namespace opp
