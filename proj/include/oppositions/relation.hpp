#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace opp
{

enum class relation_kind : std::uint8_t
{
  contradictory,
  contrary,
  subcontrary,
  subaltern,
  equivalent,
  unconnected
};

/// Orientation of a subalternation relative to the ordered pair it was
/// computed for. Always `none` for the symmetric kinds.
enum class direction : std::uint8_t
{
  none,
  first_to_second,
  second_to_first
};

/// An opposition between an ordered pair (first, second).
///
/// Subalternation is stored from superaltern to subaltern: a relation with
/// `first_to_second` means the second member is subaltern of the first.
struct relation
{
  relation_kind kind = relation_kind::unconnected;
  direction dir = direction::none;

  static constexpr relation contradictory() { return { relation_kind::contradictory, direction::none }; }
  static constexpr relation contrary() { return { relation_kind::contrary, direction::none }; }
  static constexpr relation subcontrary() { return { relation_kind::subcontrary, direction::none }; }
  static constexpr relation equivalent() { return { relation_kind::equivalent, direction::none }; }
  static constexpr relation unconnected() { return { relation_kind::unconnected, direction::none }; }

  /// Second is subaltern of first.
  static constexpr relation subaltern_forward() { return { relation_kind::subaltern, direction::first_to_second }; }
  /// First is subaltern of second.
  static constexpr relation subaltern_backward() { return { relation_kind::subaltern, direction::second_to_first }; }

  /// The same relation seen from the pair (second, first).
  constexpr relation flipped() const
  {
    switch ( dir )
    {
    case direction::first_to_second:
      return { kind, direction::second_to_first };
    case direction::second_to_first:
      return { kind, direction::first_to_second };
    default:
      return *this;
    }
  }

  constexpr bool operator==( relation const& ) const = default;
};

inline constexpr std::string_view kind_name( relation_kind k )
{
  switch ( k )
  {
  case relation_kind::contradictory:
    return "contradictory";
  case relation_kind::contrary:
    return "contrary";
  case relation_kind::subcontrary:
    return "subcontrary";
  case relation_kind::subaltern:
    return "subaltern";
  case relation_kind::equivalent:
    return "equivalent";
  case relation_kind::unconnected:
    return "unconnected";
  }
  return "unconnected";
}

/// Diagram edge label: d, c, sc, s; "eq" and "u" for the two extra kinds.
inline constexpr std::string_view short_name( relation_kind k )
{
  switch ( k )
  {
  case relation_kind::contradictory:
    return "d";
  case relation_kind::contrary:
    return "c";
  case relation_kind::subcontrary:
    return "sc";
  case relation_kind::subaltern:
    return "s";
  case relation_kind::equivalent:
    return "eq";
  case relation_kind::unconnected:
    return "u";
  }
  return "u";
}

/// "contrary", "subaltern(A->I)" with the given names for the pair members.
inline std::string describe( relation const& r, std::string_view first, std::string_view second )
{
  std::string out{ kind_name( r.kind ) };
  if ( r.kind == relation_kind::subaltern )
  {
    auto const forward = r.dir == direction::first_to_second;
    out += '(';
    out += forward ? first : second;
    out += "->";
    out += forward ? second : first;
    out += ')';
  }
  return out;
}

} // namespace opp
