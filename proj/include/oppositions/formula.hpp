#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace opp
{

enum class quantifier : std::uint8_t
{
  forall,
  exists
};

enum class connective : std::uint8_t
{
  negation,
  conjunction,
  disjunction,
  implication
};

/*! \brief Quantifier-free monadic formula over the single bound variable.
 *
 * Immutable; copies share structure.
 */
class matrix
{
public:
  enum class kind : std::uint8_t
  {
    atom,
    negation,
    conjunction,
    disjunction,
    implication
  };

  static matrix atom( std::string predicate )
  {
    if ( predicate.empty() )
    {
      throw error( "empty predicate name" );
    }
    return matrix{ std::make_shared<node const>( node{ kind::atom, std::move( predicate ), {}, {} } ) };
  }

  static matrix negate( matrix operand )
  {
    return matrix{ std::make_shared<node const>( node{ kind::negation, {}, std::move( operand._node ), {} } ) };
  }

  static matrix binary( connective op, matrix lhs, matrix rhs )
  {
    return matrix{ std::make_shared<node const>( node{ binary_kind( op ), {}, std::move( lhs._node ), std::move( rhs._node ) } ) };
  }

  kind type() const noexcept { return _node->type; }
  bool is_atom() const noexcept { return _node->type == kind::atom; }
  bool is_binary() const noexcept { return _node->type != kind::atom && _node->type != kind::negation; }

  /// Predicate name of an atom.
  std::string const& predicate() const noexcept { return _node->predicate; }
  /// Operand of a negation, left operand of a binary node.
  matrix lhs() const { return matrix{ _node->lhs }; }
  matrix operand() const { return lhs(); }
  matrix rhs() const { return matrix{ _node->rhs }; }

  bool operator==( matrix const& other ) const
  {
    if ( _node == other._node )
    {
      return true;
    }
    if ( type() != other.type() )
    {
      return false;
    }
    switch ( type() )
    {
    case kind::atom:
      return predicate() == other.predicate();
    case kind::negation:
      return operand() == other.operand();
    default:
      return lhs() == other.lhs() && rhs() == other.rhs();
    }
  }

  void collect_predicates( std::set<std::string>& out ) const
  {
    switch ( type() )
    {
    case kind::atom:
      out.insert( predicate() );
      break;
    case kind::negation:
      operand().collect_predicates( out );
      break;
    default:
      lhs().collect_predicates( out );
      rhs().collect_predicates( out );
    }
  }

private:
  struct node
  {
    kind type;
    std::string predicate;
    std::shared_ptr<node const> lhs;
    std::shared_ptr<node const> rhs;
  };

  explicit matrix( std::shared_ptr<node const> n ) : _node( std::move( n ) ) {}

  static kind binary_kind( connective op )
  {
    switch ( op )
    {
    case connective::conjunction:
      return kind::conjunction;
    case connective::disjunction:
      return kind::disjunction;
    case connective::implication:
      return kind::implication;
    default:
      throw error( "negation is not a binary connective" );
    }
  }

  std::shared_ptr<node const> _node;
};

/*! \brief Closed sentence: quantified matrices under boolean connectives.
 *
 * Quantifiers bind a single variable and never nest, so every sentence is a
 * boolean combination of `forall x. M` and `exists x. M` blocks.
 */
class sentence
{
public:
  enum class kind : std::uint8_t
  {
    quantified,
    negation,
    conjunction,
    disjunction,
    implication
  };

  static sentence quantify( quantifier q, matrix body )
  {
    return sentence{ std::make_shared<node const>( node{ kind::quantified, q, std::move( body ), {}, {} } ) };
  }

  static sentence forall( matrix body ) { return quantify( quantifier::forall, std::move( body ) ); }
  static sentence exists( matrix body ) { return quantify( quantifier::exists, std::move( body ) ); }

  static sentence negate( sentence operand )
  {
    return sentence{ std::make_shared<node const>( node{ kind::negation, {}, std::nullopt, std::move( operand._node ), {} } ) };
  }

  static sentence binary( connective op, sentence lhs, sentence rhs )
  {
    kind k{};
    switch ( op )
    {
    case connective::conjunction:
      k = kind::conjunction;
      break;
    case connective::disjunction:
      k = kind::disjunction;
      break;
    case connective::implication:
      k = kind::implication;
      break;
    default:
      throw error( "negation is not a binary connective" );
    }
    return sentence{ std::make_shared<node const>( node{ k, {}, std::nullopt, std::move( lhs._node ), std::move( rhs._node ) } ) };
  }

  static sentence conjoin( sentence lhs, sentence rhs ) { return binary( connective::conjunction, std::move( lhs ), std::move( rhs ) ); }
  static sentence disjoin( sentence lhs, sentence rhs ) { return binary( connective::disjunction, std::move( lhs ), std::move( rhs ) ); }
  static sentence implies( sentence lhs, sentence rhs ) { return binary( connective::implication, std::move( lhs ), std::move( rhs ) ); }

  kind type() const noexcept { return _node->type; }
  bool is_quantified() const noexcept { return _node->type == kind::quantified; }
  bool is_binary() const noexcept { return _node->type != kind::quantified && _node->type != kind::negation; }

  quantifier bound_by() const noexcept { return _node->q; }
  matrix const& body() const { return *_node->body; }
  sentence lhs() const { return sentence{ _node->lhs }; }
  sentence operand() const { return lhs(); }
  sentence rhs() const { return sentence{ _node->rhs }; }

  bool operator==( sentence const& other ) const
  {
    if ( _node == other._node )
    {
      return true;
    }
    if ( type() != other.type() )
    {
      return false;
    }
    switch ( type() )
    {
    case kind::quantified:
      return bound_by() == other.bound_by() && body() == other.body();
    case kind::negation:
      return operand() == other.operand();
    default:
      return lhs() == other.lhs() && rhs() == other.rhs();
    }
  }

  std::set<std::string> predicates() const
  {
    std::set<std::string> out;
    collect_predicates( out );
    return out;
  }

  void collect_predicates( std::set<std::string>& out ) const
  {
    switch ( type() )
    {
    case kind::quantified:
      body().collect_predicates( out );
      break;
    case kind::negation:
      operand().collect_predicates( out );
      break;
    default:
      lhs().collect_predicates( out );
      rhs().collect_predicates( out );
    }
  }

private:
  struct node
  {
    kind type;
    quantifier q;
    std::optional<matrix> body;
    std::shared_ptr<node const> lhs;
    std::shared_ptr<node const> rhs;
  };

  explicit sentence( std::shared_ptr<node const> n ) : _node( std::move( n ) ) {}

  std::shared_ptr<node const> _node;
};

/// Sorted set of unary predicate names. Never empty.
class vocabulary
{
public:
  explicit vocabulary( std::vector<std::string> names )
    : _names( std::move( names ) )
  {
    if ( _names.empty() )
    {
      throw vocabulary_error( "vocabulary must contain at least one predicate" );
    }
    std::sort( _names.begin(), _names.end() );
    if ( std::adjacent_find( _names.begin(), _names.end() ) != _names.end() )
    {
      throw vocabulary_error( "duplicate predicate in vocabulary" );
    }
    if ( std::any_of( _names.begin(), _names.end(), []( auto const& n ) { return n.empty(); } ) )
    {
      throw vocabulary_error( "empty predicate name" );
    }
  }

  vocabulary( std::initializer_list<std::string> names ) : vocabulary( std::vector<std::string>( names ) ) {}

  static vocabulary of( sentence const& s )
  {
    auto const p = s.predicates();
    return vocabulary( std::vector<std::string>( p.begin(), p.end() ) );
  }

  std::vector<std::string> const& predicates() const noexcept { return _names; }
  std::size_t size() const noexcept { return _names.size(); }

  std::optional<std::size_t> index_of( std::string_view name ) const
  {
    auto const it = std::lower_bound( _names.begin(), _names.end(), name );
    if ( it == _names.end() || *it != name )
    {
      return std::nullopt;
    }
    return static_cast<std::size_t>( it - _names.begin() );
  }

  bool contains( std::string_view name ) const { return index_of( name ).has_value(); }

  bool covers( sentence const& s ) const
  {
    auto const used = s.predicates();
    return std::all_of( used.begin(), used.end(), [this]( auto const& p ) { return contains( p ); } );
  }

  bool operator==( vocabulary const& ) const = default;

private:
  std::vector<std::string> _names;
};

/// Surface keywords for the universal / existential operator pair of a
/// family of categorical-like concepts. Every preset translates to forall/exists.
struct decoration_preset
{
  std::string name;
  std::string universal;
  std::string existential;

  std::optional<quantifier> quantifier_for( std::string_view keyword ) const
  {
    if ( keyword == universal )
    {
      return quantifier::forall;
    }
    if ( keyword == existential )
    {
      return quantifier::exists;
    }
    return std::nullopt;
  }

  std::string_view keyword( quantifier q ) const { return q == quantifier::forall ? universal : existential; }
};

inline std::vector<decoration_preset> const& decoration_presets()
{
  static std::vector<decoration_preset> const presets{
      { "categorical", "forall", "exists" },
      { "alethic", "necessarily", "possibly" },
      { "deontic", "obligatory", "permitted" },
      { "temporal", "always", "sometimes" } };
  return presets;
}

inline decoration_preset const& categorical_preset()
{
  return decoration_presets().front();
}

inline decoration_preset const& find_preset( std::string_view name )
{
  for ( auto const& p : decoration_presets() )
  {
    if ( p.name == name )
    {
      return p;
    }
  }
  throw error( "unknown decoration preset '" + std::string( name ) + "'" );
}

/* categorical forms */

enum class form : std::uint8_t
{
  A,
  E,
  I,
  O,
  U,
  Y
};

enum class representation : std::uint8_t
{
  mixed,
  universal_only,
  existential_only
};

inline std::optional<form> try_form_from_tag( std::string_view tag )
{
  if ( tag.size() != 1 )
  {
    return std::nullopt;
  }
  switch ( tag.front() )
  {
  case 'A':
    return form::A;
  case 'E':
    return form::E;
  case 'I':
    return form::I;
  case 'O':
    return form::O;
  case 'U':
    return form::U;
  case 'Y':
    return form::Y;
  default:
    return std::nullopt;
  }
}

inline form form_from_tag( std::string_view tag )
{
  if ( auto f = try_form_from_tag( tag ) )
  {
    return *f;
  }
  throw error( "unknown form tag '" + std::string( tag ) + "'" );
}

inline representation representation_from_tag( std::string_view tag )
{
  if ( tag == "mixed" )
  {
    return representation::mixed;
  }
  if ( tag == "universal-only" )
  {
    return representation::universal_only;
  }
  if ( tag == "existential-only" )
  {
    return representation::existential_only;
  }
  throw error( "unknown representation tag '" + std::string( tag ) + "'" );
}

/*! \brief Builds a categorical form over one predicate.
 *
 * | form | mixed   | universal-only | existential-only |
 * |------|---------|----------------|------------------|
 * | A    | ∀x P    | ∀x P           | ¬∃x ¬P           |
 * | E    | ∀x ¬P   | ∀x ¬P          | ¬∃x P            |
 * | I    | ∃x P    | ¬∀x ¬P         | ∃x P             |
 * | O    | ∃x ¬P   | ¬∀x P          | ∃x ¬P            |
 *
 * U is A ∨ E and Y is I ∧ O, with components in the same representation.
 */
inline sentence make_categorical( form f, std::string const& predicate, representation rep = representation::mixed )
{
  auto const pos = matrix::atom( predicate );
  auto const neg = matrix::negate( pos );
  switch ( f )
  {
  case form::A:
    return rep == representation::existential_only ? sentence::negate( sentence::exists( neg ) ) : sentence::forall( pos );
  case form::E:
    return rep == representation::existential_only ? sentence::negate( sentence::exists( pos ) ) : sentence::forall( neg );
  case form::I:
    return rep == representation::universal_only ? sentence::negate( sentence::forall( neg ) ) : sentence::exists( pos );
  case form::O:
    return rep == representation::universal_only ? sentence::negate( sentence::forall( pos ) ) : sentence::exists( neg );
  case form::U:
    return sentence::disjoin( make_categorical( form::A, predicate, rep ), make_categorical( form::E, predicate, rep ) );
  case form::Y:
    return sentence::conjoin( make_categorical( form::I, predicate, rep ), make_categorical( form::O, predicate, rep ) );
  }
  throw error( "unknown form" );
}

inline sentence make_categorical( std::string_view form_tag, std::string const& predicate, std::string_view representation_tag )
{
  return make_categorical( form_from_tag( form_tag ), predicate, representation_from_tag( representation_tag ) );
}

/* printing */

namespace detail
{

// 1 = implication (loosest) .. 4 = negation; 5 = atomic / quantified
template<typename Kind>
int precedence( Kind k )
{
  switch ( k )
  {
  case Kind::implication:
    return 1;
  case Kind::disjunction:
    return 2;
  case Kind::conjunction:
    return 3;
  case Kind::negation:
    return 4;
  default:
    return 5;
  }
}

template<typename Kind>
std::string_view symbol( Kind k )
{
  switch ( k )
  {
  case Kind::implication:
    return " -> ";
  case Kind::disjunction:
    return " | ";
  case Kind::conjunction:
    return " & ";
  default:
    return "";
  }
}

inline void print_matrix( std::string& out, matrix const& m, std::string_view var )
{
  auto const sub = [&]( matrix const& child, bool parens ) {
    if ( parens )
    {
      out += '(';
    }
    print_matrix( out, child, var );
    if ( parens )
    {
      out += ')';
    }
  };

  switch ( m.type() )
  {
  case matrix::kind::atom:
    out += m.predicate();
    out += '(';
    out += var;
    out += ')';
    break;
  case matrix::kind::negation:
    out += '~';
    sub( m.operand(), m.operand().is_binary() );
    break;
  default:
  {
    auto const p = precedence( m.type() );
    sub( m.lhs(), precedence( m.lhs().type() ) < p );
    out += symbol( m.type() );
    sub( m.rhs(), precedence( m.rhs().type() ) <= p );
  }
  }
}

inline void print_sentence( std::string& out, sentence const& s, decoration_preset const& preset )
{
  auto const sub = [&]( sentence const& child, bool parens ) {
    if ( parens )
    {
      out += '(';
    }
    print_sentence( out, child, preset );
    if ( parens )
    {
      out += ')';
    }
  };

  switch ( s.type() )
  {
  case sentence::kind::quantified:
    out += preset.keyword( s.bound_by() );
    out += " x. ";
    print_matrix( out, s.body(), "x" );
    break;
  case sentence::kind::negation:
    out += '~';
    sub( s.operand(), !( s.operand().type() == sentence::kind::negation ) );
    break;
  default:
  {
    // a quantifier body extends as far right as possible, so quantified
    // operands are always parenthesized
    auto const p = precedence( s.type() );
    auto const l = s.lhs();
    auto const r = s.rhs();
    sub( l, l.is_quantified() || precedence( l.type() ) < p );
    out += symbol( s.type() );
    sub( r, r.is_quantified() || precedence( r.type() ) <= p );
  }
  }
}

} // namespace detail

/// Concrete syntax accepted by `parse_sentence`.
inline std::string print_sentence( sentence const& s, decoration_preset const& preset = categorical_preset() )
{
  std::string out;
  detail::print_sentence( out, s, preset );
  return out;
}

inline std::string print_matrix( matrix const& m )
{
  std::string out;
  detail::print_matrix( out, m, "x" );
  return out;
}

} // namespace opp
