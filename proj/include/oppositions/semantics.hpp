#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "formula.hpp"
#include "graph.hpp"
#include "parser.hpp"
#include "relation.hpp"

namespace opp
{

/// Largest domain a model can have (extensions are 64-bit masks).
inline constexpr std::size_t max_domain_size = 64;

/// Enumeration refuses bounds that would produce more models than this.
inline constexpr std::uint64_t max_enumerated_models = std::uint64_t{ 1 } << 30;

/*! \brief Finite classical structure: domain {0, .., n-1} and one extension
 * per vocabulary predicate, stored as a bitmask over the domain.
 */
class model
{
public:
  model( std::shared_ptr<vocabulary const> vocab, std::size_t domain_size, std::vector<std::uint64_t> extensions )
    : _vocab( std::move( vocab ) ), _size( domain_size ), _extensions( std::move( extensions ) )
  {
    if ( _size == 0 || _size > max_domain_size )
    {
      throw std::invalid_argument( "domain size must be in 1.." + std::to_string( max_domain_size ) );
    }
    if ( _extensions.size() != _vocab->size() )
    {
      throw vocabulary_error( "model needs exactly one extension per predicate" );
    }
    for ( auto e : _extensions )
    {
      if ( e & ~domain_mask() )
      {
        throw std::invalid_argument( "extension exceeds the domain" );
      }
    }
  }

  model( vocabulary const& vocab, std::size_t domain_size, std::vector<std::uint64_t> extensions )
    : model( std::make_shared<vocabulary const>( vocab ), domain_size, std::move( extensions ) )
  {
  }

  vocabulary const& vocab() const noexcept { return *_vocab; }
  std::size_t domain_size() const noexcept { return _size; }
  std::vector<std::uint64_t> const& extensions() const noexcept { return _extensions; }

  std::uint64_t domain_mask() const noexcept
  {
    return _size == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << _size ) - 1;
  }

  std::uint64_t extension( std::string_view predicate ) const
  {
    auto const i = _vocab->index_of( predicate );
    if ( !i )
    {
      throw vocabulary_error( "predicate '" + std::string( predicate ) + "' is not in the model's vocabulary" );
    }
    return _extensions[*i];
  }

  bool holds( std::string_view predicate, std::size_t element ) const
  {
    return ( extension( predicate ) >> element ) & 1u;
  }

private:
  friend void for_each_model( vocabulary const&, std::size_t, std::function<bool( model const& )> const& );

  std::shared_ptr<vocabulary const> _vocab;
  std::size_t _size;
  std::vector<std::uint64_t> _extensions;
};

/// Number of models with domain sizes 1..max_size: sum of 2^(k*n).
inline std::uint64_t count_models( vocabulary const& vocab, std::size_t max_size )
{
  std::uint64_t total = 0;
  for ( std::size_t n = 1; n <= max_size; ++n )
  {
    auto const bits = vocab.size() * n;
    if ( bits >= 63 || total + ( std::uint64_t{ 1 } << bits ) > max_enumerated_models )
    {
      throw std::length_error( "model enumeration with " + std::to_string( vocab.size() ) + " predicates up to size " +
                               std::to_string( max_size ) + " exceeds " + std::to_string( max_enumerated_models ) + " models" );
    }
    total += std::uint64_t{ 1 } << bits;
  }
  return total;
}

/*! \brief Calls `visit` on every model with 1 <= domain size <= max_size.
 *
 * Order: by domain size, then by the tuple of extensions (first predicate
 * most significant) read as binary numbers. The model passed to `visit` is
 * reused between calls. Returning false from `visit` stops the enumeration.
 */
inline void for_each_model( vocabulary const& vocab, std::size_t max_size, std::function<bool( model const& )> const& visit )
{
  if ( max_size == 0 )
  {
    throw std::invalid_argument( "max_size must be positive" );
  }
  count_models( vocab, max_size );
  auto const shared = std::make_shared<vocabulary const>( vocab );
  auto const k = vocab.size();
  for ( std::size_t n = 1; n <= max_size; ++n )
  {
    model m( shared, n, std::vector<std::uint64_t>( k, 0 ) );
    auto const element_mask = m.domain_mask();
    auto const limit = std::uint64_t{ 1 } << ( k * n );
    for ( std::uint64_t code = 0; code < limit; ++code )
    {
      for ( std::size_t p = 0; p < k; ++p )
      {
        m._extensions[p] = ( code >> ( ( k - 1 - p ) * n ) ) & element_mask;
      }
      if ( !visit( m ) )
      {
        return;
      }
    }
  }
}

inline std::vector<model> enumerate_models( vocabulary const& vocab, std::size_t max_size )
{
  std::vector<model> out;
  out.reserve( count_models( vocab, max_size ) );
  for_each_model( vocab, max_size, [&]( model const& m ) {
    out.push_back( m );
    return true;
  } );
  return out;
}

/*! \brief A sentence resolved against a vocabulary for repeated evaluation.
 *
 * Matrices evaluate to the bitmask of domain elements satisfying them, so a
 * quantifier costs one comparison.
 */
class compiled_sentence
{
public:
  compiled_sentence( sentence const& s, vocabulary const& vocab )
  {
    _root = compile( s, vocab );
  }

  bool evaluate( std::uint64_t domain, std::vector<std::uint64_t> const& extensions ) const
  {
    return eval_sentence( _root, domain, extensions );
  }

  bool evaluate( model const& m ) const { return evaluate( m.domain_mask(), m.extensions() ); }

private:
  enum class op : std::uint8_t
  {
    atom,
    negation,
    conjunction,
    disjunction,
    implication,
    forall,
    exists
  };

  struct node
  {
    op code;
    std::size_t index = 0; // predicate index for atoms
    int lhs = -1;
    int rhs = -1;
  };

  template<typename Kind>
  static op connective_op( Kind k )
  {
    switch ( k )
    {
    case Kind::negation:
      return op::negation;
    case Kind::conjunction:
      return op::conjunction;
    case Kind::disjunction:
      return op::disjunction;
    default:
      return op::implication;
    }
  }

  int push( node n )
  {
    _nodes.push_back( n );
    return static_cast<int>( _nodes.size() - 1 );
  }

  int compile( matrix const& m, vocabulary const& vocab )
  {
    if ( m.is_atom() )
    {
      auto const i = vocab.index_of( m.predicate() );
      if ( !i )
      {
        throw vocabulary_error( "predicate '" + m.predicate() + "' is not in the vocabulary" );
      }
      return push( { op::atom, *i } );
    }
    if ( m.type() == matrix::kind::negation )
    {
      auto const a = compile( m.operand(), vocab );
      return push( { op::negation, 0, a } );
    }
    auto const a = compile( m.lhs(), vocab );
    auto const b = compile( m.rhs(), vocab );
    return push( { connective_op( m.type() ), 0, a, b } );
  }

  int compile( sentence const& s, vocabulary const& vocab )
  {
    if ( s.is_quantified() )
    {
      auto const body = compile( s.body(), vocab );
      return push( { s.bound_by() == quantifier::forall ? op::forall : op::exists, 0, body } );
    }
    if ( s.type() == sentence::kind::negation )
    {
      auto const a = compile( s.operand(), vocab );
      return push( { op::negation, 0, a } );
    }
    auto const a = compile( s.lhs(), vocab );
    auto const b = compile( s.rhs(), vocab );
    return push( { connective_op( s.type() ), 0, a, b } );
  }

  std::uint64_t eval_matrix( int i, std::uint64_t domain, std::vector<std::uint64_t> const& ext ) const
  {
    auto const& n = _nodes[i];
    switch ( n.code )
    {
    case op::atom:
      return ext[n.index];
    case op::negation:
      return domain & ~eval_matrix( n.lhs, domain, ext );
    case op::conjunction:
      return eval_matrix( n.lhs, domain, ext ) & eval_matrix( n.rhs, domain, ext );
    case op::disjunction:
      return eval_matrix( n.lhs, domain, ext ) | eval_matrix( n.rhs, domain, ext );
    case op::implication:
      return ( domain & ~eval_matrix( n.lhs, domain, ext ) ) | eval_matrix( n.rhs, domain, ext );
    default:
      throw std::logic_error( "quantifier inside a matrix" );
    }
  }

  bool eval_sentence( int i, std::uint64_t domain, std::vector<std::uint64_t> const& ext ) const
  {
    auto const& n = _nodes[i];
    switch ( n.code )
    {
    case op::forall:
      return eval_matrix( n.lhs, domain, ext ) == domain;
    case op::exists:
      return eval_matrix( n.lhs, domain, ext ) != 0;
    case op::negation:
      return !eval_sentence( n.lhs, domain, ext );
    case op::conjunction:
      return eval_sentence( n.lhs, domain, ext ) && eval_sentence( n.rhs, domain, ext );
    case op::disjunction:
      return eval_sentence( n.lhs, domain, ext ) || eval_sentence( n.rhs, domain, ext );
    case op::implication:
      return !eval_sentence( n.lhs, domain, ext ) || eval_sentence( n.rhs, domain, ext );
    default:
      throw std::logic_error( "atom at sentence level" );
    }
  }

  std::vector<node> _nodes;
  int _root = -1;
};

/// Classical truth of `s` in `m`.
inline bool eval( model const& m, sentence const& s )
{
  return compiled_sentence( s, m.vocab() ).evaluate( m );
}

/// The four facts a classification is read off from.
struct evidence
{
  bool both_true = false;   ///< some model satisfies both
  bool both_false = false;  ///< some model falsifies both
  bool first_entails_second = true;
  bool second_entails_first = true;

  bool operator==( evidence const& ) const = default;
};

inline evidence gather_evidence( vocabulary const& vocab, sentence const& a, sentence const& b, std::size_t max_size )
{
  compiled_sentence const ca( a, vocab );
  compiled_sentence const cb( b, vocab );
  evidence ev;
  for_each_model( vocab, max_size, [&]( model const& m ) {
    auto const va = ca.evaluate( m );
    auto const vb = cb.evaluate( m );
    ev.both_true |= va && vb;
    ev.both_false |= !va && !vb;
    ev.first_entails_second &= !va || vb;
    ev.second_entails_first &= !vb || va;
    return true;
  } );
  return ev;
}

/*! \brief Reads the relation off the evidence.
 *
 * Checked in order, first match wins: equivalent (mutual entailment),
 * contradictory (never both true, never both false), contrary (never both
 * true), subcontrary (never both false), subalternation (one-way entailment
 * with both joint truth and joint falsity possible), unconnected.
 */
inline relation relation_from_evidence( evidence const& ev )
{
  if ( ev.first_entails_second && ev.second_entails_first )
  {
    return relation::equivalent();
  }
  if ( !ev.both_true && !ev.both_false )
  {
    return relation::contradictory();
  }
  if ( !ev.both_true )
  {
    return relation::contrary();
  }
  if ( !ev.both_false )
  {
    return relation::subcontrary();
  }
  if ( ev.first_entails_second )
  {
    return relation::subaltern_forward();
  }
  if ( ev.second_entails_first )
  {
    return relation::subaltern_backward();
  }
  return relation::unconnected();
}

/// Classifies a pair of sentences evaluated over `vocab`.
inline relation classify( vocabulary const& vocab, sentence const& a, sentence const& b, std::size_t max_size )
{
  return relation_from_evidence( gather_evidence( vocab, a, b, max_size ) );
}

/// Classifies a pair of sentences over the same predicates.
inline relation classify( sentence const& a, sentence const& b, std::size_t max_size )
{
  auto const va = vocabulary::of( a );
  if ( !( va == vocabulary::of( b ) ) )
  {
    throw vocabulary_error( "sentences do not share a vocabulary" );
  }
  return classify( va, a, b, max_size );
}

/// Small-model bound for monadic first-order logic without equality: 2^k.
inline std::size_t default_bound( vocabulary const& vocab )
{
  if ( vocab.size() >= 7 )
  {
    throw std::length_error( "default bound for " + std::to_string( vocab.size() ) + " predicates exceeds the domain limit" );
  }
  return std::size_t{ 1 } << vocab.size();
}

/// Classifies every unordered pair of corpus entries.
inline opposition_graph build_graph( corpus const& c, std::size_t max_size )
{
  if ( c.size() < 2 )
  {
    throw std::invalid_argument( "an opposition graph needs at least two sentences" );
  }
  auto const& vocab = c.vocab();
  std::vector<compiled_sentence> compiled;
  compiled.reserve( c.size() );
  for ( auto const& e : c.entries() )
  {
    compiled.emplace_back( e.statement, vocab );
  }

  auto const n = c.size();
  std::vector<evidence> evs( n * n );
  std::vector<bool> truth( n );
  for_each_model( vocab, max_size, [&]( model const& m ) {
    for ( std::size_t i = 0; i < n; ++i )
    {
      truth[i] = compiled[i].evaluate( m );
    }
    for ( std::size_t i = 0; i < n; ++i )
    {
      for ( std::size_t j = i + 1; j < n; ++j )
      {
        auto& ev = evs[i * n + j];
        ev.both_true = ev.both_true || ( truth[i] && truth[j] );
        ev.both_false = ev.both_false || ( !truth[i] && !truth[j] );
        ev.first_entails_second = ev.first_entails_second && ( !truth[i] || truth[j] );
        ev.second_entails_first = ev.second_entails_first && ( !truth[j] || truth[i] );
      }
    }
    return true;
  } );

  opposition_graph g( c.labels() );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = i + 1; j < n; ++j )
    {
      g.set( i, j, relation_from_evidence( evs[i * n + j] ) );
    }
  }
  return g;
}

} // namespace opp
