#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "formula.hpp"

namespace opp
{

/*! \brief Named collection of sentences (the set of categorical-like
 * statements a diagram is built over).
 */
class corpus
{
public:
  struct entry
  {
    std::string label;
    sentence statement;
  };

  explicit corpus( std::vector<entry> entries )
    : _entries( std::move( entries ) ),
      _vocabulary( infer_vocabulary( _entries ) )
  {
    std::unordered_set<std::string> seen;
    for ( auto const& e : _entries )
    {
      if ( e.label.empty() )
      {
        throw label_error( "corpus labels must be nonempty" );
      }
      if ( !seen.insert( e.label ).second )
      {
        throw label_error( "duplicate label '" + e.label + "'" );
      }
    }
  }

  std::vector<entry> const& entries() const noexcept { return _entries; }
  std::size_t size() const noexcept { return _entries.size(); }
  vocabulary const& vocab() const noexcept { return _vocabulary; }

  std::vector<std::string> labels() const
  {
    std::vector<std::string> out;
    out.reserve( _entries.size() );
    for ( auto const& e : _entries )
    {
      out.push_back( e.label );
    }
    return out;
  }

  sentence const* find( std::string_view label ) const
  {
    for ( auto const& e : _entries )
    {
      if ( e.label == label )
      {
        return &e.statement;
      }
    }
    return nullptr;
  }

private:
  static vocabulary infer_vocabulary( std::vector<entry> const& entries )
  {
    std::set<std::string> used;
    for ( auto const& e : entries )
    {
      e.statement.collect_predicates( used );
    }
    if ( used.empty() )
    {
      throw vocabulary_error( "corpus has no predicates" );
    }
    return vocabulary( std::vector<std::string>( used.begin(), used.end() ) );
  }

  std::vector<entry> _entries;
  vocabulary _vocabulary;
};

namespace detail
{

enum class token_kind
{
  identifier,
  lparen,
  rparen,
  lbracket,
  rbracket,
  dot,
  tilde,
  amp,
  bar,
  arrow,
  end
};

struct token
{
  token_kind kind;
  std::string text;
  std::size_t column;
};

inline std::string_view token_description( token const& t )
{
  switch ( t.kind )
  {
  case token_kind::end:
    return "end of input";
  default:
    return t.text;
  }
}

/// Recursive-descent parser over one line of sentence text.
class sentence_parser
{
public:
  sentence_parser( std::string_view text, decoration_preset const& preset, std::size_t line, std::size_t column_offset )
    : _preset( preset ), _line( line ), _offset( column_offset )
  {
    tokenize( text );
  }

  sentence parse()
  {
    auto s = parse_implication();
    if ( peek().kind != token_kind::end )
    {
      fail( peek(), "unexpected '" + std::string( token_description( peek() ) ) + "'" );
    }
    return s;
  }

private:
  [[noreturn]] void fail( std::size_t column, std::string const& message ) const
  {
    throw parse_error( _line, column + _offset, message );
  }

  [[noreturn]] void fail( token const& t, std::string const& message ) const { fail( t.column, message ); }

  void tokenize( std::string_view text )
  {
    std::size_t i = 0;
    while ( i < text.size() )
    {
      auto const c = text[i];
      auto const col = i + 1;
      if ( std::isspace( static_cast<unsigned char>( c ) ) )
      {
        ++i;
        continue;
      }
      if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
      {
        auto j = i;
        while ( j < text.size() && ( std::isalnum( static_cast<unsigned char>( text[j] ) ) || text[j] == '_' ) )
        {
          ++j;
        }
        _tokens.push_back( { token_kind::identifier, std::string( text.substr( i, j - i ) ), col } );
        i = j;
        continue;
      }
      if ( c == '-' && i + 1 < text.size() && text[i + 1] == '>' )
      {
        _tokens.push_back( { token_kind::arrow, "->", col } );
        i += 2;
        continue;
      }
      token_kind k{};
      switch ( c )
      {
      case '(':
        k = token_kind::lparen;
        break;
      case ')':
        k = token_kind::rparen;
        break;
      case '[':
        k = token_kind::lbracket;
        break;
      case ']':
        k = token_kind::rbracket;
        break;
      case '.':
        k = token_kind::dot;
        break;
      case '~':
        k = token_kind::tilde;
        break;
      case '&':
        k = token_kind::amp;
        break;
      case '|':
        k = token_kind::bar;
        break;
      default:
        fail( col, std::string( "unexpected character '" ) + c + "'" );
      }
      _tokens.push_back( { k, std::string( 1, c ), col } );
      ++i;
    }
    _tokens.push_back( { token_kind::end, "", text.size() + 1 } );
  }

  token const& peek( std::size_t ahead = 0 ) const
  {
    return _tokens[std::min( _pos + ahead, _tokens.size() - 1 )];
  }

  token const& advance() { return _tokens[_pos < _tokens.size() - 1 ? _pos++ : _pos]; }

  token const& expect( token_kind k, std::string_view what )
  {
    if ( peek().kind != k )
    {
      fail( peek(), "expected " + std::string( what ) + ", found '" + std::string( token_description( peek() ) ) + "'" );
    }
    return advance();
  }

  std::optional<quantifier> keyword( token const& t ) const
  {
    if ( t.kind != token_kind::identifier )
    {
      return std::nullopt;
    }
    if ( auto q = categorical_preset().quantifier_for( t.text ) )
    {
      return q;
    }
    return _preset.quantifier_for( t.text );
  }

  /* sentence level */

  sentence parse_implication()
  {
    auto lhs = parse_disjunction();
    while ( peek().kind == token_kind::arrow )
    {
      advance();
      lhs = sentence::implies( lhs, parse_disjunction() );
    }
    return lhs;
  }

  sentence parse_disjunction()
  {
    auto lhs = parse_conjunction();
    while ( peek().kind == token_kind::bar )
    {
      advance();
      lhs = sentence::disjoin( lhs, parse_conjunction() );
    }
    return lhs;
  }

  sentence parse_conjunction()
  {
    auto lhs = parse_unary();
    while ( peek().kind == token_kind::amp )
    {
      advance();
      lhs = sentence::conjoin( lhs, parse_unary() );
    }
    return lhs;
  }

  sentence parse_unary()
  {
    if ( peek().kind == token_kind::tilde )
    {
      advance();
      return sentence::negate( parse_unary() );
    }
    return parse_primary();
  }

  sentence parse_primary()
  {
    auto const& t = peek();
    if ( t.kind == token_kind::lparen )
    {
      advance();
      auto s = parse_implication();
      expect( token_kind::rparen, "')'" );
      return s;
    }
    if ( t.kind != token_kind::identifier )
    {
      fail( t, "expected a sentence, found '" + std::string( token_description( t ) ) + "'" );
    }
    if ( auto q = keyword( t ) )
    {
      advance();
      auto const& var = expect( token_kind::identifier, "a variable" );
      if ( keyword( var ) || !std::islower( static_cast<unsigned char>( var.text.front() ) ) )
      {
        fail( var, "'" + var.text + "' is not a variable name" );
      }
      expect( token_kind::dot, "'.' after the bound variable" );
      _bound = var.text;
      auto body = parse_matrix_implication();
      _bound.clear();
      return sentence::quantify( *q, body );
    }
    if ( peek( 1 ).kind == token_kind::lbracket )
    {
      auto const f = try_form_from_tag( t.text );
      if ( !f )
      {
        fail( t, "unknown sugar tag '" + t.text + "'" );
      }
      advance();
      advance();
      auto const& pred = expect( token_kind::identifier, "a predicate name" );
      if ( keyword( pred ) )
      {
        fail( pred, "'" + pred.text + "' is not a predicate name" );
      }
      expect( token_kind::rbracket, "']'" );
      return make_categorical( *f, pred.text, representation::mixed );
    }
    if ( peek( 1 ).kind == token_kind::lparen )
    {
      auto const& arg = peek( 2 );
      if ( arg.kind == token_kind::identifier )
      {
        fail( arg, "free variable '" + arg.text + "'" );
      }
    }
    fail( t, "expected a sentence, found '" + t.text + "'" );
  }

  /* matrix level: quantifier-free, over the bound variable */

  matrix parse_matrix_implication()
  {
    auto lhs = parse_matrix_disjunction();
    while ( peek().kind == token_kind::arrow )
    {
      advance();
      lhs = matrix::binary( connective::implication, lhs, parse_matrix_disjunction() );
    }
    return lhs;
  }

  matrix parse_matrix_disjunction()
  {
    auto lhs = parse_matrix_conjunction();
    while ( peek().kind == token_kind::bar )
    {
      advance();
      lhs = matrix::binary( connective::disjunction, lhs, parse_matrix_conjunction() );
    }
    return lhs;
  }

  matrix parse_matrix_conjunction()
  {
    auto lhs = parse_matrix_unary();
    while ( peek().kind == token_kind::amp )
    {
      advance();
      lhs = matrix::binary( connective::conjunction, lhs, parse_matrix_unary() );
    }
    return lhs;
  }

  matrix parse_matrix_unary()
  {
    if ( peek().kind == token_kind::tilde )
    {
      advance();
      return matrix::negate( parse_matrix_unary() );
    }
    auto const& t = peek();
    if ( t.kind == token_kind::lparen )
    {
      advance();
      auto m = parse_matrix_implication();
      expect( token_kind::rparen, "')'" );
      return m;
    }
    if ( t.kind != token_kind::identifier )
    {
      fail( t, "expected an atom, found '" + std::string( token_description( t ) ) + "'" );
    }
    if ( keyword( t ) )
    {
      fail( t, "nested quantifier inside a quantifier body; parenthesize the quantified operands" );
    }
    if ( peek( 1 ).kind == token_kind::lbracket )
    {
      fail( t, "decoration sugar inside a quantifier body; parenthesize the quantified operands" );
    }
    auto const& pred = advance();
    expect( token_kind::lparen, "'(' after predicate name" );
    auto const& var = expect( token_kind::identifier, "a variable" );
    if ( var.text != _bound )
    {
      fail( var, "free variable '" + var.text + "'" );
    }
    expect( token_kind::rparen, "')'" );
    return matrix::atom( pred.text );
  }

  decoration_preset const& _preset;
  std::size_t _line;
  std::size_t _offset;
  std::vector<token> _tokens;
  std::size_t _pos = 0;
  std::string _bound;
};

inline std::string_view trim( std::string_view s )
{
  auto const ws = " \t\r\n\v\f";
  auto const b = s.find_first_not_of( ws );
  if ( b == std::string_view::npos )
  {
    return {};
  }
  auto const e = s.find_last_not_of( ws );
  return s.substr( b, e - b + 1 );
}

inline bool valid_label( std::string_view s )
{
  if ( s.empty() )
  {
    return false;
  }
  for ( auto c : s )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' && c != '-' && c != '\'' )
    {
      return false;
    }
  }
  return true;
}

} // namespace detail

/*! \brief Parses one sentence.
 *
 * Grammar, loosest first: `->`, `|`, `&`, `~`; binary connectives are
 * left-associative. Primaries are `forall x. <matrix>`, `exists x. <matrix>`,
 * parenthesized sentences and the sugar forms `A[P]` .. `Y[P]`. A matrix is a
 * quantifier-free formula over atoms `P(x)` of the bound variable.
 *
 * The preset's keywords are accepted in addition to `forall` / `exists`.
 */
inline sentence parse_sentence( std::string_view text, decoration_preset const& preset = categorical_preset(),
                                std::size_t line = 1, std::size_t column_offset = 0 )
{
  return detail::sentence_parser( text, preset, line, column_offset ).parse();
}

/*! \brief Parses a corpus: one `label: sentence` per line.
 *
 * `#` starts a comment; blank lines are skipped; LF or CRLF line endings.
 * The vocabulary is the set of predicates the sentences use.
 */
inline corpus parse_corpus( std::string_view text, decoration_preset const& preset = categorical_preset() )
{
  std::vector<corpus::entry> entries;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto line = text.substr( start, end - start );
    start = end + 1;
    ++line_no;

    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    if ( detail::trim( line ).empty() )
    {
      continue;
    }
    auto const colon = line.find( ':' );
    if ( colon == std::string_view::npos )
    {
      auto const first = line.find_first_not_of( " \t" );
      throw parse_error( line_no, first + 1, "expected 'label: sentence'" );
    }
    auto const label = detail::trim( line.substr( 0, colon ) );
    if ( !detail::valid_label( label ) )
    {
      throw parse_error( line_no, 1, "invalid label '" + std::string( label ) + "'" );
    }
    if ( !seen.insert( std::string( label ) ).second )
    {
      throw parse_error( line_no, 1, "duplicate label '" + std::string( label ) + "'" );
    }
    auto s = parse_sentence( line.substr( colon + 1 ), preset, line_no, colon + 1 );
    entries.push_back( { std::string( label ), std::move( s ) } );
  }
  if ( entries.empty() )
  {
    throw parse_error( 1, 1, "corpus has no entries" );
  }
  return corpus( std::move( entries ) );
}

} // namespace opp
