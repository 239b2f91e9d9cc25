#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opp
{

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in sentence or corpus text. Line and column are 1-based.
class parse_error : public error
{
public:
  parse_error( std::size_t line, std::size_t column, std::string const& message )
    : error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message ),
      _line( line ),
      _column( column ),
      _message( message )
  {
  }

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }
  std::string const& message() const noexcept { return _message; }

private:
  std::size_t _line;
  std::size_t _column;
  std::string _message;
};

/// A sentence mentions a predicate outside the vocabulary it is evaluated
/// against, or two sentences do not share a vocabulary.
class vocabulary_error : public error
{
public:
  using error::error;
};

/// A label is unknown, duplicated or otherwise ill-formed.
class label_error : public error
{
public:
  using error::error;
};

/// A segment assignment violates nonzero, injectivity, symmetry or polarity.
class assignment_error : public error
{
public:
  using error::error;
};

/// An assignment or corpus does not have the shape a clause system requires.
class shape_error : public error
{
public:
  using error::error;
};

} // namespace opp
