#pragma once

#include <stdexcept>
#include <string>

namespace aias {

struct RdfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in a Turtle, rule, or query document. Line and column are
// 1-based and never point past the end of the input.
struct ParseError : RdfError {
  std::size_t line;
  std::size_t column;
  std::string message;
  std::string token;

  ParseError(std::size_t line, std::size_t column, std::string message, std::string token = "");
};

struct UnboundPrefixError : RdfError {
  using RdfError::RdfError;
};

struct MalformedCurieError : RdfError {
  using RdfError::RdfError;
};

struct UnknownSchemaError : RdfError {
  using RdfError::RdfError;
};

struct UnknownClassError : RdfError {
  using RdfError::RdfError;
};

struct MalformedSchemaError : RdfError {
  using RdfError::RdfError;
};

struct UnsafeRuleError : RdfError {
  using RdfError::RdfError;
};

struct MalformedShapeError : RdfError {
  using RdfError::RdfError;
};

struct UnprojectableVariableError : RdfError {
  using RdfError::RdfError;
};

}  // namespace aias
