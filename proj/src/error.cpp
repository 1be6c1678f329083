#include "aias/error.hpp"

namespace aias {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::string token)
    : RdfError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line(line),
      column(column),
      message(std::move(message)),
      token(std::move(token)) {}

}  // namespace aias
