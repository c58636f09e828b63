#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evoform {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised while parsing expression text; `position` is a 0-based byte offset.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Point outside a chart's box, axis out of range, degree mismatch, ...
struct DomainError : Error {
  using Error::Error;
};

// Scenario / form file violates the published schema.
struct SchemaError : Error {
  SchemaError(const std::string& what, const std::string& pointer)
      : Error(what + " [" + pointer + "]"), pointer(pointer) {}
  std::string pointer;
};

// A numeric procedure could not complete (singular system, empty null space, ...).
struct NumericError : Error {
  using Error::Error;
};

}  // namespace evoform
