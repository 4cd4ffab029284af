#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordfn {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed ordinal expression or block-union syntax.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

// Operation applied outside its domain of definition.
struct DomainError : Error {
  using Error::Error;
};

// Construction rejected: the input violates a representation invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Indicator function lies outside the image of phi.
struct NotInImageError : Error {
  using Error::Error;
};

// Probe values are inconsistent with every finite change set over the pool.
struct ReconstructionError : Error {
  using Error::Error;
};

}  // namespace ordfn
