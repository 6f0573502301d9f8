#pragma once

#include <stdexcept>
#include <string>

namespace shogi {

/// Base class for every user-facing failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised while reading the pattern text format.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace shogi
