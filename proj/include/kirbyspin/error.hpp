#pragma once

#include <stdexcept>
#include <string>

namespace kirby {

// Base class for everything this library throws on bad input or a broken
// invariant.  Callers that only care about "did it work" can catch this one.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: move scripts, JSON payloads.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A calculus move whose preconditions fail, or a conserved quantity that
// changed when it must not have.
struct MoveError : Error {
  explicit MoveError(const std::string& what) : Error(what) {}
};

}  // namespace kirby
