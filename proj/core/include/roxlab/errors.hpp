#pragma once

#include <stdexcept>
#include <string>

namespace roxlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad widths, violated parameter constraints, unmet preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Extract-collision found no round whose compression inputs differ while the
// outputs agree. Signals the 2^-n failure event or non-colliding inputs.
class NoCollidingRound : public Error {
 public:
  using Error::Error;
};

// Attempt to program an oracle point that was already evaluation-queried.
class LateProgramming : public Error {
 public:
  using Error::Error;
};

}  // namespace roxlab
