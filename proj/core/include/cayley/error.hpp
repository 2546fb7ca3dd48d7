#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit arithmetic left its range. Never silently wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The dispatcher has no decision procedure for this matrix shape.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

// Bounded mHNF search found no canonical form.
class NotCanonicalizable : public Error {
 public:
  using Error::Error;
};

// A finite graph carries a self-loop, so no coloring exists.
class NoProperColoring : public Error {
 public:
  using Error::Error;
};

// A search or construction exceeded its configured node or vertex cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input parsed but fails a semantic check (non-unit vector, mixed fields...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed. Always a bug somewhere.
class InternalViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
