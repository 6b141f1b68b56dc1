#pragma once

#include <stdexcept>
#include <string>

namespace hig {

// Base of every exception thrown by the core library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (expressions, rationals, labels, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request: division by zero, negative powers of
// t or s, operations on mismatched contexts, n out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A basis label outside the legal index ranges for the given n.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A linear system that the theory guarantees to be solvable was not. Seeing
// this means a table or a normal form is wrong.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hig
