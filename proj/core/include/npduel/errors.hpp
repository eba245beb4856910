#pragma once

#include <stdexcept>
#include <string>

namespace npduel {

/// Input text could not be parsed (DIMACS CNF, TSP JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant was violated at construction time.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace npduel
