#pragma once

#include <stdexcept>
#include <string>

namespace genform {

// Operands live in different coordinate spaces (dim) or carry a different
// value of dm.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EpsilonMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation applied to forms of mixed or unexpected degree.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text or JSON input that does not follow the documented grammar/schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural precondition of a domain object failed an exact check
// (not closed, not invertible, ideal violated, ...).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace genform
