#pragma once

#include <stdexcept>

namespace oddrobin {

// Caller violated an operation precondition (bad index, out of table range,
// even input where odd is required, ...). The CLI maps this to exit 64.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A real-valued operation was asked to leave its domain (log of a
// non-positive enclosure, division by an enclosure touching zero, n < 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Internal inconsistency between generated data and expected structure,
// e.g. a corollary endpoint missing from the generated CA sequence.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddrobin
