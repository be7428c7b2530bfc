#pragma once

#include <stdexcept>
#include <string>

namespace sunstrip {

// Precondition violated by an argument value (bad model, bad word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exhaustive search would exceed the configured node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No rational function within the requested degree bound fits the series.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph isomorphism search found zero or several matches.
class StructuralMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input to a bijection is not in its domain.
class InvalidObject : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sunstrip
