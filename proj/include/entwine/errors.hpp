#pragma once

#include <stdexcept>
#include <string>

namespace entwine {

// Scalars or matrices over different fields were combined.
class FieldMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dimensions or tensor shapes do not line up.
class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// quotient_with_projection was asked for span(sub)/span(big) with sub not inside big,
// or reduce() got a vector outside span(big).
class InconsistentQuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebra / coalgebra / (co)module axiom failed during eager validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// psi failed one of the four bow-tie relations. relation() names it.
class BowTieError : public std::runtime_error {
 public:
  BowTieError(std::string relation, const std::string& what)
      : std::runtime_error(what), relation_(std::move(relation)) {}
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

// Something the math guarantees did not hold (d∘d != 0, a cross-check disagreed).
// Always a bug in this library, never a property of the input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed structure file. location() is a JSON pointer-ish path into the document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& what)
      : std::runtime_error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// A 2-cochain of the total complex does not give a first-order deformation.
class CocycleViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entwine
