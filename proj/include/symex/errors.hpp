// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_ERRORS_HPP_
#define SYMEX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace symex {

// Precondition on an argument violated (unknown element, bad overlap, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A sum specification fails one of its clauses.
class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Basis pairs are not compatible.
class IncompatibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step of an exchange sequence is not a valid symmetric exchange.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(int step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

// A step touches an element of the forbidden set.
class ForbiddenError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Exhaustive search was asked to exceed its element cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The solver has no strategy for the irreducible instance it reached.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that a proven statement guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symex

#endif  // SYMEX_ERRORS_HPP_
