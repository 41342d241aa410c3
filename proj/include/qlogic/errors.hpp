#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Malformed input structure (bad indices, 0 == 1, label collisions, ...).
/// Distinct from an axiom failure, which is reported through AxiomReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation needed an axiom that the table does not satisfy.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(std::string axiom, const std::string& what)
      : std::runtime_error(what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

class PastingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument is not a valid state / ideal / event / label.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition about primeness or separation failed.
class NotPrimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input symbol or state for an automaton.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a text input, with its 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qlogic
