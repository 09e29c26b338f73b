#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace factorkit {

/// Argument outside the mathematical domain of an operation (v in S, g > f, a > b, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed the configured cutoff.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an engine precondition (e.g. lower bounds passed to max_flow).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph, prescription or indicator text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sharpness construction did not behave as claimed. `clause()` names the
/// inequality or check that broke.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string clause, const std::string& what)
      : std::runtime_error(what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace factorkit
