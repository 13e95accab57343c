#pragma once

#include <stdexcept>
#include <string>

namespace k3cy {

/// Caller violated a precondition (bad order, mismatched scales, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose values are out of range.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnboundSymbol : public std::runtime_error {
 public:
  explicit UnboundSymbol(std::string symbol)
      : std::runtime_error("unbound symbol: " + symbol), symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Invariant data that produces a negative or fractional Hodge number.
class InconsistentInvariants : public std::runtime_error {
 public:
  InconsistentInvariants(int p, int q, const std::string& what)
      : std::runtime_error(what), p_(p), q_(q) {}
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

 private:
  int p_;
  int q_;
};

/// Enumeration bound exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3cy
