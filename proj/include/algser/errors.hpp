#pragma once

#include <stdexcept>
#include <string>

namespace algser {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user data: foreign letters, bad JSON, invalid parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The leading monomial of the zero polynomial was requested.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// Unproductive or unreachable symbols in a grammar description.
class GrammarError : public Error {
 public:
  GrammarError(const std::string& what, std::string symbol)
      : Error(what), symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Fixed-point evaluation of a grammar's series did not stabilize.
class FixedPointError : public Error {
 public:
  FixedPointError(const std::string& what, std::string trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

// A brute-force or degree-bound guard refused to run.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Signals a bug, e.g. a removable singularity whose low coefficients do not vanish.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace algser
