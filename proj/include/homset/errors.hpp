#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace homset {

// Exit-code classes used by the CLI: 2 for input/parameter problems,
// 4 for exhausted budgets. Verification verdicts (1) and balance
// verdicts (3) are ordinary return values, not exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Malformed values handed to an operation (bad vertex, bad range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A theorem parameter constraint does not hold; names the constraint.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// An operation's stated precondition does not hold for the given input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// An internal inequality that cannot fail on precondition-satisfying
// inputs failed anyway. Carries the named check and the observed values.
class InvariantBreach : public Error {
 public:
  InvariantBreach(std::string check, double observed, double required)
      : Error("invariant breach: " + check + " (observed " +
              std::to_string(observed) + ", required " +
              std::to_string(required) + ")"),
        check_name(std::move(check)),
        observed(observed),
        required(required) {}
  std::string check_name;
  double observed;
  double required;
};

// A time budget ran out. best_size/best_witness hold the best solution
// found before the deadline, when the failing operation had one.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::string msg) : Error(std::move(msg)) {}
  BudgetExceeded(std::string msg, long long size, std::vector<int> witness,
                 long long nodes)
      : Error(std::move(msg)),
        best_size(size),
        best_witness(std::move(witness)),
        nodes_explored(nodes) {}
  long long best_size = -1;
  std::vector<int> best_witness;
  long long nodes_explored = 0;
};

// File-format errors; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line(line) {}
  int line;
};

}  // namespace homset
