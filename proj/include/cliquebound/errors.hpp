#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquebound {

/// Malformed graph input. `position` is a 1-based line number for edge lists
/// and a 0-based byte offset for graph6.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A caller broke an operation's precondition (bad vertex, non-clique seed,
/// epsilon outside [0, x_j], ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The configured recursion-node budget ran out before the search finished.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold (by proof or construction) did not.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace cliquebound
