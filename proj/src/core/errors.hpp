#pragma once

#include <stdexcept>
#include <string>

namespace tamp {

struct PlannerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the offending position.
struct SyntaxError : PlannerError {
  SyntaxError(int line, int col, const std::string& msg)
      : PlannerError("syntax error at " + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Well-formed input that violates a semantic rule (probability sums,
/// undeclared names, bad horizon, region overlaps an obstacle...).
struct ValidationError : PlannerError {
  using PlannerError::PlannerError;
};

/// A reachable non-goal state with no applicable action.
struct DeadEndError : PlannerError {
  using PlannerError::PlannerError;
};

/// The abstract model admits no policy that reaches the goal.
struct UnsolvableError : PlannerError {
  using PlannerError::PlannerError;
};

/// Re-solving after a failure adjustment lost the goal.
struct UnsolvableAfterAdjustmentError : PlannerError {
  using PlannerError::PlannerError;
};

/// Forward exploration exceeded the configured state cap.
struct StateCapError : PlannerError {
  using PlannerError::PlannerError;
};

}  // namespace tamp
