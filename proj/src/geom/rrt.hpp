#pragma once

#include <cstdint>
#include <optional>

#include "geom/geometry.hpp"
#include "geom/workspace.hpp"

namespace tamp::geom {

struct RrtParams {
  double stepFraction = 0.02;   // extension step as a fraction of the diagonal
  double goalBias = 0.1;
  int iterationCap = 5000;
  double collisionStepDivisor = 4.0;  // validation step = step / divisor

  double step(const Workspace& w) const {
    return stepFraction * w.bounds.diagonal();
  }
  double collisionStep(const Workspace& w) const {
    return step(w) / collisionStepDivisor;
  }
};

struct MotionPlan {
  Trajectory trajectory;
  int iterations = 0;  // RRT iterations consumed (work accounting)
};

/// RRT from p1 to p2 with greedy shortcutting. Deterministic in the seed.
/// Returns nullopt after the iteration cap; failure is a normal outcome
/// that drives generator sampling, not an error.
std::optional<MotionPlan> planMotion(const Pose& p1, const Pose& p2,
                                     const Workspace& w, std::uint64_t seed,
                                     const RrtParams& params = {});

}  // namespace tamp::geom
