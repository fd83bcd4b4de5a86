#pragma once

#include <vector>

#include "anytime/leaf_queue.hpp"
#include "anytime/refine.hpp"
#include "ssp/instance.hpp"
#include "ssp/policy_tree.hpp"
#include "ssp/replan.hpp"

namespace tamp::anytime {

/// One row per outer-loop iteration (plus the initial sample taken right
/// after unrolling). t is deterministic work-meter time; the meter
/// starts before the initial solve and unroll, so their cost is
/// included.
struct ProfileSample {
  double tSeconds = 0.0;
  double proportionRefined = 0.0;
  double fractionNodesRefined = 0.0;
};

enum class StopCause { ThresholdReached, QueueEmpty, ResourceLimit };

/// One line per refinePath call, for the run's refinement log.
struct RefineLogEntry {
  int iteration = 0;
  std::uint64_t leafId = 0;
  enum class Event { Success, Replan, Backtrack, Interrupted } event =
      Event::Success;
  std::uint64_t failureNodeId = 0;
  ssp::FailureReason::Kind reasonKind =
      ssp::FailureReason::Kind::NoCollisionFreePath;
};

struct AnytimeResult {
  ssp::PolicyTree tree;
  PartialTraj partial;
  std::vector<ProfileSample> profile;
  std::vector<RefineLogEntry> log;
  StopCause cause = StopCause::ThresholdReached;
  Rational proportionRefined{0};
  int replans = 0;
  int backtracks = 0;
  int iterations = 0;
};

struct PlanningModel {
  const abstraction::AbstractModel* model = nullptr;
  abstraction::AbstractState initialState;
  std::vector<abstraction::FactId> goalFacts;  // sorted
  int horizon = 0;
};

/// The anytime outer loop: solve the abstract SSP, unroll the contingent
/// plan, then repeatedly pop the unrefined leaf with the best
/// probability-per-cost ratio and refine its path, feeding geometric
/// failures back into the abstract model via replan. Terminates when the
/// refined probability mass reaches the threshold, the queue empties, or
/// the resource limit hits. Fully deterministic given the seed.
AnytimeResult atmMdpSolve(const PlanningModel& planning,
                          const RefineEnvironment& env,
                          const AnytimeConfig& config);

}  // namespace tamp::anytime
