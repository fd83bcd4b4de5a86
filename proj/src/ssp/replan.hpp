#pragma once

#include <cstdint>
#include <vector>

#include "ssp/policy_tree.hpp"

namespace tamp::ssp {

/// Grounded explanation of a refinement failure, consumable by replan.
struct FailureReason {
  enum class Kind { InsufficientBattery, NoCollisionFreePath };

  Kind kind = Kind::NoCollisionFreePath;
  PolicyNode* atNode = nullptr;   // live (non-invalidated) node
  double batteryDeficit = 0.0;    // InsufficientBattery: min deficit observed
  int failedAction = -1;          // NoCollisionFreePath: exhausted instantiation
};

struct ReplanContext {
  const abstraction::AbstractModel* model = nullptr;
  std::vector<abstraction::FactId> goalFacts;
  int stateCap = kDefaultStateCap;
};

/// Adjusts the model by the failure reason, re-solves from the failure
/// node's state with the remaining horizon, and splices the fresh
/// subtree in place of the node's old subtree. Refined ancestors are
/// untouched; the node keeps its id, incoming edge and path probability.
///
///  - InsufficientBattery: batterySufficient goes false in the node's
///    state, which forces the fresh policy through a recharge action.
///  - NoCollisionFreePath: the failing grounded action is removed from
///    the action set for this subtree (and everything below it).
///
/// Size of the re-solve, for work accounting.
struct ReplanStats {
  int states = 0;
  std::uint64_t transitionWork = 0;  // outcome entries touched per sweep
  int horizon = 0;
  int subtreeNodes = 0;
};

/// A goal-state node is a no-op (goal nodes never fail). Throws
/// UnsolvableAfterAdjustmentError when the adjusted model loses the
/// goal that the old subtree could still reach.
ReplanStats replan(PolicyTree& tree, const ReplanContext& ctx,
                   PolicyNode* failureNode, const FailureReason& reason);

}  // namespace tamp::ssp
