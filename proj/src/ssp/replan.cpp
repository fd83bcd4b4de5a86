#include "ssp/replan.hpp"

#include <functional>

#include "core/errors.hpp"

namespace tamp::ssp {

namespace {

void invalidate(PolicyNode* node,
                std::map<std::uint64_t, std::vector<int>>& removed) {
  node->status = RefineStatus::Invalidated;
  removed.erase(node->id);
  for (auto& child : node->children) invalidate(child.get(), removed);
}

}  // namespace

ReplanStats replan(PolicyTree& tree, const ReplanContext& ctx,
                   PolicyNode* failureNode, const FailureReason& reason) {
  ReplanStats stats;
  if (failureNode->status == RefineStatus::Invalidated)
    throw ValidationError("replan target is an invalidated node");
  if (failureNode->goal) return stats;  // goal nodes never fail

  int subHorizon = tree.horizon() - failureNode->depth;
  if (subHorizon <= 0)
    throw ValidationError("cannot replan at a horizon leaf");

  ActionMask mask = tree.effectiveMask(failureNode);
  if (reason.kind == FailureReason::Kind::NoCollisionFreePath) {
    mask[reason.failedAction] = true;
    tree.removedActions[failureNode->id].push_back(reason.failedAction);
  }

  abstraction::AbstractState adjusted = failureNode->state;
  if (reason.kind == FailureReason::Kind::InsufficientBattery)
    adjusted.batterySufficient = false;

  Rational oldGoalProb = subtreeGoalProbability(failureNode);

  std::unique_ptr<PolicyNode> fresh;
  try {
    SSPInstance ssp = buildSSP(*ctx.model, adjusted, ctx.goalFacts, subHorizon,
                               mask, ctx.stateCap);
    ValueTable table = solve(ssp);
    stats.states = ssp.stateCount();
    stats.horizon = subHorizon;
    for (const auto& ts : ssp.transitions)
      for (const auto& t : ts) stats.transitionWork += t.outcomes.size();
    std::uint64_t counter = tree.peekId();
    fresh = unrollPolicy(ssp, table, counter, failureNode->depth,
                         failureNode->outcomeProbability,
                         failureNode->pathProbability);
    tree.bumpIdsTo(counter);
  } catch (const DeadEndError& e) {
    throw UnsolvableAfterAdjustmentError(
        std::string("no policy exists after adjustment: ") + e.what());
  }

  // A rare branch may honestly lose the goal (e.g. no horizon left for a
  // recharge detour); that subtree splices in with non-goal leaves. Only
  // losing every goal-reaching outcome of the whole policy is an error.
  Rational treeGoal = tree.goalProbability();
  Rational afterSplice = treeGoal -
                         failureNode->pathProbability * oldGoalProb +
                         failureNode->pathProbability *
                             subtreeGoalProbability(fresh.get());
  if (!treeGoal.isZero() && afterSplice.isZero())
    throw UnsolvableAfterAdjustmentError(
        "adjustment at node " + std::to_string(failureNode->id) +
        " removed every goal-reaching policy");

  for (auto& child : failureNode->children)
    invalidate(child.get(), tree.removedActions);

  failureNode->state = std::move(adjusted);
  failureNode->action = fresh->action;
  failureNode->goal = fresh->goal;
  failureNode->status = RefineStatus::Unrefined;
  failureNode->children = std::move(fresh->children);
  for (auto& child : failureNode->children) child->parent = failureNode;

  int nodes = 0;
  std::function<void(const PolicyNode*)> count = [&](const PolicyNode* n) {
    ++nodes;
    for (const auto& c : n->children) count(c.get());
  };
  count(failureNode);
  stats.subtreeNodes = nodes;
  return stats;
}

}  // namespace tamp::ssp
