#include "anytime/atm_mdp.hpp"

#include <chrono>

#include "core/errors.hpp"
#include "ssp/solve.hpp"

namespace tamp::anytime {

namespace {

std::uint64_t transitionWork(const ssp::SSPInstance& ssp) {
  std::uint64_t n = 0;
  for (const auto& ts : ssp.transitions)
    for (const auto& t : ts) n += t.outcomes.size();
  return n;
}

/// Bellman sweeps are tight arithmetic loops, roughly two orders of
/// magnitude cheaper per touch than an RRT iteration (the meter's unit).
std::uint64_t solveUnits(int states, std::uint64_t transitions, int horizon,
                         int unrolledNodes) {
  return static_cast<std::uint64_t>(states) +
         transitions * static_cast<std::uint64_t>(horizon) / 100 +
         static_cast<std::uint64_t>(unrolledNodes) / 2 + 1;
}

void markRefined(const std::vector<ssp::PolicyNode*>& path,
                 const PartialTraj& partial) {
  for (ssp::PolicyNode* n : path) {
    if (n->hasAction() && partial.count(n->id))
      n->status = ssp::RefineStatus::Refined;
  }
  ssp::PolicyNode* leaf = path.back();
  if (!leaf->hasAction() && pathFullyRefined(leaf, partial))
    leaf->status = ssp::RefineStatus::Refined;
}

void unrefineSubtree(ssp::PolicyNode* node, PartialTraj& partial) {
  partial.erase(node->id);
  if (node->status == ssp::RefineStatus::Refined)
    node->status = ssp::RefineStatus::Unrefined;
  for (auto& child : node->children) unrefineSubtree(child.get(), partial);
}

void eraseSubtreeEntries(ssp::PolicyNode* node, PartialTraj& partial) {
  partial.erase(node->id);
  for (auto& child : node->children)
    eraseSubtreeEntries(child.get(), partial);
}

}  // namespace

AnytimeResult atmMdpSolve(const PlanningModel& planning,
                          const RefineEnvironment& env,
                          const AnytimeConfig& config) {
  AnytimeResult result;
  RefineState state(config.seed);

  // Resource limit: wall clock, optionally unlimited. Timing starts
  // before the abstract solve so the unrolling cost shows in the
  // profile (through the work meter) and in the wall-clock budget.
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(
                      config.resourceLimitSeconds > 0
                          ? config.resourceLimitSeconds
                          : 1e18);
  state.limitReached = [deadline]() {
    return std::chrono::steady_clock::now() >= deadline;
  };

  ssp::ReplanContext replanCtx{planning.model, planning.goalFacts,
                               config.stateCap};

  ssp::SSPInstance instance =
      ssp::buildSSP(*planning.model, planning.initialState, planning.goalFacts,
                    planning.horizon, {}, config.stateCap);
  ssp::ValueTable values = ssp::solve(instance);
  result.tree = ssp::extractPolicyTree(instance, values);
  state.meter.charge(solveUnits(instance.stateCount(),
                                transitionWork(instance), instance.horizon,
                                result.tree.nodeCount()));

  if (result.tree.goalProbability().isZero())
    throw UnsolvableError(
        "the abstract model admits no policy that reaches the goal within "
        "the horizon");

  result.proportionRefined =
      computeProportionRefined(result.tree, result.partial);
  result.profile.push_back({state.meter.seconds(),
                            result.proportionRefined.toDouble(),
                            fractionNodesRefined(result.tree, result.partial)});

  LeafQueue queue = estimatePathCosts(result.tree, result.partial, env);

  while (!state.limit() && !queue.empty() &&
         result.proportionRefined.toDouble() < config.threshold) {
    LeafEntry entry = queue.pop();
    std::vector<ssp::PolicyNode*> path =
        ssp::PolicyTree::rootPath(entry.leaf);
    ++result.iterations;

    while (!state.limit()) {
      RefineOutcome out = refinePath(path, result.partial, result.tree, env,
                                     config, state, config.seed);
      // Completed plans are never discarded: merge the fragment on every
      // branch (ancestors of a failing node stay valid across replans).
      for (auto& [id, entryValue] : out.fragment)
        result.partial[id] = std::move(entryValue);
      markRefined(path, result.partial);

      if (!out.success && out.reason) {
        // Replan branch: adjust the abstract model at the failure node
        // and splice in a fresh subtree. Nothing refined lives below it.
        ++result.replans;
        result.log.push_back({result.iterations, entry.leaf->id,
                              RefineLogEntry::Event::Replan,
                              out.failureNode->id, out.reason->kind});
        eraseSubtreeEntries(out.failureNode, result.partial);
        ssp::ReplanStats stats =
            ssp::replan(result.tree, replanCtx, out.failureNode, *out.reason);
        state.meter.charge(solveUnits(stats.states, stats.transitionWork,
                                      stats.horizon, stats.subtreeNodes));
        break;
      }
      if (out.success) {
        result.log.push_back({result.iterations, entry.leaf->id,
                              RefineLogEntry::Event::Success, 0, {}});
        break;
      }
      if (out.failureNode == nullptr) {  // resource limit interruption
        result.log.push_back({result.iterations, entry.leaf->id,
                              RefineLogEntry::Event::Interrupted, 0, {}});
        break;
      }

      // Backtrack branch: drop the parent's motion plan (and everything
      // under it) and re-refine the same path from that parent.
      ++result.backtracks;
      result.log.push_back({result.iterations, entry.leaf->id,
                            RefineLogEntry::Event::Backtrack,
                            out.failureNode->id, {}});
      unrefineSubtree(out.failureNode, result.partial);
    }

    queue = estimatePathCosts(result.tree, result.partial, env);
    result.proportionRefined =
        computeProportionRefined(result.tree, result.partial);
    result.profile.push_back(
        {state.meter.seconds(), result.proportionRefined.toDouble(),
         fractionNodesRefined(result.tree, result.partial)});
  }

  if (result.proportionRefined.toDouble() >= config.threshold)
    result.cause = StopCause::ThresholdReached;
  else if (queue.empty())
    result.cause = StopCause::QueueEmpty;
  else
    result.cause = StopCause::ResourceLimit;
  return result;
}

}  // namespace tamp::anytime
