#include "anytime/refine.hpp"

#include <algorithm>
#include <limits>

#include "geom/collision.hpp"

namespace tamp::anytime {

namespace {

constexpr std::uint64_t kGeneratorStream = 0x6E;
constexpr std::uint64_t kPlannerStream = 0x50;

struct FragmentView {
  const PartialTraj& partial;
  const std::vector<std::pair<std::uint64_t, PartialEntry>>& fragment;

  bool contains(std::uint64_t id) const {
    if (partial.count(id)) return true;
    return std::any_of(fragment.begin(), fragment.end(),
                       [&](const auto& e) { return e.first == id; });
  }
  const PartialEntry* find(std::uint64_t id) const {
    for (const auto& [fid, entry] : fragment)
      if (fid == id) return &entry;
    auto it = partial.find(id);
    return it == partial.end() ? nullptr : &it->second;
  }
};

/// True if some leaf below `node` has its whole path refined (its mass
/// counts toward proportionRefined right now).
bool refinedLeafBelow(const ssp::PolicyNode* node, const FragmentView& view) {
  if (node->isLeaf()) return true;
  if (!view.contains(node->id)) return false;
  for (const auto& child : node->children)
    if (refinedLeafBelow(child.get(), view)) return true;
  return false;
}

bool poseInRegion(const geom::Pose& p, const geom::Workspace& w,
                  const std::string& regionName) {
  if (regionName.empty() || !w.hasRegion(regionName)) return false;
  return geom::pointInPolygon(p, w.region(regionName));
}

}  // namespace

RefineOutcome refinePath(const std::vector<ssp::PolicyNode*>& path,
                         const PartialTraj& partial,
                         const ssp::PolicyTree& tree,
                         const RefineEnvironment& env,
                         const AnytimeConfig& config, RefineState& state,
                         std::uint64_t masterSeed) {
  RefineOutcome out;
  FragmentView view{partial, out.fragment};
  const auto& actions = tree.model().actions;

  // Head selection: first action node without a motion plan. The prefix
  // before it was refined by earlier calls.
  size_t headIdx = path.size();
  for (size_t i = 0; i < path.size(); ++i) {
    if (path[i]->hasAction() && !partial.count(path[i]->id)) {
      headIdx = i;
      break;
    }
  }
  if (headIdx == path.size()) {  // nothing left to refine
    out.success = true;
    return out;
  }

  geom::Pose pose = env.initialPose;
  double battery = env.initialBattery;
  if (headIdx > 0) {
    const PartialEntry& prev = partial.at(path[headIdx - 1]->id);
    pose = prev.poseAfter;
    battery = prev.batteryAfter;
  }

  for (size_t i = headIdx; i < path.size(); ++i) {
    ssp::PolicyNode* node = path[i];
    if (!node->hasAction()) break;  // terminal leaf
    if (state.limit()) return out;  // fragment preserved, no failure info

    const abstraction::GeneratorSpec& spec = env.generatorFor(node->action);
    int attempt = state.generatorAttempts[node->id]++;
    abstraction::Generator gen(
        spec,
        deriveSeed(masterSeed ^ kGeneratorStream, node->id,
                   static_cast<std::uint64_t>(attempt)),
        *env.workspace, env.rrt);
    RngStream planSeeds(deriveSeed(masterSeed ^ kPlannerStream, node->id,
                                   static_cast<std::uint64_t>(attempt)));

    bool satisfied = false;
    bool sawDeficit = false;
    double minDeficit = std::numeric_limits<double>::infinity();

    while (!state.limit()) {
      auto binding = gen.next(abstraction::BindingContext{pose});
      state.meter.charge(WorkMeter::kUnitsPerSample);
      state.meter.chargeRrt(gen.takeWork());
      if (!binding) break;  // generator exhausted

      geom::Trajectory traj;
      if (binding->targetPose) {
        auto plan = geom::planMotion(pose, *binding->targetPose,
                                     *env.workspace, planSeeds.nextUint(),
                                     env.rrt);
        if (!plan) {
          state.meter.chargeRrt(env.rrt.iterationCap);
          continue;
        }
        state.meter.chargeRrt(plan->iterations);
        traj = std::move(plan->trajectory);
      } else {
        // Inspection pattern: connect the entry pose to its first
        // waypoint, then fly the pattern.
        auto lead = geom::planMotion(pose, binding->pattern->start(),
                                     *env.workspace, planSeeds.nextUint(),
                                     env.rrt);
        if (!lead) {
          state.meter.chargeRrt(env.rrt.iterationCap);
          continue;
        }
        state.meter.chargeRrt(lead->iterations);
        traj = geom::concat(lead->trajectory, *binding->pattern);
      }

      double cost = geom::batteryCost(traj, env.battery, spec.inspection);
      double after = battery - cost;
      // Actions whose precondition demands sufficient battery must keep
      // the dock reserve; recharge-style actions may spend it but not
      // go negative.
      double required =
          actions[node->action].requiresBatteryFlag ? env.battery.reserve : 0.0;
      if (after < required) {
        sawDeficit = true;
        minDeficit = std::min(minDeficit, required - after);
        continue;
      }
      if (poseInRegion(traj.end(), *env.workspace, env.dockRegion))
        after = env.battery.capacity;  // docked: recharge to full

      geom::Pose endPose = traj.end();
      out.fragment.emplace_back(node->id,
                                PartialEntry{std::move(traj), after, endPose});
      pose = endPose;
      battery = after;
      satisfied = true;
      break;
    }

    if (satisfied) continue;
    if (state.limit() && gen.remaining() > 0)
      return out;  // interrupted, not exhausted

    ssp::FailureReason reason;
    reason.atNode = node;
    if (sawDeficit) {
      reason.kind = ssp::FailureReason::Kind::InsufficientBattery;
      reason.batteryDeficit = minDeficit;
    } else {
      reason.kind = ssp::FailureReason::Kind::NoCollisionFreePath;
      reason.failedAction = node->action;
    }

    ssp::PolicyNode* parent = node->parent;
    bool forceReplan = parent == nullptr ||
                       state.backtracks[node->id] >= config.backtrackCap;
    if (!forceReplan && parent != nullptr) {
      // Backtracking invalidates the subtree rooted at the parent; if a
      // fully refined leaf lives there, replan instead of discarding it.
      for (const auto& child : parent->children) {
        if (child.get() != node && refinedLeafBelow(child.get(), view)) {
          forceReplan = true;
          break;
        }
      }
    }

    if (forceReplan || state.chooser.bernoulli(config.replanBias)) {
      out.failureNode = node;
      out.reason = reason;
      return out;
    }

    ++state.backtracks[node->id];
    std::erase_if(out.fragment,
                  [&](const auto& e) { return e.first == parent->id; });
    out.failureNode = parent;
    return out;
  }

  out.success = true;
  return out;
}

}  // namespace tamp::anytime
