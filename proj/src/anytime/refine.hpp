#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abstraction/generator.hpp"
#include "core/rng.hpp"
#include "geom/battery.hpp"
#include "geom/rrt.hpp"
#include "geom/workspace.hpp"
#include "ssp/replan.hpp"

namespace tamp::anytime {

/// Concrete bookkeeping for one refined node: its motion plan, the
/// battery remaining after it, and the pose the plan ends at.
struct PartialEntry {
  geom::Trajectory trajectory;
  double batteryAfter = 0.0;
  geom::Pose poseAfter;
};

/// Refined nodes by id. If a node is present, all of its refined
/// ancestors are present; battery values chain consistently.
using PartialTraj = std::map<std::uint64_t, PartialEntry>;

/// Deterministic work meter standing in for wall time. Profiles are a
/// function of the computation performed, so identical seeds give
/// byte-identical profiles; the wall clock only enforces the resource
/// limit.
class WorkMeter {
 public:
  static constexpr double kSecondsPerUnit = 2e-6;
  static constexpr std::uint64_t kUnitsPerSample = 5;

  void charge(std::uint64_t units) { units_ += units; }
  void chargeRrt(int iterations) {
    units_ += static_cast<std::uint64_t>(iterations);
  }
  std::uint64_t units() const { return units_; }
  double seconds() const { return static_cast<double>(units_) * kSecondsPerUnit; }

 private:
  std::uint64_t units_ = 0;
};

/// Geometric and scenario wiring the refinement loop plans against.
struct RefineEnvironment {
  const geom::Workspace* workspace = nullptr;
  geom::BatteryModel battery;
  geom::RrtParams rrt;
  geom::Pose initialPose;
  double initialBattery = 0.0;
  std::string dockRegion;  // arriving in this region restores full charge
  /// Concretization source per grounded abstract action index.
  std::vector<abstraction::GeneratorSpec> generators;

  const abstraction::GeneratorSpec& generatorFor(int action) const {
    return generators.at(action);
  }
};

struct AnytimeConfig {
  double threshold = 1.0;  // t: stop once this probability mass is refined
  double replanBias = 0.5;
  double resourceLimitSeconds = 0.0;  // wall clock; 0 = unlimited
  std::uint64_t seed = 0;
  int backtrackCap = 5;  // per node; forces the replan branch after that
  int stateCap = ssp::kDefaultStateCap;
};

/// Result of one refinePath walk.
///  - success: the whole path now has motion plans.
///  - replan branch: failureNode = the failing node, reason set.
///  - backtrack branch: failureNode = the failing node's parent, no
///    reason; the caller drops the parent's entry and re-refines.
///  - resource limit: no failureNode, no reason; fragment preserved.
struct RefineOutcome {
  bool success = false;
  std::vector<std::pair<std::uint64_t, PartialEntry>> fragment;
  ssp::PolicyNode* failureNode = nullptr;
  std::optional<ssp::FailureReason> reason;
};

/// Mutable per-run refinement state shared across refinePath calls.
struct RefineState {
  RngStream chooser;  // Bernoulli(replanBias) draws
  std::map<std::uint64_t, int> generatorAttempts;  // per node
  std::map<std::uint64_t, int> backtracks;         // per node
  WorkMeter meter;
  std::function<bool()> limitReached;  // polled between samples; may be empty

  explicit RefineState(std::uint64_t seed)
      : chooser(deriveSeed(seed, 0xC401CE)) {}

  bool limit() const { return limitReached && limitReached(); }
};

/// Walks the path root-to-leaf, skipping the already-refined prefix, and
/// concretizes each action: sample a target from the node's generator,
/// call the motion planner, debit the battery. Battery shortfalls below
/// the dock reserve (or below zero for reserve-exempt recharge actions)
/// fail the sample; exhausting the generator fails the node and a
/// Bernoulli(replanBias) draw picks the replan or backtrack branch.
/// The backtrack branch is forced to replan when the failing node is the
/// root, when the per-node backtrack cap is hit, or when backtracking
/// would discard an already fully-refined leaf (keeps the refined
/// probability mass monotone).
RefineOutcome refinePath(const std::vector<ssp::PolicyNode*>& path,
                         const PartialTraj& partial,
                         const ssp::PolicyTree& tree,
                         const RefineEnvironment& env,
                         const AnytimeConfig& config, RefineState& state,
                         std::uint64_t masterSeed);

}  // namespace tamp::anytime
