#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geom/rrt.hpp"
#include "geom/sampling.hpp"
#include "geom/workspace.hpp"

namespace tamp::abstraction {

enum class GeneratorKind { TargetRegion, InspectionEnvelope };

/// Sampling region for one continuous parameter, with its measure inputs.
struct RangeDescriptor {
  GeneratorKind kind = GeneratorKind::TargetRegion;
  std::string target;          // region name / component name
  double area = 1.0;           // sampling region area, m^2
  double referenceArea = 1.0;  // workspace bounding-box area, m^2
};

/// One action instantiation's concretization source: range plus budget.
struct GeneratorSpec {
  RangeDescriptor range;
  int budget = 10;
  bool inspection = false;  // drives the flat battery overhead
  double envelopeHalfWidth = 3.0;

  /// Normalized range measure: budget count x area / reference area,
  /// where the reference is 1% of the workspace bounding box. That puts
  /// single-action measures at O(1)..O(100), so the product over a path
  /// grows with path length (longer paths cost more to refine) while
  /// staying scale-free across scenarios.
  static constexpr double kReferenceFraction = 0.01;

  double rangeMeasure() const {
    return budget * range.area / (kReferenceFraction * range.referenceArea);
  }
};

/// Estimated refinement cost of a path: product of the generator range
/// measures of its actions. Strictly positive.
double pathCostEstimate(const std::vector<GeneratorSpec>& path);

/// Poses already fixed along the path. Target sampling stays uniform and
/// ignores it (no domain-specific biasing); it exists for seeding-free
/// call sites that still need the entry pose.
struct BindingContext {
  std::optional<geom::Pose> entryPose;
};

/// One concretization of the continuous parameters.
struct Binding {
  std::optional<geom::Pose> targetPose;     // TargetRegion kind
  std::optional<geom::Trajectory> pattern;  // InspectionEnvelope kind
  std::vector<geom::Pose> patternWaypoints;  // the axis-ordered samples
};

/// Budgeted, seeded sampler of concretizations for one abstract action
/// instantiation. Yields at most `budget` bindings, deterministically in
/// the seed; exhaustion is the refinement-failure trigger, not a fault.
/// Single-consumer; distinct generators may live on distinct threads.
class Generator {
 public:
  Generator(GeneratorSpec spec, std::uint64_t seed, const geom::Workspace& w,
            const geom::RrtParams& params);

  /// Next binding, or nullopt once the budget is exhausted.
  std::optional<Binding> next(const BindingContext& ctx);

  int remaining() const { return remaining_; }
  const GeneratorSpec& spec() const { return spec_; }

  /// RRT iterations consumed since the last call (work accounting).
  int takeWork();

 private:
  GeneratorSpec spec_;
  RngStream rng_;
  const geom::Workspace* workspace_;
  geom::RrtParams params_;
  int remaining_;
  int pendingWork_ = 0;
};

}  // namespace tamp::abstraction
