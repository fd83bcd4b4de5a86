#include "abstraction/generator.hpp"

#include <stdexcept>

#include "core/errors.hpp"

namespace tamp::abstraction {

double pathCostEstimate(const std::vector<GeneratorSpec>& path) {
  if (path.empty())
    throw std::invalid_argument("pathCostEstimate: empty path");
  double cost = 1.0;
  for (const GeneratorSpec& spec : path) cost *= spec.rangeMeasure();
  return cost;
}

Generator::Generator(GeneratorSpec spec, std::uint64_t seed,
                     const geom::Workspace& w, const geom::RrtParams& params)
    : spec_(std::move(spec)),
      rng_(seed),
      workspace_(&w),
      params_(params),
      remaining_(spec_.budget) {}

std::optional<Binding> Generator::next(const BindingContext& ctx) {
  (void)ctx;  // uniform sampling by design; see BindingContext
  while (remaining_ > 0) {
    --remaining_;
    if (spec_.range.kind == GeneratorKind::TargetRegion) {
      try {
        geom::Pose p =
            geom::samplePoseInRegion(spec_.range.target, *workspace_, rng_);
        return Binding{p, std::nullopt, {}};
      } catch (const ValidationError&) {
        // Region produced nothing; the attempt consumed budget.
        continue;
      }
    }
    auto pattern = geom::inspectionTrajectory(
        spec_.range.target, *workspace_, rng_, spec_.envelopeHalfWidth,
        params_);
    pendingWork_ += pattern.rrtIterations;
    if (pattern.trajectory)
      return Binding{std::nullopt, std::move(*pattern.trajectory),
                     std::move(pattern.waypoints)};
  }
  return std::nullopt;
}

int Generator::takeWork() {
  int w = pendingWork_;
  pendingWork_ = 0;
  return w;
}

}  // namespace tamp::abstraction
