#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "abstraction/actions.hpp"
#include "abstraction/generator.hpp"
#include "abstraction/state.hpp"
#include "anytime/atm_mdp.hpp"
#include "geom/battery.hpp"
#include "geom/workspace.hpp"
#include "lang/parser.hpp"

namespace tamp::harness {

/// Per-action-schema concretization wiring. `target` may contain one
/// {?param} placeholder, replaced by the grounded object's name, e.g.
/// "{?to}Area" -> "leftWingArea".
struct GeneratorConfig {
  abstraction::GeneratorKind kind = abstraction::GeneratorKind::TargetRegion;
  std::string target;
  int budget = 0;  // 0: use the scenario default
  bool inspection = false;
};

struct Scenario {
  std::string domainFile;
  std::string problemFile;
  std::string workspaceFile;
  Rational failureRate{1, 20};
  geom::BatteryModel battery;
  double envelopeHalfWidth = 3.0;
  int defaultBudget = 10;
  std::map<std::string, GeneratorConfig> generators;  // by schema name
  geom::Pose startPose;
  std::string dockRegion = "dock";
  double threshold = 0.9;
  int horizonOverride = 0;  // 0: take it from the problem file
  geom::RrtParams rrt;
};

/// Loads a scenario JSON file; relative paths resolve against the
/// scenario file's directory. failure_rate is parsed exactly (strings
/// like "0.05" or "1/20").
Scenario loadScenario(const std::string& path);

/// Sets every stochastic action's success (first) outcome to
/// 1 - failureRate and rescales the remaining outcomes onto failureRate,
/// exactly. Single-outcome actions are untouched.
void applyFailureRate(lang::Domain& domain, const Rational& failureRate);

/// Everything a run needs, wired together. Stable address: the fact
/// table and environments point into the owned members.
struct Model {
  lang::Domain domain;
  lang::Problem problem;
  geom::Workspace workspace;
  std::optional<abstraction::FactTable> table;
  abstraction::RetainedSet retained;
  abstraction::AbstractModel abs;
  abstraction::AbstractState initialState;
  std::vector<abstraction::FactId> goalFacts;
  int horizon = 0;
  anytime::RefineEnvironment env;

  anytime::PlanningModel planning() const {
    return {&abs, initialState, goalFacts, horizon};
  }
};

/// Parses all scenario files, applies the failure rate, grounds and
/// abstracts the model, and wires generators to workspace regions.
/// Throws on any unresolved name (regions, components, parameters).
std::unique_ptr<Model> buildModel(const Scenario& scenario);

}  // namespace tamp::harness
