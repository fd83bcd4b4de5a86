#include "harness/scenario.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace tamp::harness {

namespace {

using nlohmann::json;

Rational rationalField(const json& j, const std::string& key,
                       const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  // Exactness matters: route doubles through their shortest decimal text.
  return Rational::parse(v.dump());
}

}  // namespace

Scenario loadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("scenario '" + path + "': " + e.what());
  }

  Scenario s;
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& rel) {
    std::filesystem::path p(rel);
    return p.is_absolute() ? p.string() : (base / p).string();
  };

  try {
    s.domainFile = resolve(j.at("domain").get<std::string>());
    s.problemFile = resolve(j.at("problem").get<std::string>());
    s.workspaceFile = resolve(j.at("workspace").get<std::string>());
    s.failureRate = rationalField(j, "failure_rate", s.failureRate);
    if (j.contains("battery")) {
      const json& b = j.at("battery");
      s.battery.costPerMeter = b.value("cost_per_meter", 1.0);
      s.battery.inspectOverhead = b.value("inspect_overhead", 1.0);
      s.battery.capacity = b.value("capacity", 100.0);
      s.battery.reserve = b.value("reserve", 10.0);
    }
    s.envelopeHalfWidth = j.value("envelope_half_width", 3.0);
    s.defaultBudget = j.value("generator_budget_default", 10);
    s.threshold = j.value("threshold", 0.9);
    s.horizonOverride = j.value("horizon", 0);
    s.dockRegion = j.value("dock_region", std::string("dock"));
    if (j.contains("start_pose")) {
      s.startPose = {j.at("start_pose").at(0).get<double>(),
                     j.at("start_pose").at(1).get<double>()};
    }
    if (j.contains("rrt")) {
      const json& r = j.at("rrt");
      s.rrt.stepFraction = r.value("step_fraction", s.rrt.stepFraction);
      s.rrt.goalBias = r.value("goal_bias", s.rrt.goalBias);
      s.rrt.iterationCap = r.value("iteration_cap", s.rrt.iterationCap);
    }
    if (j.contains("generators")) {
      for (const auto& [name, g] : j.at("generators").items()) {
        GeneratorConfig cfg;
        std::string kind = g.value("kind", std::string("region"));
        if (kind == "region")
          cfg.kind = abstraction::GeneratorKind::TargetRegion;
        else if (kind == "envelope")
          cfg.kind = abstraction::GeneratorKind::InspectionEnvelope;
        else
          throw ValidationError("unknown generator kind '" + kind + "'");
        cfg.target = g.at("target").get<std::string>();
        cfg.budget = g.value("budget", 0);
        cfg.inspection = g.value("inspection", false);
        s.generators[name] = cfg;
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError("scenario '" + path + "': " + e.what());
  }

  if (s.failureRate <= Rational(0) || s.failureRate >= Rational(1))
    throw ValidationError("failure_rate must lie strictly between 0 and 1");
  s.battery.validate();
  return s;
}

void applyFailureRate(lang::Domain& domain, const Rational& failureRate) {
  for (lang::ActionSchema& action : domain.actions) {
    if (action.outcomes.size() < 2) continue;
    Rational failMass(0);
    for (size_t i = 1; i < action.outcomes.size(); ++i)
      failMass += action.outcomes[i].probability;
    action.outcomes[0].probability = Rational(1) - failureRate;
    for (size_t i = 1; i < action.outcomes.size(); ++i) {
      if (failMass.isZero()) {
        // Degenerate source file: spread the failure mass uniformly.
        action.outcomes[i].probability =
            failureRate / Rational(static_cast<long long>(
                              action.outcomes.size() - 1));
      } else {
        action.outcomes[i].probability =
            failureRate * action.outcomes[i].probability / failMass;
      }
    }
  }
}

namespace {

/// "{?to}Area" with ?to bound to leftWing -> "leftWingArea".
std::string resolveTarget(const std::string& tmpl,
                          const abstraction::AbstractActionSchema& schema,
                          const std::vector<int>& args,
                          const lang::Problem& problem) {
  std::string out;
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out.push_back(tmpl[i++]);
      continue;
    }
    size_t close = tmpl.find('}', i);
    if (close == std::string::npos)
      throw ValidationError("unterminated placeholder in target '" + tmpl +
                            "'");
    std::string param = tmpl.substr(i + 1, close - i - 1);
    bool found = false;
    for (size_t k = 0; k < schema.params.size(); ++k) {
      if (schema.params[k].name == param) {
        out += problem.objects[args[k]].name;
        found = true;
        break;
      }
    }
    if (!found)
      throw ValidationError("target placeholder '{" + param +
                            "}' names no discrete parameter of action '" +
                            schema.name + "'");
    i = close + 1;
  }
  return out;
}

}  // namespace

std::unique_ptr<Model> buildModel(const Scenario& scenario) {
  auto model = std::make_unique<Model>();
  model->domain = lang::loadDomain(scenario.domainFile);
  applyFailureRate(model->domain, scenario.failureRate);
  model->problem = lang::loadProblem(scenario.problemFile, model->domain);
  model->workspace = geom::loadWorkspace(scenario.workspaceFile);

  model->horizon = scenario.horizonOverride > 0 ? scenario.horizonOverride
                                                : model->problem.horizon;
  model->table.emplace(model->domain, model->problem);
  model->retained = abstraction::RetainedSet::allDiscrete(model->domain);
  model->abs = abstraction::buildAbstractModel(model->domain, model->problem,
                                               *model->table);

  // Initial abstract state from the problem's init section.
  abstraction::ConcreteState init;
  for (const lang::GroundedFact& f : model->problem.init)
    init.facts.push_back(model->table->id(f));
  std::sort(init.facts.begin(), init.facts.end());
  init.batteryLevel = scenario.battery.capacity;
  bool sawBattery = false;
  for (const lang::FluentInit& fi : model->problem.initFluents) {
    if (fi.fluent == lang::kBatteryLevel) {
      init.batteryLevel = fi.value;
      sawBattery = true;
    }
  }
  if (model->domain.hasFluent(lang::kBatteryLevel) && !sawBattery)
    throw ValidationError("problem does not initialize (= (batteryLevel) V)");
  if (init.batteryLevel < 0 || init.batteryLevel > scenario.battery.capacity)
    throw ValidationError("initial batteryLevel outside [0, capacity]");

  model->initialState = abstraction::abstractState(
      init, model->retained, *model->table, scenario.battery.reserve);

  for (const lang::GroundedFact& f : model->problem.goal)
    model->goalFacts.push_back(model->table->id(f));
  std::sort(model->goalFacts.begin(), model->goalFacts.end());

  // Refinement environment.
  anytime::RefineEnvironment& env = model->env;
  env.workspace = &model->workspace;
  env.battery = scenario.battery;
  env.rrt = scenario.rrt;
  env.initialPose = scenario.startPose;
  env.initialBattery = init.batteryLevel;
  env.dockRegion = scenario.dockRegion;
  if (!model->workspace.hasRegion(scenario.dockRegion))
    throw ValidationError("workspace has no dock region '" +
                          scenario.dockRegion + "'");
  if (!model->workspace.poseFree(scenario.startPose))
    throw ValidationError("start pose is not collision-free");

  const double refArea = model->workspace.bounds.area();
  for (const abstraction::GroundedAbstractAction& ga : model->abs.actions) {
    const std::string& schemaName = model->domain.actions[ga.schema].name;
    auto it = scenario.generators.find(schemaName);
    if (it == scenario.generators.end())
      throw ValidationError("scenario configures no generator for action '" +
                            schemaName + "'");
    const GeneratorConfig& cfg = it->second;
    std::string target = resolveTarget(cfg.target, model->abs.schemas[ga.schema],
                                       ga.args, model->problem);

    abstraction::GeneratorSpec spec;
    spec.range.kind = cfg.kind;
    spec.range.target = target;
    spec.range.referenceArea = refArea;
    spec.budget = cfg.budget > 0 ? cfg.budget : scenario.defaultBudget;
    spec.inspection = cfg.inspection;
    spec.envelopeHalfWidth = scenario.envelopeHalfWidth;
    if (cfg.kind == abstraction::GeneratorKind::TargetRegion) {
      spec.range.area = geom::polygonArea(model->workspace.region(target));
    } else {
      geom::Envelope envlp{&model->workspace.component(target),
                           scenario.envelopeHalfWidth};
      spec.range.area = envlp.area();
    }
    if (spec.range.area <= 0)
      throw ValidationError("generator target '" + target +
                            "' has zero area");
    model->env.generators.push_back(std::move(spec));
  }
  return model;
}

}  // namespace tamp::harness
