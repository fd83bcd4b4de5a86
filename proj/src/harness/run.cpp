#include "harness/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace tamp::harness {

namespace fs = std::filesystem;

void writeFileAtomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out << content;
  }
  fs::rename(tmp, target);
}

std::string profileCsv(const std::vector<anytime::ProfileSample>& profile) {
  std::ostringstream os;
  os << "t_seconds,proportion_refined,fraction_nodes_refined\n";
  char row[128];
  for (const anytime::ProfileSample& s : profile) {
    std::snprintf(row, sizeof(row), "%.6f,%.9f,%.9f\n", s.tSeconds,
                  s.proportionRefined, s.fractionNodesRefined);
    os << row;
  }
  return os.str();
}

namespace {

const char* causeName(anytime::StopCause c) {
  switch (c) {
    case anytime::StopCause::ThresholdReached: return "threshold_reached";
    case anytime::StopCause::QueueEmpty: return "queue_empty";
    case anytime::StopCause::ResourceLimit: return "resource_limit";
  }
  return "?";
}

const char* eventName(anytime::RefineLogEntry::Event e) {
  using Event = anytime::RefineLogEntry::Event;
  switch (e) {
    case Event::Success: return "success";
    case Event::Replan: return "replan";
    case Event::Backtrack: return "backtrack";
    case Event::Interrupted: return "interrupted";
  }
  return "?";
}

std::string refinementLogText(const anytime::AnytimeResult& result) {
  std::ostringstream os;
  for (const anytime::RefineLogEntry& e : result.log) {
    os << e.iteration << " leaf=" << e.leafId << " " << eventName(e.event);
    if (e.event == anytime::RefineLogEntry::Event::Replan) {
      os << " node=" << e.failureNodeId << " reason="
         << (e.reasonKind == ssp::FailureReason::Kind::InsufficientBattery
                 ? "insufficientBattery"
                 : "noCollisionFreePath");
    } else if (e.event == anytime::RefineLogEntry::Event::Backtrack) {
      os << " node=" << e.failureNodeId;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

RunOutcome runScenarioInMemory(const Scenario& scenario,
                               const anytime::AnytimeConfig& config,
                               const std::string& outDir,
                               const std::string& namePrefix) {
  auto started = std::chrono::steady_clock::now();
  std::unique_ptr<Model> model = buildModel(scenario);

  RunOutcome out;
  out.result = anytime::atmMdpSolve(model->planning(), model->env, config);
  out.report.wallClockSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  out.report.finalProportionRefined = out.result.proportionRefined.toDouble();
  out.report.cause = out.result.cause;
  out.report.replans = out.result.replans;
  out.report.backtracks = out.result.backtracks;
  int leaves = 0;
  out.result.tree.forEach([&](const ssp::PolicyNode& n) {
    if (n.isLeaf()) ++leaves;
  });
  out.report.leafCount = leaves;

  fs::path dir(outDir);
  out.report.profilePath = (dir / (namePrefix + "profile.csv")).string();
  out.report.treePath = (dir / (namePrefix + "tree.txt")).string();
  out.report.logPath = (dir / (namePrefix + "refinement.log")).string();
  out.report.reportPath = (dir / (namePrefix + "report.json")).string();

  writeFileAtomic(out.report.profilePath, profileCsv(out.result.profile));
  writeFileAtomic(out.report.treePath, out.result.tree.serializeToString());
  writeFileAtomic(out.report.logPath, refinementLogText(out.result));

  nlohmann::json report{
      {"profile_csv", out.report.profilePath},
      {"tree", out.report.treePath},
      {"refinement_log", out.report.logPath},
      {"final_proportion_refined", out.report.finalProportionRefined},
      {"wall_clock_seconds", out.report.wallClockSeconds},
      {"stop_cause", causeName(out.report.cause)},
      {"replans", out.report.replans},
      {"backtracks", out.report.backtracks},
      {"iterations", out.result.iterations},
      {"leaf_count", out.report.leafCount},
      {"seed", config.seed},
      {"threshold", config.threshold},
      {"failure_rate", scenario.failureRate.str()},
  };
  writeFileAtomic(out.report.reportPath, report.dump(2) + "\n");
  return out;
}

RunReport runScenario(const Scenario& scenario,
                      const anytime::AnytimeConfig& config,
                      const std::string& outDir,
                      const std::string& namePrefix) {
  return runScenarioInMemory(scenario, config, outDir, namePrefix).report;
}

namespace {

/// Proportion refined at a fraction of the run's total meter time:
/// value of the last profile row at or before fraction * total.
double proportionAtFraction(const std::vector<anytime::ProfileSample>& profile,
                            double fraction) {
  double total = profile.back().tSeconds;
  double cutoff = fraction * total;
  double value = 0.0;
  for (const anytime::ProfileSample& s : profile) {
    if (s.tSeconds <= cutoff) value = s.proportionRefined;
  }
  return value;
}

std::string rateTag(const Rational& r) {
  std::string s = r.str();
  for (char& c : s)
    if (c == '/') c = '_';
  return s;
}

}  // namespace

std::string sweepFailureRates(const Scenario& base,
                              const std::vector<Rational>& rates,
                              const std::vector<std::uint64_t>& seeds,
                              const anytime::AnytimeConfig& config,
                              const std::string& outDir) {
  if (rates.empty() || seeds.empty())
    throw ValidationError("sweep needs at least one rate and one seed");

  const std::vector<double> fractions{0.1, 0.2, 0.4, 1.0};
  std::ostringstream agg;
  agg << "rate,time_fraction,mean_proportion_refined\n";

  for (const Rational& rate : rates) {
    std::vector<std::vector<anytime::ProfileSample>> profiles;
    for (std::uint64_t seed : seeds) {
      Scenario scenario = base;
      scenario.failureRate = rate;
      anytime::AnytimeConfig cfg = config;
      cfg.seed = seed;
      std::string prefix =
          "rate" + rateTag(rate) + "_seed" + std::to_string(seed) + "_";
      try {
        RunOutcome run = runScenarioInMemory(scenario, cfg, outDir, prefix);
        profiles.push_back(run.result.profile);
      } catch (const PlannerError& e) {
        std::cerr << "sweep: run " << prefix << "failed: " << e.what()
                  << "\n";
      }
    }
    if (profiles.empty()) continue;
    for (double f : fractions) {
      double mean = 0.0;
      for (const auto& profile : profiles)
        mean += proportionAtFraction(profile, f);
      mean /= static_cast<double>(profiles.size());
      char row[96];
      std::snprintf(row, sizeof(row), "%s,%.2f,%.9f\n", rate.str().c_str(), f,
                    mean);
      agg << row;
    }
  }

  std::string aggPath =
      (fs::path(outDir) / "sweep_aggregate.csv").string();
  writeFileAtomic(aggPath, agg.str());
  return aggPath;
}

}  // namespace tamp::harness
