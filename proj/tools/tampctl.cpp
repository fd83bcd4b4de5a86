// Command-line front end: `plan` runs one scenario, `sweep` runs a
// failure-rate x seed grid. Exit codes: 0 threshold reached (or queue
// drained), 2 resource-limit stop, 1 error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core/errors.hpp"
#include "harness/run.hpp"
#include "harness/scenario.hpp"

namespace {

using tamp::Rational;

std::vector<Rational> parseRates(const std::string& text) {
  std::vector<Rational> rates;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) rates.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return rates;
}

/// "1..5" or "1,2,7".
std::vector<std::uint64_t> parseSeeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::uint64_t lo = std::stoull(text.substr(0, dots));
    std::uint64_t hi = std::stoull(text.substr(dots + 2));
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) seeds.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anytime task-and-motion MDP policy synthesizer"};
  app.require_subcommand(1);

  // ---- plan ----
  auto* plan = app.add_subcommand("plan", "solve and refine one scenario");
  std::string scenarioFile, domainFile, problemFile, workspaceFile;
  std::string profileOut, treeOut, outDir = "out";
  int horizon = 0;
  double threshold = -1.0, timeLimit = 0.0, replanBias = -1.0;
  std::uint64_t seed = 0;
  std::string failureRate;
  plan->add_option("--scenario", scenarioFile, "scenario JSON file");
  plan->add_option("--domain", domainFile, "domain file (.sdom)");
  plan->add_option("--problem", problemFile, "problem file (.sprob)");
  plan->add_option("--workspace", workspaceFile, "workspace file (.wspc)");
  plan->add_option("--horizon", horizon, "override the problem horizon");
  plan->add_option("--threshold", threshold,
                   "stop once this probability mass is refined");
  plan->add_option("--seed", seed, "master random seed");
  plan->add_option("--time-limit", timeLimit, "wall-clock limit in seconds");
  plan->add_option("--replan-bias", replanBias,
                   "probability of the replan branch on failure");
  plan->add_option("--failure-rate", failureRate,
                   "stochastic action failure rate, e.g. 0.05");
  plan->add_option("--profile-out", profileOut, "profile CSV path");
  plan->add_option("--tree-out", treeOut, "serialized policy tree path");
  plan->add_option("--out-dir", outDir, "directory for outputs");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "failure-rate x seed grid");
  std::string sweepScenario, ratesText = "0.05,0.1,0.2", seedsText = "1..5";
  std::string sweepOutDir = "out/sweep";
  double sweepThreshold = -1.0, sweepTimeLimit = 0.0;
  sweep->add_option("--scenario", sweepScenario, "scenario JSON file")
      ->required();
  sweep->add_option("--rates", ratesText, "comma-separated failure rates");
  sweep->add_option("--seeds", seedsText, "seed list: 1..5 or 1,2,7");
  sweep->add_option("--threshold", sweepThreshold, "refinement threshold");
  sweep->add_option("--time-limit", sweepTimeLimit,
                    "wall-clock limit per run, seconds");
  sweep->add_option("--out-dir", sweepOutDir, "directory for outputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan) {
      tamp::harness::Scenario scenario;
      if (!scenarioFile.empty()) {
        scenario = tamp::harness::loadScenario(scenarioFile);
      } else if (domainFile.empty() || problemFile.empty() ||
                 workspaceFile.empty()) {
        std::cerr << "plan needs --scenario or all of --domain/--problem/"
                     "--workspace\n";
        return 1;
      }
      if (!domainFile.empty()) scenario.domainFile = domainFile;
      if (!problemFile.empty()) scenario.problemFile = problemFile;
      if (!workspaceFile.empty()) scenario.workspaceFile = workspaceFile;
      if (horizon > 0) scenario.horizonOverride = horizon;
      if (!failureRate.empty())
        scenario.failureRate = Rational::parse(failureRate);

      tamp::anytime::AnytimeConfig config;
      config.threshold = threshold >= 0 ? threshold : scenario.threshold;
      config.seed = seed;
      config.resourceLimitSeconds = timeLimit;
      if (replanBias >= 0) config.replanBias = replanBias;

      tamp::harness::RunReport report =
          tamp::harness::runScenario(scenario, config, outDir, "plan_");
      if (!profileOut.empty())
        std::filesystem::copy_file(
            report.profilePath, profileOut,
            std::filesystem::copy_options::overwrite_existing);
      if (!treeOut.empty())
        std::filesystem::copy_file(
            report.treePath, treeOut,
            std::filesystem::copy_options::overwrite_existing);

      std::cout << "proportion_refined=" << report.finalProportionRefined
                << " replans=" << report.replans
                << " backtracks=" << report.backtracks
                << " wall_seconds=" << report.wallClockSeconds << "\n"
                << "report: " << report.reportPath << "\n";
      return report.cause == tamp::anytime::StopCause::ResourceLimit ? 2 : 0;
    }

    if (*sweep) {
      tamp::harness::Scenario scenario =
          tamp::harness::loadScenario(sweepScenario);
      tamp::anytime::AnytimeConfig config;
      config.threshold =
          sweepThreshold >= 0 ? sweepThreshold : scenario.threshold;
      config.resourceLimitSeconds = sweepTimeLimit;
      std::string agg = tamp::harness::sweepFailureRates(
          scenario, parseRates(ratesText), parseSeeds(seedsText), config,
          sweepOutDir);
      std::cout << "aggregate: " << agg << "\n";
      return 0;
    }
  } catch (const tamp::PlannerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
