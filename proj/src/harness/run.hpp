#pragma once

#include <string>
#include <vector>

#include "harness/scenario.hpp"

namespace tamp::harness {

struct RunReport {
  std::string profilePath;
  std::string treePath;
  std::string logPath;
  std::string reportPath;
  double finalProportionRefined = 0.0;
  double wallClockSeconds = 0.0;
  anytime::StopCause cause = anytime::StopCause::ThresholdReached;
  int replans = 0;
  int backtracks = 0;
  int leafCount = 0;
};

/// Executes atmMdpSolve on the scenario and writes the profile CSV,
/// serialized policy tree, refinement log, and a JSON report. All files
/// are written atomically (temp + rename). Timing starts before the
/// tree is unrolled.
RunReport runScenario(const Scenario& scenario,
                      const anytime::AnytimeConfig& config,
                      const std::string& outDir,
                      const std::string& namePrefix);

/// Keeps the result in memory as well (tests want the tree/partial).
struct RunOutcome {
  RunReport report;
  anytime::AnytimeResult result;
};
RunOutcome runScenarioInMemory(const Scenario& scenario,
                               const anytime::AnytimeConfig& config,
                               const std::string& outDir,
                               const std::string& namePrefix);

/// One run per (rate, seed); writes per-run outputs plus an aggregate
/// CSV `rate,time_fraction,mean_proportion_refined` at time fractions
/// {0.1, 0.2, 0.4, 1.0} of each run's total. Individual run failures
/// leave partial results in place and are skipped in the aggregate.
/// Returns the aggregate CSV path.
std::string sweepFailureRates(const Scenario& base,
                              const std::vector<Rational>& rates,
                              const std::vector<std::uint64_t>& seeds,
                              const anytime::AnytimeConfig& config,
                              const std::string& outDir);

/// Profile CSV text: header line plus one row per sample, fixed decimal
/// format so identical runs give identical bytes.
std::string profileCsv(const std::vector<anytime::ProfileSample>& profile);

void writeFileAtomic(const std::string& path, const std::string& content);

}  // namespace tamp::harness
