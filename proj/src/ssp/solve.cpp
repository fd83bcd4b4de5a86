#include "ssp/solve.hpp"

#include <limits>

namespace tamp::ssp {

double bracketValue(const SSPInstance& ssp, const ValueTable& table,
                    int stepsToGo, const SSPInstance::Transition& t) {
  (void)ssp;
  double sum = 0.0;
  for (const auto& [p, next] : t.outcomes)
    sum += p.toDouble() * table.v[stepsToGo - 1][next];
  return sum;
}

ValueTable solve(const SSPInstance& ssp) {
  constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
  ValueTable table;
  table.horizon = ssp.horizon;
  table.v.assign(ssp.horizon + 1,
                 std::vector<double>(ssp.stateCount(), 0.0));

  for (int s = 0; s < ssp.stateCount(); ++s) table.v[0][s] = ssp.reward[s];

  for (int i = 1; i <= ssp.horizon; ++i) {
    for (int s = 0; s < ssp.stateCount(); ++s) {
      if (ssp.goal[s]) {
        table.v[i][s] = 0.0;
        continue;
      }
      double best = kMinusInf;
      for (const auto& t : ssp.transitions[s]) {
        double v = bracketValue(ssp, table, i, t);
        if (v > best) best = v;
      }
      table.v[i][s] = ssp.reward[s] + best;
    }
  }
  return table;
}

}  // namespace tamp::ssp
