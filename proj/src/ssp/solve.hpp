#pragma once

#include <vector>

#include "ssp/instance.hpp"

namespace tamp::ssp {

/// i-steps-to-go value function, i = 0..horizon. v[0][s] = R(s).
struct ValueTable {
  int horizon = 0;
  std::vector<std::vector<double>> v;  // v[i][state]

  double value(int stepsToGo, int state) const { return v[stepsToGo][state]; }
};

/// One-step lookahead value of an action: sum over outcomes of
/// probability times the (i-1)-steps-to-go successor value.
double bracketValue(const SSPInstance& ssp, const ValueTable& table,
                    int stepsToGo, const SSPInstance::Transition& t);

/// Backward induction:
///   V^0(s) = R(s)
///   V^i(s) = R(s) + max_a sum_{s'} T(s,a)(s') V^{i-1}(s')
/// States with no applicable action take -inf for i >= 1 (dead ends).
ValueTable solve(const SSPInstance& ssp);

}  // namespace tamp::ssp
