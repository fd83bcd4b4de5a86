#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "abstraction/actions.hpp"
#include "abstraction/state.hpp"

namespace tamp::ssp {

/// Grounded abstract actions excluded from planning (failure feedback).
using ActionMask = std::vector<bool>;  // by grounded action index; true = removed

/// Finite-horizon stochastic shortest-path instance over the reachable
/// abstract state space. Absorbing goal states self-loop under every
/// action with zero reward; non-goal states pay the (negated) action
/// cost. gamma is fixed at 1.
struct SSPInstance {
  const abstraction::AbstractModel* model = nullptr;
  std::vector<abstraction::AbstractState> states;
  std::unordered_map<abstraction::AbstractState, int> index;
  int initial = 0;
  int horizon = 0;
  std::vector<bool> goal;
  std::vector<double> reward;  // R(s): 0 at goals, else -cost

  struct Transition {
    int action;  // grounded action index
    std::vector<std::pair<Rational, int>> outcomes;  // (probability, state)
  };
  std::vector<std::vector<Transition>> transitions;  // per state

  int stateCount() const { return static_cast<int>(states.size()); }
};

inline constexpr int kDefaultStateCap = 200000;

bool goalSatisfied(const abstraction::AbstractState& s,
                   const std::vector<abstraction::FactId>& goalFacts);

/// Forward exploration from the initial state to depth `horizon`.
/// Throws StateCapError past the cap and DeadEndError never (dead ends
/// surface at policy extraction).
SSPInstance buildSSP(const abstraction::AbstractModel& model,
                     const abstraction::AbstractState& initial,
                     const std::vector<abstraction::FactId>& goalFacts,
                     int horizon, const ActionMask& mask,
                     int stateCap = kDefaultStateCap);

}  // namespace tamp::ssp
