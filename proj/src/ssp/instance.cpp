#include "ssp/instance.hpp"

#include <algorithm>
#include <deque>

#include "core/errors.hpp"

namespace tamp::ssp {

bool goalSatisfied(const abstraction::AbstractState& s,
                   const std::vector<abstraction::FactId>& goalFacts) {
  return std::includes(s.facts.begin(), s.facts.end(), goalFacts.begin(),
                       goalFacts.end());
}

SSPInstance buildSSP(const abstraction::AbstractModel& model,
                     const abstraction::AbstractState& initial,
                     const std::vector<abstraction::FactId>& goalFacts,
                     int horizon, const ActionMask& mask, int stateCap) {
  SSPInstance ssp;
  ssp.model = &model;
  ssp.horizon = horizon;

  auto intern = [&](const abstraction::AbstractState& s) {
    auto it = ssp.index.find(s);
    if (it != ssp.index.end()) return it->second;
    int id = static_cast<int>(ssp.states.size());
    if (id >= stateCap)
      throw StateCapError("reachable abstract states exceed the cap of " +
                          std::to_string(stateCap));
    ssp.states.push_back(s);
    ssp.index.emplace(s, id);
    ssp.goal.push_back(goalSatisfied(s, goalFacts));
    ssp.transitions.emplace_back();
    return id;
  };

  auto masked = [&](int action) {
    return !mask.empty() && mask.at(action);
  };

  ssp.initial = intern(initial);
  std::deque<std::pair<int, int>> frontier{{ssp.initial, 0}};  // (state, depth)
  std::vector<bool> expanded(1, false);

  while (!frontier.empty()) {
    auto [sid, depth] = frontier.front();
    frontier.pop_front();
    if (static_cast<int>(expanded.size()) < ssp.stateCount())
      expanded.resize(ssp.stateCount(), false);
    if (expanded[sid] || depth >= horizon) continue;
    expanded[sid] = true;

    // By value: intern() may grow the state vector while we expand.
    const abstraction::AbstractState s = ssp.states[sid];
    if (ssp.goal[sid]) continue;  // absorbing; self-loops added below

    for (size_t ai = 0; ai < model.actions.size(); ++ai) {
      if (masked(static_cast<int>(ai))) continue;
      const abstraction::GroundedAbstractAction& a = model.actions[ai];
      if (!abstraction::applicable(s, a)) continue;
      SSPInstance::Transition t;
      t.action = static_cast<int>(ai);
      for (const auto& out : a.outcomes) {
        if (out.probability.isZero()) continue;
        abstraction::AbstractState next = abstraction::applyOutcome(s, out);
        int nid = intern(next);
        t.outcomes.emplace_back(out.probability, nid);
        frontier.emplace_back(nid, depth + 1);
      }
      ssp.transitions[sid].push_back(std::move(t));
    }
  }

  // Absorbing self-loops: T(g, a)(g) = 1 for every unmasked action.
  for (int sid = 0; sid < ssp.stateCount(); ++sid) {
    if (!ssp.goal[sid]) continue;
    for (size_t ai = 0; ai < model.actions.size(); ++ai) {
      if (masked(static_cast<int>(ai))) continue;
      SSPInstance::Transition t;
      t.action = static_cast<int>(ai);
      t.outcomes.emplace_back(Rational(1), sid);
      ssp.transitions[sid].push_back(std::move(t));
    }
  }

  // R(s): zero at absorbing goals, else the negated cost of acting in s
  // (the cheapest applicable action when costs are not uniform).
  ssp.reward.resize(ssp.stateCount(), -1.0);
  for (int sid = 0; sid < ssp.stateCount(); ++sid) {
    if (ssp.goal[sid]) {
      ssp.reward[sid] = 0.0;
      continue;
    }
    bool first = true;
    Rational best;
    for (const auto& t : ssp.transitions[sid]) {
      const Rational& c = model.actions[t.action].cost;
      if (first || c < best) {
        best = c;
        first = false;
      }
    }
    ssp.reward[sid] = first ? -1.0 : -best.toDouble();
  }
  return ssp;
}

}  // namespace tamp::ssp
