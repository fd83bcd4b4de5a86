#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lang/model.hpp"

namespace tamp::abstraction {

using FactId = std::int32_t;

/// Interning of grounded facts for one problem instance. Ids are dense
/// and assigned in first-seen order, so a fixed enumeration order keeps
/// them deterministic.
class FactTable {
 public:
  FactTable(const lang::Domain& d, const lang::Problem& p);

  FactId id(const lang::GroundedFact& f);
  FactId find(const lang::GroundedFact& f) const;  // -1 if absent
  const lang::GroundedFact& fact(FactId id) const { return facts_.at(id); }
  std::string name(FactId id) const;
  int size() const { return static_cast<int>(facts_.size()); }

  const lang::Domain& domain() const { return *domain_; }
  const lang::Problem& problem() const { return *problem_; }

 private:
  const lang::Domain* domain_;
  const lang::Problem* problem_;
  std::vector<lang::GroundedFact> facts_;
  std::vector<std::pair<lang::GroundedFact, FactId>> index_;  // sorted
};

/// Predicates kept by the abstraction, plus whether the booleanized
/// battery flag is part of the abstract state.
struct RetainedSet {
  std::vector<bool> predicates;  // by Domain predicate index
  bool batteryFlag = true;

  /// Every predicate with only discrete parameters; continuous-argument
  /// predicates become concretization-time constraints.
  static RetainedSet allDiscrete(const lang::Domain& d);
};

/// Equivalence class of concrete states: true facts over the retained
/// predicates plus the booleanized battery flag. Facts stay sorted.
struct AbstractState {
  std::vector<FactId> facts;
  bool batterySufficient = true;

  bool operator==(const AbstractState&) const = default;
  bool operator<(const AbstractState& o) const {
    if (facts != o.facts) return facts < o.facts;
    return batterySufficient < o.batterySufficient;
  }
  size_t hash() const;
  std::string str(const FactTable& table) const;
};

/// Full low-level valuation: all discrete grounded facts plus numeric
/// fluents (batteryLevel).
struct ConcreteState {
  std::vector<FactId> facts;  // sorted
  double batteryLevel = 0.0;
};

/// Projection onto the retained predicates; batterySufficient is
/// booleanized as batteryLevel >= reserve (charge to reach the dock).
AbstractState abstractState(const ConcreteState& x, const RetainedSet& retained,
                            const FactTable& table, double reserve);

}  // namespace tamp::abstraction

template <>
struct std::hash<tamp::abstraction::AbstractState> {
  size_t operator()(const tamp::abstraction::AbstractState& s) const {
    return s.hash();
  }
};
