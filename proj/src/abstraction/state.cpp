#include "abstraction/state.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace tamp::abstraction {

FactTable::FactTable(const lang::Domain& d, const lang::Problem& p)
    : domain_(&d), problem_(&p) {}

FactId FactTable::id(const lang::GroundedFact& f) {
  FactId found = find(f);
  if (found >= 0) return found;
  FactId fresh = static_cast<FactId>(facts_.size());
  facts_.push_back(f);
  auto at = std::lower_bound(
      index_.begin(), index_.end(), f,
      [](const auto& entry, const lang::GroundedFact& key) {
        return entry.first < key;
      });
  index_.insert(at, {f, fresh});
  return fresh;
}

FactId FactTable::find(const lang::GroundedFact& f) const {
  auto at = std::lower_bound(
      index_.begin(), index_.end(), f,
      [](const auto& entry, const lang::GroundedFact& key) {
        return entry.first < key;
      });
  if (at != index_.end() && at->first == f) return at->second;
  return -1;
}

std::string FactTable::name(FactId id) const {
  return lang::factName(facts_.at(id), *domain_, *problem_);
}

RetainedSet RetainedSet::allDiscrete(const lang::Domain& d) {
  RetainedSet r;
  r.predicates.resize(d.predicates.size(), false);
  for (size_t i = 0; i < d.predicates.size(); ++i) {
    const lang::PredicateSchema& ps = d.predicates[i];
    if (ps.builtin) continue;
    bool discrete = std::all_of(
        ps.params.begin(), ps.params.end(),
        [](const lang::Param& p) { return !lang::isContinuous(p.kind); });
    r.predicates[i] = discrete;
  }
  return r;
}

size_t AbstractState::hash() const {
  size_t h = batterySufficient ? 0x9e3779b97f4a7c15ULL : 0x517cc1b727220a95ULL;
  for (FactId f : facts) h = h * 1099511628211ULL + static_cast<size_t>(f) + 1;
  return h;
}

std::string AbstractState::str(const FactTable& table) const {
  std::string s = "{";
  for (size_t i = 0; i < facts.size(); ++i) {
    if (i) s += ", ";
    s += table.name(facts[i]);
  }
  s += "}";
  s += batterySufficient ? " bs" : " !bs";
  return s;
}

AbstractState abstractState(const ConcreteState& x, const RetainedSet& retained,
                            const FactTable& table, double reserve) {
  AbstractState s;
  for (FactId f : x.facts) {
    int pred = table.fact(f).pred;
    if (retained.predicates.at(pred)) s.facts.push_back(f);
  }
  std::sort(s.facts.begin(), s.facts.end());
  s.facts.erase(std::unique(s.facts.begin(), s.facts.end()), s.facts.end());
  s.batterySufficient = !retained.batteryFlag || x.batteryLevel >= reserve;
  return s;
}

}  // namespace tamp::abstraction
