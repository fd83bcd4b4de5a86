#include "abstraction/actions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/errors.hpp"

namespace tamp::abstraction {

namespace {

bool mentionsContinuous(const lang::Literal& lit,
                        const lang::ActionSchema& a) {
  for (const std::string& arg : lit.args) {
    for (const lang::Param& p : a.continuousParams)
      if (p.name == arg) return true;
  }
  return false;
}

}  // namespace

AbstractActionSchema abstractAction(const lang::ActionSchema& a,
                                    const lang::Domain& d) {
  AbstractActionSchema out;
  out.name = a.name;
  out.params = a.discreteParams;
  out.cost = a.cost;
  out.source = -1;
  for (size_t i = 0; i < d.actions.size(); ++i)
    if (&d.actions[i] == &a) out.source = static_cast<int>(i);

  for (const lang::Literal& lit : a.precond) {
    if (lit.pred == lang::kBatterySufficient) {
      out.requiresBatteryFlag = true;
    } else if (mentionsContinuous(lit, a)) {
      out.droppedPrecond.push_back(lit);
    } else {
      out.precond.push_back(lit);
    }
  }

  std::set<std::string> unknown;
  bool allOutcomesSetFlag = !a.outcomes.empty();
  for (const lang::Outcome& src : a.outcomes) {
    AbstractOutcome ao;
    ao.probability = src.probability;
    std::vector<lang::Literal> effective = a.commonEffects;
    effective.insert(effective.end(), src.effects.begin(), src.effects.end());
    for (const lang::Literal& lit : effective) {
      if (lit.pred == lang::kBatterySufficient) {
        ao.setsBatteryFlag = true;
      } else if (mentionsContinuous(lit, a)) {
        unknown.insert(lit.pred);
      } else if (lit.negated) {
        lang::Literal positive = lit;
        positive.negated = false;
        ao.del.push_back(std::move(positive));
      } else {
        ao.add.push_back(lit);
      }
    }
    bool hasNumeric = !a.numericEffects.empty() || !src.numericEffects.empty();
    if (hasNumeric) {
      for (const lang::NumericEffect& ne : a.numericEffects)
        unknown.insert(ne.fluent);
      for (const lang::NumericEffect& ne : src.numericEffects)
        unknown.insert(ne.fluent);
      unknown.insert(lang::kBatterySufficient);
    }
    allOutcomesSetFlag = allOutcomesSetFlag && ao.setsBatteryFlag;
    out.outcomes.push_back(std::move(ao));
  }

  // A declared flag restore dominates the "?" mark.
  if (allOutcomesSetFlag) unknown.erase(lang::kBatterySufficient);
  out.affectedUnknown.assign(unknown.begin(), unknown.end());
  return out;
}

namespace {

lang::GroundedFact groundLiteral(const lang::Literal& lit,
                                 const lang::Domain& d,
                                 const std::map<std::string, int>& binding) {
  lang::GroundedFact f;
  f.pred = d.predicateIndex(lit.pred);
  for (const std::string& arg : lit.args) {
    auto it = binding.find(arg);
    if (it == binding.end())
      throw ValidationError("unbound parameter '" + arg + "' in literal '" +
                            lit.pred + "'");
    f.args.push_back(it->second);
  }
  return f;
}

}  // namespace

AbstractModel buildAbstractModel(const lang::Domain& d,
                                 const lang::Problem& p, FactTable& table) {
  AbstractModel model;
  for (const lang::ActionSchema& a : d.actions)
    model.schemas.push_back(abstractAction(a, d));

  std::vector<lang::GroundedAction> groundings = lang::groundActions(d, p);
  for (size_t gi = 0; gi < groundings.size(); ++gi) {
    const lang::GroundedAction& ga = groundings[gi];
    const AbstractActionSchema& schema = model.schemas[ga.schema];

    GroundedAbstractAction out;
    out.schema = ga.schema;
    out.sourceGrounding = static_cast<int>(gi);
    out.args = ga.args;
    out.name = lang::groundedActionName(ga, d, p);
    out.requiresBatteryFlag = schema.requiresBatteryFlag;
    out.cost = schema.cost;

    std::map<std::string, int> binding;
    for (size_t k = 0; k < schema.params.size(); ++k)
      binding[schema.params[k].name] = ga.args[k];

    for (const lang::Literal& lit : schema.precond) {
      FactId id = table.id(groundLiteral(lit, d, binding));
      (lit.negated ? out.precondNeg : out.precondPos).push_back(id);
    }
    std::sort(out.precondPos.begin(), out.precondPos.end());
    std::sort(out.precondNeg.begin(), out.precondNeg.end());

    for (const AbstractOutcome& ao : schema.outcomes) {
      GroundedAbstractAction::Out o;
      o.probability = ao.probability;
      o.setsBatteryFlag = ao.setsBatteryFlag;
      for (const lang::Literal& lit : ao.add)
        o.add.push_back(table.id(groundLiteral(lit, d, binding)));
      for (const lang::Literal& lit : ao.del)
        o.del.push_back(table.id(groundLiteral(lit, d, binding)));
      std::sort(o.add.begin(), o.add.end());
      std::sort(o.del.begin(), o.del.end());
      out.outcomes.push_back(std::move(o));
    }
    model.actions.push_back(std::move(out));
  }
  return model;
}

bool applicable(const AbstractState& s, const GroundedAbstractAction& a) {
  if (a.requiresBatteryFlag && !s.batterySufficient) return false;
  if (!std::includes(s.facts.begin(), s.facts.end(), a.precondPos.begin(),
                     a.precondPos.end()))
    return false;
  for (FactId f : a.precondNeg)
    if (std::binary_search(s.facts.begin(), s.facts.end(), f)) return false;
  return true;
}

AbstractState applyOutcome(const AbstractState& s,
                           const GroundedAbstractAction::Out& out) {
  AbstractState next;
  next.facts.reserve(s.facts.size() + out.add.size());
  for (FactId f : s.facts) {
    if (!std::binary_search(out.del.begin(), out.del.end(), f))
      next.facts.push_back(f);
  }
  for (FactId f : out.add) next.facts.push_back(f);
  std::sort(next.facts.begin(), next.facts.end());
  next.facts.erase(std::unique(next.facts.begin(), next.facts.end()),
                   next.facts.end());
  next.batterySufficient = s.batterySufficient || out.setsBatteryFlag;
  return next;
}

}  // namespace tamp::abstraction
