#include "lang/model.hpp"

#include <algorithm>

namespace tamp::lang {

const Param* ActionSchema::findParam(const std::string& name) const {
  for (const Param& p : discreteParams)
    if (p.name == name) return &p;
  for (const Param& p : continuousParams)
    if (p.name == name) return &p;
  return nullptr;
}

int Domain::predicateIndex(const std::string& name) const {
  for (size_t i = 0; i < predicates.size(); ++i)
    if (predicates[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Domain::hasType(const std::string& name) const {
  return std::find(objectTypes.begin(), objectTypes.end(), name) !=
         objectTypes.end();
}

bool Domain::hasFluent(const std::string& name) const {
  return std::find(numericFluents.begin(), numericFluents.end(), name) !=
         numericFluents.end();
}

int Problem::objectIndex(const std::string& name) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].name == name) return static_cast<int>(i);
  return -1;
}

std::string factName(const GroundedFact& f, const Domain& d,
                     const Problem& p) {
  std::string s = d.predicates[f.pred].name;
  if (f.args.empty()) return s;
  s += "(";
  for (size_t i = 0; i < f.args.size(); ++i) {
    if (i) s += ",";
    s += p.objects[f.args[i]].name;
  }
  s += ")";
  return s;
}

std::string groundedActionName(const GroundedAction& a, const Domain& d,
                               const Problem& p) {
  std::string s = d.actions[a.schema].name;
  s += "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += p.objects[a.args[i]].name;
  }
  s += ")";
  return s;
}

std::vector<GroundedAction> groundActions(const Domain& d, const Problem& p) {
  std::vector<GroundedAction> out;
  for (size_t si = 0; si < d.actions.size(); ++si) {
    const ActionSchema& schema = d.actions[si];
    // Candidate objects per discrete parameter, in declaration order.
    std::vector<std::vector<int>> candidates;
    for (const Param& param : schema.discreteParams) {
      std::vector<int> objs;
      for (size_t oi = 0; oi < p.objects.size(); ++oi)
        if (p.objects[oi].type == param.type) objs.push_back(static_cast<int>(oi));
      candidates.push_back(std::move(objs));
    }
    bool empty = std::any_of(candidates.begin(), candidates.end(),
                             [](const auto& c) { return c.empty(); });
    if (empty) continue;

    std::vector<int> binding(candidates.size(), 0);
    for (;;) {
      GroundedAction ga;
      ga.schema = static_cast<int>(si);
      for (size_t k = 0; k < binding.size(); ++k)
        ga.args.push_back(candidates[k][binding[k]]);
      out.push_back(std::move(ga));

      // Odometer increment over the candidate lists.
      size_t k = binding.size();
      while (k > 0) {
        --k;
        if (++binding[k] < static_cast<int>(candidates[k].size())) break;
        binding[k] = 0;
        if (k == 0) goto nextSchema;
      }
      if (binding.empty()) break;  // zero discrete params: single instance
    }
  nextSchema:;
  }
  return out;
}

}  // namespace tamp::lang
