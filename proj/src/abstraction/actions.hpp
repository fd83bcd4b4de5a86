#pragma once

#include <string>
#include <vector>

#include "abstraction/state.hpp"
#include "core/rational.hpp"
#include "lang/model.hpp"

namespace tamp::abstraction {

struct AbstractOutcome {
  Rational probability;
  std::vector<lang::Literal> add;
  std::vector<lang::Literal> del;
  bool setsBatteryFlag = false;
};

/// Action schema with all continuous arguments projected out. Literals
/// that only constrain continuous arguments are dropped (they become
/// constraints solved by concretization); batterySufficient(?tr) becomes
/// a requirement on the zero-arity flag; numeric battery effects become
/// "?" marks under the optimistic semantics (no abstract effect at all).
struct AbstractActionSchema {
  int source = -1;  // index into Domain::actions
  std::string name;
  std::vector<lang::Param> params;          // the surviving discrete params
  std::vector<lang::Literal> precond;       // retained literals only
  std::vector<lang::Literal> droppedPrecond;  // concretization-time constraints
  bool requiresBatteryFlag = false;
  std::vector<AbstractOutcome> outcomes;
  std::vector<std::string> affectedUnknown;  // "?"-marked names, sorted
  Rational cost{1};
};

AbstractActionSchema abstractAction(const lang::ActionSchema& a,
                                    const lang::Domain& d);

/// Abstract schema instantiated with problem objects; the unit the SSP
/// plans over. Fact references are interned ids.
struct GroundedAbstractAction {
  int schema = -1;              // index into the abstract schema list
  int sourceGrounding = -1;     // index into the lang::groundActions list
  std::vector<int> args;        // object indices
  std::string name;             // "move(dock,leftWing)"
  std::vector<FactId> precondPos;
  std::vector<FactId> precondNeg;
  bool requiresBatteryFlag = false;
  struct Out {
    Rational probability;
    std::vector<FactId> add;
    std::vector<FactId> del;
    bool setsBatteryFlag = false;
  };
  std::vector<Out> outcomes;
  Rational cost{1};
};

/// Abstracts every schema and instantiates it over the problem's
/// objects. Order matches lang::groundActions.
struct AbstractModel {
  std::vector<AbstractActionSchema> schemas;   // by domain action index
  std::vector<GroundedAbstractAction> actions;
};

AbstractModel buildAbstractModel(const lang::Domain& d,
                                 const lang::Problem& p, FactTable& table);

bool applicable(const AbstractState& s, const GroundedAbstractAction& a);

/// Optimistic transition: retained adds/deletes apply, "?"-marked
/// effects leave their predicates untouched, the battery flag is never
/// lowered.
AbstractState applyOutcome(const AbstractState& s,
                           const GroundedAbstractAction::Out& out);

}  // namespace tamp::abstraction
