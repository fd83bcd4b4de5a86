#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace tamp::lang {

/// Reserved vocabulary. batterySufficient is a builtin numeric comparison
/// evaluated against trajectories by the geometry layer, never a stored
/// fact; its zero-arity form in effects restores the abstract flag.
inline constexpr const char* kBatterySufficient = "batterySufficient";
inline constexpr const char* kBatteryLevel = "batteryLevel";
inline constexpr const char* kTrajectoryCostFn = "c";

enum class ParamKind { Object, Pose, Trajectory };

inline bool isContinuous(ParamKind k) { return k != ParamKind::Object; }

struct Param {
  std::string name;        // "?tr"
  ParamKind kind = ParamKind::Object;
  std::string type;        // object type for discrete params, else ""

  bool operator==(const Param&) const = default;
};

struct PredicateSchema {
  std::string name;
  std::vector<Param> params;
  bool builtin = false;

  bool operator==(const PredicateSchema&) const = default;
};

/// Predicate literal over parameter names and/or object names.
struct Literal {
  bool negated = false;
  std::string pred;
  std::vector<std::string> args;

  bool operator==(const Literal&) const = default;
};

/// decrease of a numeric fluent by the trajectory cost c(?tr).
struct NumericEffect {
  std::string fluent;
  std::string trajectoryParam;

  bool operator==(const NumericEffect&) const = default;
};

struct Outcome {
  Rational probability;
  std::vector<Literal> effects;
  std::vector<NumericEffect> numericEffects;

  bool operator==(const Outcome&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<Param> discreteParams;
  std::vector<Param> continuousParams;
  std::vector<Literal> precond;              // conjunction
  std::vector<Outcome> outcomes;             // probabilities sum to 1 exactly
  std::vector<Literal> commonEffects;        // applied in every outcome
  std::vector<NumericEffect> numericEffects; // applied in every outcome
  Rational cost{1};

  const Param* findParam(const std::string& name) const;
  bool operator==(const ActionSchema&) const = default;
};

struct Domain {
  std::string name;
  std::vector<std::string> objectTypes;
  std::vector<PredicateSchema> predicates;   // includes the builtin entries
  std::vector<std::string> numericFluents;
  std::vector<ActionSchema> actions;

  int predicateIndex(const std::string& name) const;  // -1 if unknown
  bool hasType(const std::string& name) const;
  bool hasFluent(const std::string& name) const;
  bool operator==(const Domain&) const = default;
};

struct Object {
  std::string name;
  std::string type;

  bool operator==(const Object&) const = default;
};

/// Fully grounded predicate over discrete objects.
struct GroundedFact {
  int pred = -1;           // index into Domain::predicates
  std::vector<int> args;   // indices into Problem::objects

  bool operator==(const GroundedFact&) const = default;
  bool operator<(const GroundedFact& o) const {
    if (pred != o.pred) return pred < o.pred;
    return args < o.args;
  }
};

struct FluentInit {
  std::string fluent;
  double value = 0.0;

  bool operator==(const FluentInit&) const = default;
};

struct Problem {
  std::string name;
  std::string domainName;
  std::vector<Object> objects;
  std::vector<GroundedFact> init;
  std::vector<FluentInit> initFluents;
  std::vector<GroundedFact> goal;   // conjunction; absorbing-state condition
  int horizon = 0;

  int objectIndex(const std::string& name) const;  // -1 if unknown
  bool operator==(const Problem&) const = default;
};

/// Action schema with discrete parameters bound to problem objects;
/// continuous parameters stay symbolic.
struct GroundedAction {
  int schema = -1;          // index into Domain::actions
  std::vector<int> args;    // object indices, aligned with discreteParams

  bool operator==(const GroundedAction&) const = default;
};

std::string factName(const GroundedFact& f, const Domain& d, const Problem& p);
std::string groundedActionName(const GroundedAction& a, const Domain& d,
                               const Problem& p);

/// All instantiations of each schema's discrete parameters with
/// type-compatible objects. Grounding never enumerates continuous values.
std::vector<GroundedAction> groundActions(const Domain& d, const Problem& p);

}  // namespace tamp::lang
