#include "lang/parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/sexpr.hpp"

namespace tamp::lang {

namespace {

[[noreturn]] void fail(const Sexpr& at, const std::string& msg) {
  throw SyntaxError(at.line, at.col, msg);
}

const std::string& atomText(const Sexpr& node, const char* what) {
  if (!node.isAtom()) fail(node, std::string("expected ") + what);
  return node.text;
}

bool isVariable(const std::string& name) {
  return !name.empty() && name[0] == '?';
}

ParamKind kindOfType(const std::string& type) {
  if (type == "pose") return ParamKind::Pose;
  if (type == "trajectory") return ParamKind::Trajectory;
  return ParamKind::Object;
}

/// Typed list: ?a ?b - typeX ?c - typeY
std::vector<Param> parseTypedParams(const Sexpr& list, const Domain& d,
                                    bool allowContinuous) {
  std::vector<Param> params;
  std::vector<std::string> pending;
  for (const Sexpr& item : list.items) {
    const std::string& tok = atomText(item, "a parameter or type");
    if (tok == "-") continue;
    if (isVariable(tok)) {
      pending.push_back(tok);
      continue;
    }
    // A type name closes the pending group.
    ParamKind kind = kindOfType(tok);
    if (kind == ParamKind::Object && !d.hasType(tok))
      fail(item, "undeclared type '" + tok + "'");
    if (isContinuous(kind) && !allowContinuous)
      fail(item, "continuous type '" + tok + "' is not allowed here");
    if (pending.empty()) fail(item, "type '" + tok + "' binds no parameters");
    for (const std::string& name : pending)
      params.push_back({name, kind,
                        kind == ParamKind::Object ? tok : std::string()});
    pending.clear();
  }
  if (!pending.empty())
    fail(list, "parameter '" + pending.front() + "' has no type");
  std::set<std::string> seen;
  for (const Param& p : params)
    if (!seen.insert(p.name).second)
      fail(list, "duplicate parameter '" + p.name + "'");
  return params;
}

Literal parseLiteral(const Sexpr& form) {
  const Sexpr* body = &form;
  Literal lit;
  if (form.headIs("not")) {
    if (form.items.size() != 2 || !form.items[1].isList())
      fail(form, "(not ...) takes exactly one literal");
    lit.negated = true;
    body = &form.items[1];
  }
  if (!body->isList() || body->items.empty() || !body->items[0].isAtom())
    fail(*body, "expected a predicate literal");
  lit.pred = body->items[0].text;
  for (size_t i = 1; i < body->items.size(); ++i)
    lit.args.push_back(atomText(body->items[i], "a term"));
  return lit;
}

std::vector<Literal> parseConjunction(const Sexpr& form) {
  std::vector<Literal> lits;
  if (form.headIs("and")) {
    for (size_t i = 1; i < form.items.size(); ++i)
      lits.push_back(parseLiteral(form.items[i]));
  } else {
    lits.push_back(parseLiteral(form));
  }
  return lits;
}

NumericEffect parseDecrease(const Sexpr& form, const Domain& d) {
  // (decrease (FLUENT) (c ?tr))
  if (form.items.size() != 3 || !form.items[1].isList() ||
      form.items[1].items.size() != 1 || !form.items[2].isList() ||
      form.items[2].items.size() != 2)
    fail(form, "expected (decrease (FLUENT) (c ?tr))");
  NumericEffect eff;
  eff.fluent = atomText(form.items[1].items[0], "a fluent name");
  if (!d.hasFluent(eff.fluent))
    fail(form.items[1], "undeclared fluent '" + eff.fluent + "'");
  if (atomText(form.items[2].items[0], "the cost function") !=
      kTrajectoryCostFn)
    fail(form.items[2], "only the trajectory cost form (c ?tr) is supported");
  eff.trajectoryParam = atomText(form.items[2].items[1], "a trajectory parameter");
  return eff;
}

struct EffectBody {
  std::vector<Literal> literals;
  std::vector<NumericEffect> numeric;
};

EffectBody parseEffectItems(const Sexpr& form, const Domain& d) {
  EffectBody body;
  auto takeOne = [&](const Sexpr& item) {
    if (item.headIs("decrease"))
      body.numeric.push_back(parseDecrease(item, d));
    else
      body.literals.push_back(parseLiteral(item));
  };
  if (form.headIs("and")) {
    for (size_t i = 1; i < form.items.size(); ++i) takeOne(form.items[i]);
  } else {
    takeOne(form);
  }
  return body;
}

Rational parseProbability(const Sexpr& node) {
  try {
    Rational p = Rational::parse(atomText(node, "a probability"));
    if (p < Rational(0) || p > Rational(1))
      fail(node, "probability " + p.str() + " outside [0,1]");
    return p;
  } catch (const std::invalid_argument& e) {
    fail(node, e.what());
  }
}

void checkLiteral(const Sexpr& at, const Literal& lit, const Domain& d,
                  const ActionSchema& schema, bool inEffect) {
  int pi = d.predicateIndex(lit.pred);
  if (pi < 0) fail(at, "unknown predicate '" + lit.pred + "'");
  const PredicateSchema& ps = d.predicates[pi];
  if (ps.name == kBatterySufficient) {
    if (inEffect) {
      // Zero-arity form: restores the abstract battery flag.
      if (!lit.args.empty())
        fail(at, "batterySufficient takes no arguments in effects");
      if (lit.negated)
        fail(at, "(not (batterySufficient)) is not supported");
      return;
    }
    if (lit.args.size() != 1)
      fail(at, "batterySufficient takes one trajectory argument");
  } else if (lit.args.size() != ps.params.size()) {
    fail(at, "predicate '" + lit.pred + "' expects " +
             std::to_string(ps.params.size()) + " arguments, got " +
             std::to_string(lit.args.size()));
  }
  for (size_t i = 0; i < lit.args.size(); ++i) {
    const std::string& arg = lit.args[i];
    if (!isVariable(arg))
      fail(at, "argument '" + arg + "' is not an action parameter");
    const Param* p = schema.findParam(arg);
    if (!p) fail(at, "parameter '" + arg + "' is not declared by the action");
    ParamKind want = ps.name == kBatterySufficient ? ParamKind::Trajectory
                                                   : ps.params[i].kind;
    if (p->kind != want ||
        (want == ParamKind::Object && p->type != ps.params[i].type))
      fail(at, "argument '" + arg + "' has the wrong type for '" + lit.pred +
               "'");
    if (inEffect && isContinuous(p->kind) && ps.name != kBatterySufficient &&
        lit.pred != kBatterySufficient) {
      // Allowed: such effects become "?" (unknown) under abstraction.
    }
  }
}

ActionSchema parseAction(const Sexpr& form, const Domain& d) {
  ActionSchema schema;
  schema.name = atomText(form.items[1], "an action name");

  // Keyword sections after the name.
  const Sexpr* parameters = nullptr;
  const Sexpr* precondition = nullptr;
  const Sexpr* effect = nullptr;
  const Sexpr* cost = nullptr;
  for (size_t i = 2; i < form.items.size(); i += 2) {
    const std::string& key = atomText(form.items[i], "an action keyword");
    if (i + 1 >= form.items.size()) fail(form.items[i], key + " has no value");
    const Sexpr& value = form.items[i + 1];
    if (key == ":parameters") parameters = &value;
    else if (key == ":precondition") precondition = &value;
    else if (key == ":effect") effect = &value;
    else if (key == ":cost") cost = &value;
    else fail(form.items[i], "unknown action keyword '" + key + "'");
  }
  if (!parameters || !precondition || !effect)
    fail(form, "action '" + schema.name +
               "' needs :parameters, :precondition and :effect");

  if (!parameters->isList()) fail(*parameters, "expected a parameter list");
  for (Param& p : parseTypedParams(*parameters, d, true)) {
    if (p.kind == ParamKind::Object)
      schema.discreteParams.push_back(std::move(p));
    else
      schema.continuousParams.push_back(std::move(p));
  }

  schema.precond = parseConjunction(*precondition);
  for (const Literal& lit : schema.precond)
    checkLiteral(*precondition, lit, d, schema, false);

  // Effect: optional single probabilistic block plus common literals and
  // numeric decreases applied under every outcome.
  const Sexpr* probabilistic = nullptr;
  std::vector<const Sexpr*> plain;
  if (effect->headIs("and")) {
    for (size_t i = 1; i < effect->items.size(); ++i) {
      const Sexpr& item = effect->items[i];
      if (item.headIs("probabilistic")) {
        if (probabilistic)
          fail(item, "only one probabilistic block per action");
        probabilistic = &item;
      } else {
        plain.push_back(&item);
      }
    }
  } else if (effect->headIs("probabilistic")) {
    probabilistic = effect;
  } else {
    plain.push_back(effect);
  }

  for (const Sexpr* item : plain) {
    if (item->headIs("decrease"))
      schema.numericEffects.push_back(parseDecrease(*item, d));
    else
      schema.commonEffects.push_back(parseLiteral(*item));
  }
  for (const Literal& lit : schema.commonEffects)
    checkLiteral(*effect, lit, d, schema, true);
  for (const NumericEffect& ne : schema.numericEffects)
    if (!schema.findParam(ne.trajectoryParam))
      fail(*effect, "parameter '" + ne.trajectoryParam +
                    "' is not declared by the action");

  if (probabilistic) {
    if ((probabilistic->items.size() - 1) % 2 != 0 ||
        probabilistic->items.size() < 3)
      fail(*probabilistic, "probabilistic expects PROB EFFECT pairs");
    for (size_t i = 1; i < probabilistic->items.size(); i += 2) {
      Outcome out;
      out.probability = parseProbability(probabilistic->items[i]);
      EffectBody body = parseEffectItems(probabilistic->items[i + 1], d);
      out.effects = std::move(body.literals);
      out.numericEffects = std::move(body.numeric);
      for (const Literal& lit : out.effects)
        checkLiteral(probabilistic->items[i + 1], lit, d, schema, true);
      schema.outcomes.push_back(std::move(out));
    }
  } else {
    Outcome out;
    out.probability = Rational(1);
    schema.outcomes.push_back(std::move(out));
  }

  Rational sum(0);
  for (const Outcome& out : schema.outcomes) sum += out.probability;
  if (!sum.isOne())
    throw ValidationError("action '" + schema.name +
                          "': outcome probabilities sum to " + sum.str() +
                          ", expected 1");

  if (cost) {
    try {
      schema.cost = Rational::parse(atomText(*cost, "a cost"));
    } catch (const std::invalid_argument& e) {
      fail(*cost, e.what());
    }
    if (schema.cost <= Rational(0))
      throw ValidationError("action '" + schema.name + "': cost must be > 0");
  }
  return schema;
}

}  // namespace

Domain parseDomain(const std::string& text) {
  Sexpr top = parseSexpr(text);
  if (!top.headIs("domain") || top.items.size() < 2 || !top.items[1].isAtom())
    throw SyntaxError(top.line, top.col, "expected (domain NAME ...)");

  Domain d;
  d.name = top.items[1].text;
  d.predicates.push_back(
      {kBatterySufficient, {{"?tr", ParamKind::Trajectory, ""}}, true});

  // Two passes so predicates may be declared after actions use them? No:
  // declaration order is enforced; collect section forms first to check
  // for unknown top-level forms early.
  for (size_t i = 2; i < top.items.size(); ++i) {
    const Sexpr& form = top.items[i];
    if (!form.isList() || form.items.empty() || !form.items[0].isAtom())
      throw SyntaxError(form.line, form.col, "expected a (:section ...) form");
    const std::string& head = form.items[0].text;
    if (head == ":types") {
      for (size_t k = 1; k < form.items.size(); ++k) {
        const std::string& t = atomText(form.items[k], "a type name");
        if (t == "pose" || t == "trajectory")
          throw ValidationError("type '" + t + "' is reserved");
        if (d.hasType(t)) throw ValidationError("duplicate type '" + t + "'");
        d.objectTypes.push_back(t);
      }
    } else if (head == ":predicates") {
      for (size_t k = 1; k < form.items.size(); ++k) {
        const Sexpr& ps = form.items[k];
        if (!ps.isList() || ps.items.empty() || !ps.items[0].isAtom())
          throw SyntaxError(ps.line, ps.col, "expected (name params...)");
        PredicateSchema schema;
        schema.name = ps.items[0].text;
        if (schema.name == kBatterySufficient)
          throw ValidationError("predicate '" + schema.name + "' is reserved");
        if (d.predicateIndex(schema.name) >= 0)
          throw ValidationError("duplicate predicate '" + schema.name + "'");
        Sexpr paramList = ps;
        paramList.items.erase(paramList.items.begin());
        schema.params = parseTypedParams(paramList, d, true);
        d.predicates.push_back(std::move(schema));
      }
    } else if (head == ":functions") {
      for (size_t k = 1; k < form.items.size(); ++k) {
        const Sexpr& fl = form.items[k];
        if (!fl.isList() || fl.items.size() != 1 || !fl.items[0].isAtom())
          throw SyntaxError(fl.line, fl.col, "expected (fluentName)");
        if (d.hasFluent(fl.items[0].text))
          throw ValidationError("duplicate fluent '" + fl.items[0].text + "'");
        d.numericFluents.push_back(fl.items[0].text);
      }
    } else if (head == ":action") {
      if (form.items.size() < 2)
        throw SyntaxError(form.line, form.col, "action needs a name");
      ActionSchema schema = parseAction(form, d);
      for (const ActionSchema& existing : d.actions)
        if (existing.name == schema.name)
          throw ValidationError("duplicate action '" + schema.name + "'");
      d.actions.push_back(std::move(schema));
    } else {
      throw SyntaxError(form.line, form.col,
                        "unknown top-level form '" + head + "'");
    }
  }
  return d;
}

namespace {

GroundedFact parseFact(const Sexpr& form, const Domain& d, const Problem& p,
                       bool allowZeroArity) {
  (void)allowZeroArity;
  if (!form.isList() || form.items.empty() || !form.items[0].isAtom())
    fail(form, "expected a grounded fact");
  const std::string& pred = form.items[0].text;
  int pi = d.predicateIndex(pred);
  if (pi < 0) fail(form, "unknown predicate '" + pred + "'");
  const PredicateSchema& ps = d.predicates[pi];
  for (const Param& param : ps.params)
    if (isContinuous(param.kind))
      fail(form, "predicate '" + pred +
                 "' has continuous parameters and cannot be a stored fact");
  if (form.items.size() - 1 != ps.params.size())
    fail(form, "predicate '" + pred + "' expects " +
               std::to_string(ps.params.size()) + " arguments");
  GroundedFact fact;
  fact.pred = pi;
  for (size_t i = 1; i < form.items.size(); ++i) {
    const std::string& objName = atomText(form.items[i], "an object name");
    int oi = p.objectIndex(objName);
    if (oi < 0) fail(form.items[i], "unknown object '" + objName + "'");
    if (p.objects[oi].type != ps.params[i - 1].type)
      fail(form.items[i], "object '" + objName + "' has the wrong type for '" +
                          pred + "'");
    fact.args.push_back(oi);
  }
  return fact;
}

}  // namespace

Problem parseProblem(const std::string& text, const Domain& domain) {
  Sexpr top = parseSexpr(text);
  if (!top.headIs("problem") || top.items.size() < 2 || !top.items[1].isAtom())
    throw SyntaxError(top.line, top.col, "expected (problem NAME ...)");

  Problem p;
  p.name = top.items[1].text;
  bool sawHorizon = false;
  for (size_t i = 2; i < top.items.size(); ++i) {
    const Sexpr& form = top.items[i];
    if (!form.isList() || form.items.empty() || !form.items[0].isAtom())
      throw SyntaxError(form.line, form.col, "expected a (:section ...) form");
    const std::string& head = form.items[0].text;
    if (head == ":domain") {
      p.domainName = atomText(form.items.at(1), "a domain name");
      if (p.domainName != domain.name)
        throw ValidationError("problem is for domain '" + p.domainName +
                              "', parsed domain is '" + domain.name + "'");
    } else if (head == ":objects") {
      std::vector<std::string> pending;
      for (size_t k = 1; k < form.items.size(); ++k) {
        const std::string& tok = atomText(form.items[k], "an object or type");
        if (tok == "-") continue;
        if (domain.hasType(tok)) {
          if (pending.empty())
            fail(form.items[k], "type '" + tok + "' binds no objects");
          for (const std::string& name : pending) {
            if (p.objectIndex(name) >= 0)
              throw ValidationError("duplicate object '" + name + "'");
            p.objects.push_back({name, tok});
          }
          pending.clear();
        } else if (tok == "pose" || tok == "trajectory") {
          fail(form.items[k], "objects cannot have continuous types");
        } else {
          pending.push_back(tok);
        }
      }
      if (!pending.empty())
        throw ValidationError("object '" + pending.front() +
                              "' has no declared type");
    } else if (head == ":init") {
      for (size_t k = 1; k < form.items.size(); ++k) {
        const Sexpr& item = form.items[k];
        if (item.headIs("=")) {
          // (= (fluent) VALUE)
          if (item.items.size() != 3 || !item.items[1].isList() ||
              item.items[1].items.size() != 1)
            fail(item, "expected (= (fluent) VALUE)");
          const std::string& fl =
              atomText(item.items[1].items[0], "a fluent name");
          if (!domain.hasFluent(fl)) fail(item, "undeclared fluent '" + fl + "'");
          double v = 0.0;
          try {
            v = std::stod(atomText(item.items[2], "a number"));
          } catch (const std::exception&) {
            fail(item.items[2], "expected a number");
          }
          if (!std::isfinite(v))
            throw ValidationError("initial value of '" + fl +
                                  "' must be finite");
          p.initFluents.push_back({fl, v});
        } else {
          p.init.push_back(parseFact(item, domain, p, true));
        }
      }
    } else if (head == ":goal") {
      const Sexpr* body = form.items.size() == 2 ? &form.items[1] : nullptr;
      if (!body) fail(form, ":goal takes one conjunction");
      if (body->headIs("and")) {
        for (size_t k = 1; k < body->items.size(); ++k)
          p.goal.push_back(parseFact(body->items[k], domain, p, true));
      } else {
        p.goal.push_back(parseFact(*body, domain, p, true));
      }
    } else if (head == ":horizon") {
      if (form.items.size() != 2) fail(form, ":horizon takes one integer");
      try {
        p.horizon = std::stoi(atomText(form.items[1], "an integer"));
      } catch (const std::exception&) {
        fail(form.items[1], "expected an integer horizon");
      }
      sawHorizon = true;
    } else {
      throw SyntaxError(form.line, form.col,
                        "unknown top-level form '" + head + "'");
    }
  }
  if (!sawHorizon) throw ValidationError("problem is missing (:horizon N)");
  if (p.horizon < 1) throw ValidationError("horizon must be >= 1");

  std::sort(p.init.begin(), p.init.end());
  p.init.erase(std::unique(p.init.begin(), p.init.end()), p.init.end());
  std::sort(p.goal.begin(), p.goal.end());
  p.goal.erase(std::unique(p.goal.begin(), p.goal.end()), p.goal.end());
  return p;
}

Domain loadDomain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open domain file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseDomain(ss.str());
}

Problem loadProblem(const std::string& path, const Domain& domain) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseProblem(ss.str(), domain);
}

namespace {

void printParams(std::ostream& os, const std::vector<Param>& params) {
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << " ";
    os << params[i].name << " - ";
    switch (params[i].kind) {
      case ParamKind::Object: os << params[i].type; break;
      case ParamKind::Pose: os << "pose"; break;
      case ParamKind::Trajectory: os << "trajectory"; break;
    }
  }
}

void printLiteral(std::ostream& os, const Literal& lit) {
  if (lit.negated) os << "(not ";
  os << "(" << lit.pred;
  for (const std::string& a : lit.args) os << " " << a;
  os << ")";
  if (lit.negated) os << ")";
}

void printNumeric(std::ostream& os, const NumericEffect& ne) {
  os << "(decrease (" << ne.fluent << ") (" << kTrajectoryCostFn << " "
     << ne.trajectoryParam << "))";
}

}  // namespace

std::string printDomain(const Domain& d) {
  std::ostringstream os;
  os << "(domain " << d.name << "\n";
  if (!d.objectTypes.empty()) {
    os << "  (:types";
    for (const std::string& t : d.objectTypes) os << " " << t;
    os << ")\n";
  }
  os << "  (:predicates";
  for (const PredicateSchema& ps : d.predicates) {
    if (ps.builtin) continue;
    os << "\n    (" << ps.name;
    if (!ps.params.empty()) {
      os << " ";
      printParams(os, ps.params);
    }
    os << ")";
  }
  os << ")\n";
  if (!d.numericFluents.empty()) {
    os << "  (:functions";
    for (const std::string& f : d.numericFluents) os << " (" << f << ")";
    os << ")\n";
  }
  for (const ActionSchema& a : d.actions) {
    os << "  (:action " << a.name << "\n    :parameters (";
    std::vector<Param> all = a.discreteParams;
    all.insert(all.end(), a.continuousParams.begin(), a.continuousParams.end());
    printParams(os, all);
    os << ")\n    :precondition (and";
    for (const Literal& lit : a.precond) {
      os << " ";
      printLiteral(os, lit);
    }
    os << ")\n    :effect (and";
    for (const Literal& lit : a.commonEffects) {
      os << " ";
      printLiteral(os, lit);
    }
    bool stochastic =
        a.outcomes.size() > 1 || !a.outcomes.front().probability.isOne();
    if (stochastic) {
      os << " (probabilistic";
      for (const Outcome& out : a.outcomes) {
        os << " " << out.probability.str() << " (and";
        for (const Literal& lit : out.effects) {
          os << " ";
          printLiteral(os, lit);
        }
        for (const NumericEffect& ne : out.numericEffects) {
          os << " ";
          printNumeric(os, ne);
        }
        os << ")";
      }
      os << ")";
    } else {
      for (const Literal& lit : a.outcomes.front().effects) {
        os << " ";
        printLiteral(os, lit);
      }
      for (const NumericEffect& ne : a.outcomes.front().numericEffects) {
        os << " ";
        printNumeric(os, ne);
      }
    }
    for (const NumericEffect& ne : a.numericEffects) {
      os << " ";
      printNumeric(os, ne);
    }
    os << ")";
    if (a.cost != Rational(1)) os << "\n    :cost " << a.cost.str();
    os << ")\n";
  }
  os << ")\n";
  return os.str();
}

std::string printProblem(const Problem& p, const Domain& d) {
  std::ostringstream os;
  os << "(problem " << p.name << "\n  (:domain " << p.domainName << ")\n";
  os << "  (:objects";
  for (const Object& o : p.objects) os << " " << o.name << " - " << o.type;
  os << ")\n  (:init";
  for (const GroundedFact& f : p.init) {
    os << " (" << d.predicates[f.pred].name;
    for (int a : f.args) os << " " << p.objects[a].name;
    os << ")";
  }
  for (const FluentInit& fi : p.initFluents) {
    os << " (= (" << fi.fluent << ") ";
    std::ostringstream num;
    num.precision(17);
    num << fi.value;
    os << num.str() << ")";
  }
  os << ")\n  (:goal (and";
  for (const GroundedFact& f : p.goal) {
    os << " (" << d.predicates[f.pred].name;
    for (int a : f.args) os << " " << p.objects[a].name;
    os << ")";
  }
  os << "))\n  (:horizon " << p.horizon << "))\n";
  return os.str();
}

}  // namespace tamp::lang
