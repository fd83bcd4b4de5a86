#include "ssp/policy_tree.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "core/errors.hpp"

namespace tamp::ssp {

const char* refineStatusName(RefineStatus s) {
  switch (s) {
    case RefineStatus::Unrefined: return "unrefined";
    case RefineStatus::Refined: return "refined";
    case RefineStatus::Invalidated: return "invalidated";
  }
  return "?";
}

PolicyTree::PolicyTree(std::unique_ptr<PolicyNode> root,
                       const abstraction::AbstractModel* model, int horizon,
                       std::uint64_t nextId)
    : root_(std::move(root)),
      model_(model),
      horizon_(horizon),
      nextId_(nextId) {}

namespace {

template <typename NodeT, typename Fn>
void walk(NodeT* node, const Fn& fn) {
  fn(*node);
  for (const auto& child : node->children) walk(child.get(), fn);
}

}  // namespace

void PolicyTree::forEach(const std::function<void(const PolicyNode&)>& fn) const {
  if (root_) walk<const PolicyNode>(root_.get(), fn);
}

void PolicyTree::forEach(const std::function<void(PolicyNode&)>& fn) {
  if (root_) walk<PolicyNode>(root_.get(), fn);
}

std::vector<PolicyNode*> PolicyTree::leaves() {
  std::vector<PolicyNode*> out;
  forEach([&](PolicyNode& n) {
    if (n.isLeaf()) out.push_back(&n);
  });
  return out;
}

std::vector<PolicyNode*> PolicyTree::rootPath(PolicyNode* leaf) {
  std::vector<PolicyNode*> path;
  for (PolicyNode* n = leaf; n; n = n->parent) path.push_back(n);
  std::reverse(path.begin(), path.end());
  return path;
}

int PolicyTree::nodeCount() const {
  int n = 0;
  forEach([&](const PolicyNode&) { ++n; });
  return n;
}

Rational PolicyTree::goalProbability() const {
  return root_ ? subtreeGoalProbability(root_.get()) : Rational(0);
}

ActionMask PolicyTree::effectiveMask(const PolicyNode* node) const {
  ActionMask mask(model_->actions.size(), false);
  for (const PolicyNode* n = node; n; n = n->parent) {
    auto it = removedActions.find(n->id);
    if (it == removedActions.end()) continue;
    for (int a : it->second) mask[a] = true;
  }
  return mask;
}

void PolicyTree::serialize(std::ostream& os) const {
  forEach([&](const PolicyNode& n) {
    os << n.id << " " << (n.parent ? static_cast<long long>(n.parent->id) : -1)
       << " " << n.depth << " "
       << (n.hasAction() ? model_->actions[n.action].name : "-") << " "
       << n.outcomeProbability.str() << " " << n.pathProbability.str() << " "
       << refineStatusName(n.status) << "\n";
  });
}

std::string PolicyTree::serializeToString() const {
  std::ostringstream os;
  serialize(os);
  return os.str();
}

std::unique_ptr<PolicyNode> unrollPolicy(const SSPInstance& ssp,
                                         const ValueTable& table,
                                         std::uint64_t& nextId, int baseDepth,
                                         const Rational& outcomeProb,
                                         const Rational& basePathProb) {
  struct Builder {
    const SSPInstance& ssp;
    const ValueTable& table;
    std::uint64_t& nextId;
    int baseDepth;

    std::unique_ptr<PolicyNode> build(int stateId, int stepsToGo,
                                      const Rational& edgeProb,
                                      const Rational& pathProb,
                                      PolicyNode* parent) {
      auto node = std::make_unique<PolicyNode>();
      node->id = nextId++;
      node->parent = parent;
      node->depth = baseDepth + (ssp.horizon - stepsToGo);
      node->state = ssp.states[stateId];
      node->goal = ssp.goal[stateId];
      node->outcomeProbability = edgeProb;
      node->pathProbability = pathProb;
      if (node->goal || stepsToGo == 0) return node;  // leaf

      const auto& options = ssp.transitions[stateId];
      if (options.empty())
        throw DeadEndError("dead end: no applicable action in state reached "
                           "at depth " + std::to_string(node->depth));
      const SSPInstance::Transition* best = nullptr;
      double bestValue = -std::numeric_limits<double>::infinity();
      for (const auto& t : options) {
        double v = bracketValue(ssp, table, stepsToGo, t);
        bool better =
            !best || v > bestValue ||
            (v == bestValue && ssp.model->actions[t.action].name <
                                   ssp.model->actions[best->action].name);
        if (better) {
          best = &t;
          bestValue = v;
        }
      }
      if (bestValue == -std::numeric_limits<double>::infinity())
        throw DeadEndError("dead end: no action has finite value at depth " +
                           std::to_string(node->depth));

      node->action = best->action;
      for (const auto& [p, next] : best->outcomes) {
        if (p.isZero()) continue;
        node->children.push_back(
            build(next, stepsToGo - 1, p, pathProb * p, node.get()));
      }
      return node;
    }
  };

  Builder builder{ssp, table, nextId, baseDepth};
  return builder.build(ssp.initial, ssp.horizon, outcomeProb, basePathProb,
                       nullptr);
}

PolicyTree extractPolicyTree(const SSPInstance& ssp, const ValueTable& table) {
  std::uint64_t nextId = 0;
  auto root =
      unrollPolicy(ssp, table, nextId, 0, Rational(1), Rational(1));
  return PolicyTree(std::move(root), ssp.model, ssp.horizon, nextId);
}

Rational subtreeGoalProbability(const PolicyNode* node) {
  if (node->goal) return Rational(1);
  if (node->isLeaf()) return Rational(0);
  Rational sum(0);
  for (const auto& child : node->children)
    sum += child->outcomeProbability * subtreeGoalProbability(child.get());
  return sum;
}

}  // namespace tamp::ssp
