#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "abstraction/actions.hpp"
#include "ssp/instance.hpp"
#include "ssp/solve.hpp"

namespace tamp::ssp {

enum class RefineStatus { Unrefined, Refined, Invalidated };

const char* refineStatusName(RefineStatus s);

/// Node of the tree-structured contingent plan. A node carries the
/// abstract state, the action chosen there (none at goal/horizon
/// leaves), and one child per stochastic outcome of that action.
struct PolicyNode {
  std::uint64_t id = 0;
  PolicyNode* parent = nullptr;
  int depth = 0;
  abstraction::AbstractState state;
  int action = -1;  // grounded abstract action index; -1 at leaves
  bool goal = false;
  Rational outcomeProbability{1};  // edge probability from the parent
  Rational pathProbability{1};     // product of outcome probs from the root
  RefineStatus status = RefineStatus::Unrefined;
  std::vector<std::unique_ptr<PolicyNode>> children;

  bool isLeaf() const { return children.empty(); }
  bool hasAction() const { return action >= 0; }
};

/// Tree-structured finite-state-machine policy (contingent plan) for a
/// finite-horizon SSP; node depth encodes the timestep, which realizes
/// the non-stationary policy. Mutated only by the single refinement
/// loop; observers take snapshots between iterations.
class PolicyTree {
 public:
  PolicyTree() = default;
  PolicyTree(std::unique_ptr<PolicyNode> root,
             const abstraction::AbstractModel* model, int horizon,
             std::uint64_t nextId);

  PolicyNode* root() { return root_.get(); }
  const PolicyNode* root() const { return root_.get(); }
  int horizon() const { return horizon_; }
  const abstraction::AbstractModel& model() const { return *model_; }

  std::uint64_t takeId() { return nextId_++; }
  std::uint64_t peekId() const { return nextId_; }
  void bumpIdsTo(std::uint64_t n) { nextId_ = std::max(nextId_, n); }

  void forEach(const std::function<void(const PolicyNode&)>& fn) const;
  void forEach(const std::function<void(PolicyNode&)>& fn);
  std::vector<PolicyNode*> leaves();
  /// Root-to-leaf node list (Alg. line "ancestors(leafQueue.pop())").
  static std::vector<PolicyNode*> rootPath(PolicyNode* leaf);

  int nodeCount() const;
  /// Probability that an execution of this policy reaches the goal.
  Rational goalProbability() const;

  /// Actions removed below a given node by earlier collision replans;
  /// effective masks accumulate along ancestor chains.
  std::map<std::uint64_t, std::vector<int>> removedActions;
  ActionMask effectiveMask(const PolicyNode* node) const;

  /// Line-oriented text format, one node per line in preorder:
  ///   id parentId depth action outcomeProb pathProb status
  void serialize(std::ostream& os) const;
  std::string serializeToString() const;

 private:
  std::unique_ptr<PolicyNode> root_;
  const abstraction::AbstractModel* model_ = nullptr;
  int horizon_ = 0;
  std::uint64_t nextId_ = 0;
};

/// Unrolls the greedy policy of a solved value table into a subtree.
/// Argmax ties break lexicographically by grounded action name. Throws
/// DeadEndError when a non-goal node with steps to go has no applicable
/// action or only actions with infinite cost.
std::unique_ptr<PolicyNode> unrollPolicy(const SSPInstance& ssp,
                                         const ValueTable& table,
                                         std::uint64_t& nextId, int baseDepth,
                                         const Rational& outcomeProb,
                                         const Rational& basePathProb);

/// Solve + unroll from the SSP's initial state into a full tree.
PolicyTree extractPolicyTree(const SSPInstance& ssp, const ValueTable& table);

/// Total outcome probability of goal leaves below `node`, relative to
/// node (node itself = 1).
Rational subtreeGoalProbability(const PolicyNode* node);

}  // namespace tamp::ssp
