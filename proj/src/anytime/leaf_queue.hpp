#pragma once

#include <cstddef>
#include <vector>

#include "anytime/refine.hpp"
#include "ssp/policy_tree.hpp"

namespace tamp::anytime {

/// One refinement candidate: an unrefined live leaf, its path
/// probability p, and the estimated cost c of refining the path's
/// remaining (unrefined) suffix.
struct LeafEntry {
  ssp::PolicyNode* leaf = nullptr;
  double p = 0.0;
  double c = 0.0;

  double key() const { return p / c; }
};

/// Max-priority queue keyed by p/c, rebuilt after every outer-loop
/// iteration. Ties break toward the older leaf id for determinism.
class LeafQueue {
 public:
  LeafQueue() = default;
  explicit LeafQueue(std::vector<LeafEntry> entries);

  bool empty() const { return next_ >= entries_.size(); }
  size_t size() const { return entries_.size() - next_; }
  LeafEntry pop();
  const std::vector<LeafEntry>& order() const { return entries_; }

 private:
  std::vector<LeafEntry> entries_;  // sorted descending by key
  size_t next_ = 0;
};

/// True when every action node on the leaf's root path has a motion
/// plan; such leaves carry executable probability mass.
bool pathFullyRefined(const ssp::PolicyNode* leaf, const PartialTraj& partial);

/// One entry per unrefined live leaf. p is the leaf's path probability;
/// c multiplies the generator range measures of the unrefined suffix
/// only (the refined prefix contributes no remaining cost).
LeafQueue estimatePathCosts(ssp::PolicyTree& tree, const PartialTraj& partial,
                            const RefineEnvironment& env);

/// Probability mass of execution outcomes covered so far: the sum of
/// path probabilities of fully refined leaves. Exact.
Rational computeProportionRefined(const ssp::PolicyTree& tree,
                                  const PartialTraj& partial);

/// Refined action nodes over all action nodes (the policy-graph
/// coverage curve).
double fractionNodesRefined(const ssp::PolicyTree& tree,
                            const PartialTraj& partial);

}  // namespace tamp::anytime
