#include "anytime/leaf_queue.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamp::anytime {

LeafQueue::LeafQueue(std::vector<LeafEntry> entries)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const LeafEntry& a, const LeafEntry& b) {
                     if (a.key() != b.key()) return a.key() > b.key();
                     return a.leaf->id < b.leaf->id;
                   });
}

LeafEntry LeafQueue::pop() {
  if (empty()) throw std::out_of_range("LeafQueue::pop on empty queue");
  return entries_[next_++];
}

bool pathFullyRefined(const ssp::PolicyNode* leaf, const PartialTraj& partial) {
  for (const ssp::PolicyNode* n = leaf; n; n = n->parent) {
    if (n->hasAction() && !partial.count(n->id)) return false;
  }
  return true;
}

LeafQueue estimatePathCosts(ssp::PolicyTree& tree, const PartialTraj& partial,
                            const RefineEnvironment& env) {
  std::vector<LeafEntry> entries;
  for (ssp::PolicyNode* leaf : tree.leaves()) {
    if (leaf->status == ssp::RefineStatus::Invalidated) continue;
    if (pathFullyRefined(leaf, partial)) continue;
    LeafEntry entry;
    entry.leaf = leaf;
    entry.p = leaf->pathProbability.toDouble();
    entry.c = 1.0;
    for (const ssp::PolicyNode* n = leaf; n; n = n->parent) {
      if (n->hasAction() && !partial.count(n->id))
        entry.c *= env.generatorFor(n->action).rangeMeasure();
    }
    entries.push_back(entry);
  }
  return LeafQueue(std::move(entries));
}

Rational computeProportionRefined(const ssp::PolicyTree& tree,
                                  const PartialTraj& partial) {
  Rational total(0);
  tree.forEach([&](const ssp::PolicyNode& n) {
    if (n.isLeaf() && pathFullyRefined(&n, partial))
      total += n.pathProbability;
  });
  return total;
}

double fractionNodesRefined(const ssp::PolicyTree& tree,
                            const PartialTraj& partial) {
  int refined = 0;
  int actionNodes = 0;
  tree.forEach([&](const ssp::PolicyNode& n) {
    if (!n.hasAction()) return;
    ++actionNodes;
    if (partial.count(n.id)) ++refined;
  });
  if (actionNodes == 0) return 1.0;
  return static_cast<double>(refined) / actionNodes;
}

}  // namespace tamp::anytime
