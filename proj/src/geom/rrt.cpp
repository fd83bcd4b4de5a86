#include "geom/rrt.hpp"

#include <vector>

#include "core/rng.hpp"

namespace tamp::geom {

namespace {

/// Greedy shortcutting: from each kept waypoint, jump to the furthest
/// waypoint visible through free space.
std::vector<Pose> shortcut(const std::vector<Pose>& path, const Workspace& w) {
  std::vector<Pose> out;
  out.push_back(path.front());
  size_t i = 0;
  while (i + 1 < path.size()) {
    size_t best = i + 1;
    for (size_t j = path.size() - 1; j > i + 1; --j) {
      if (w.segmentFree(path[i], path[j])) {
        best = j;
        break;
      }
    }
    out.push_back(path[best]);
    i = best;
  }
  return out;
}

}  // namespace

std::optional<MotionPlan> planMotion(const Pose& p1, const Pose& p2,
                                     const Workspace& w, std::uint64_t seed,
                                     const RrtParams& params) {
  if (!w.poseFree(p1) || !w.poseFree(p2)) return std::nullopt;

  if (p1 == p2) return MotionPlan{makeTrajectory({p1}), 0};

  if (w.segmentFree(p1, p2))
    return MotionPlan{makeTrajectory({p1, p2}), 1};

  const double step = params.step(w);
  RngStream rng(seed);

  struct Node {
    Pose pose;
    int parent;
  };
  std::vector<Node> nodes{{p1, -1}};

  auto nearest = [&](const Pose& q) {
    int best = 0;
    double bestDist = dist(nodes[0].pose, q);
    for (size_t i = 1; i < nodes.size(); ++i) {
      double d = dist(nodes[i].pose, q);
      if (d < bestDist) {
        bestDist = d;
        best = static_cast<int>(i);
      }
    }
    return best;
  };

  for (int iter = 1; iter <= params.iterationCap; ++iter) {
    Pose sample = rng.bernoulli(params.goalBias)
                      ? p2
                      : Pose{rng.uniform(w.bounds.xmin, w.bounds.xmax),
                             rng.uniform(w.bounds.ymin, w.bounds.ymax)};
    int nearIdx = nearest(sample);
    const Pose& near = nodes[nearIdx].pose;
    double d = dist(near, sample);
    if (d == 0.0) continue;
    double scale = std::min(1.0, step / d);
    Pose fresh{near.x + scale * (sample.x - near.x),
               near.y + scale * (sample.y - near.y)};
    if (!w.poseFree(fresh) || !w.segmentFree(near, fresh)) continue;
    nodes.push_back({fresh, nearIdx});

    if (dist(fresh, p2) <= step && w.segmentFree(fresh, p2)) {
      std::vector<Pose> path{p2};
      for (int at = static_cast<int>(nodes.size()) - 1; at >= 0;
           at = nodes[at].parent)
        path.push_back(nodes[at].pose);
      std::reverse(path.begin(), path.end());
      return MotionPlan{makeTrajectory(shortcut(path, w)), iter};
    }
  }
  return std::nullopt;
}

}  // namespace tamp::geom
