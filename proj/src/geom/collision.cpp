#include "geom/collision.hpp"

#include <cmath>
#include <stdexcept>

namespace tamp::geom {

bool collisionFree(const Trajectory& tr, const Workspace& w, double step) {
  if (step <= 0.0) throw std::invalid_argument("collision step must be > 0");
  if (tr.waypoints.empty()) return true;
  if (!w.poseFree(tr.waypoints.front())) return false;
  for (size_t i = 1; i < tr.waypoints.size(); ++i) {
    const Pose& a = tr.waypoints[i - 1];
    const Pose& b = tr.waypoints[i];
    double len = dist(a, b);
    int pieces = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int k = 1; k <= pieces; ++k) {
      double t = static_cast<double>(k) / pieces;
      Pose p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (!w.poseFree(p)) return false;
    }
  }
  return true;
}

}  // namespace tamp::geom
