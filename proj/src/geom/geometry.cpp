#include "geom/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamp::geom {

Aabb boundingBox(const Polygon& poly) {
  Aabb box{poly.front().x, poly.front().y, poly.front().x, poly.front().y};
  for (const Pose& p : poly) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

double polygonArea(const Polygon& poly) {
  double twice = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pose& a = poly[i];
    const Pose& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

namespace {

int orientation(const Pose& a, const Pose& b, const Pose& c) {
  double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool onSegment(const Pose& a, const Pose& b, const Pose& p) {
  return orientation(a, b, p) == 0 && p.x >= std::min(a.x, b.x) &&
         p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool pointInPolygon(const Pose& p, const Polygon& poly) {
  size_t n = poly.size();
  // Boundary points count as inside.
  for (size_t i = 0; i < n; ++i) {
    if (onSegment(poly[i], poly[(i + 1) % n], p)) return true;
  }
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Pose& a = poly[i];
    const Pose& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double xCross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xCross) inside = !inside;
    }
  }
  return inside;
}

bool segmentsIntersect(const Pose& a, const Pose& b, const Pose& c,
                       const Pose& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && onSegment(a, b, c)) return true;
  if (o2 == 0 && onSegment(a, b, d)) return true;
  if (o3 == 0 && onSegment(c, d, a)) return true;
  if (o4 == 0 && onSegment(c, d, b)) return true;
  return false;
}

bool segmentIntersectsPolygon(const Pose& a, const Pose& b,
                              const Polygon& poly) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    if (segmentsIntersect(a, b, poly[i], poly[(i + 1) % n])) return true;
  }
  return pointInPolygon(a, poly) || pointInPolygon(b, poly);
}

double polylineLength(const std::vector<Pose>& pts) {
  double len = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
  return len;
}

Trajectory makeTrajectory(std::vector<Pose> waypoints) {
  if (waypoints.empty())
    throw std::invalid_argument("trajectory needs at least one waypoint");
  Trajectory t;
  t.length = polylineLength(waypoints);
  t.waypoints = std::move(waypoints);
  return t;
}

Trajectory concat(const Trajectory& a, const Trajectory& b) {
  std::vector<Pose> pts = a.waypoints;
  size_t skip = (!pts.empty() && !b.waypoints.empty() &&
                 pts.back() == b.waypoints.front())
                    ? 1
                    : 0;
  pts.insert(pts.end(), b.waypoints.begin() + skip, b.waypoints.end());
  return makeTrajectory(std::move(pts));
}

}  // namespace tamp::geom
