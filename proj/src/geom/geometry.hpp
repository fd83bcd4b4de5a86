#pragma once

#include <cmath>
#include <vector>

namespace tamp::geom {

struct Pose {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Pose& o) const { return x == o.x && y == o.y; }
};

inline double dist(const Pose& a, const Pose& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

using Polygon = std::vector<Pose>;  // simple polygon, vertices in order

struct Aabb {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  double diagonal() const { return std::hypot(width(), height()); }
  bool contains(const Pose& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

Aabb boundingBox(const Polygon& poly);

double polygonArea(const Polygon& poly);

/// Even-odd ray casting; points exactly on the boundary count as inside.
bool pointInPolygon(const Pose& p, const Polygon& poly);

/// Segment intersection including touching and collinear overlap.
bool segmentsIntersect(const Pose& a, const Pose& b, const Pose& c,
                       const Pose& d);

/// True if segment ab touches the polygon: crosses an edge or has an
/// endpoint inside. An exact test, used as the planner's internal gate so
/// that sampled validation passes at any resolution.
bool segmentIntersectsPolygon(const Pose& a, const Pose& b,
                              const Polygon& poly);

/// Ordered waypoints with a cached polyline length.
struct Trajectory {
  std::vector<Pose> waypoints;
  double length = 0.0;

  const Pose& start() const { return waypoints.front(); }
  const Pose& end() const { return waypoints.back(); }
};

Trajectory makeTrajectory(std::vector<Pose> waypoints);

double polylineLength(const std::vector<Pose>& pts);

/// Joins b onto a. If a ends where b starts the duplicate point is merged.
Trajectory concat(const Trajectory& a, const Trajectory& b);

}  // namespace tamp::geom
