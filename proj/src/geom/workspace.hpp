#pragma once

#include <map>
#include <string>
#include <vector>

#include "geom/geometry.hpp"

namespace tamp::geom {

/// Inspectable part: a segment whose direction is the major axis used to
/// order inspection waypoints.
struct Component {
  std::string name;
  Pose axisStart;
  Pose axisEnd;

  double axisLength() const { return dist(axisStart, axisEnd); }
  /// Scalar projection of p onto the axis, in meters from axisStart.
  double axisProjection(const Pose& p) const;
};

/// Immutable 2D polygonal world: rectangular bounds, polygonal obstacles,
/// named convex target regions, and named components.
struct Workspace {
  Aabb bounds;
  std::vector<Polygon> obstacles;
  std::map<std::string, Polygon> regions;
  std::map<std::string, Component> components;

  bool hasRegion(const std::string& name) const {
    return regions.count(name) != 0;
  }
  const Polygon& region(const std::string& name) const;
  const Component& component(const std::string& name) const;

  /// Point-robot collision test against all obstacles.
  bool poseFree(const Pose& p) const;
  /// Exact segment clearance against all obstacles (not sampled).
  bool segmentFree(const Pose& a, const Pose& b) const;
};

/// Parses the `.wspc` text format:
///
///   (workspace
///     (bounds XMIN YMIN XMAX YMAX)
///     (obstacle NAME (x y) (x y) (x y) ...)
///     (region NAME (x y) (x y) (x y) ...)
///     (component NAME (axis X1 Y1 X2 Y2)))
///
/// Validates on load: regions and components inside bounds, region
/// interiors free of obstacles. Throws SyntaxError / ValidationError.
Workspace parseWorkspace(const std::string& text);
Workspace loadWorkspace(const std::string& path);

}  // namespace tamp::geom
