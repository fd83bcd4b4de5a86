#pragma once

#include "geom/geometry.hpp"

namespace tamp::geom {

/// Linear battery accounting over trajectories.
struct BatteryModel {
  double costPerMeter = 1.0;
  double inspectOverhead = 0.0;  // flat charge per inspection trajectory
  double capacity = 100.0;
  double reserve = 0.0;  // charge threshold that must remain to reach dock

  void validate() const;
};

double batteryCost(const Trajectory& tr, const BatteryModel& model,
                   bool isInspection);

}  // namespace tamp::geom
