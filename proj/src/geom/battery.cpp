#include "geom/battery.hpp"

#include "core/errors.hpp"

namespace tamp::geom {

void BatteryModel::validate() const {
  if (costPerMeter <= 0.0 || inspectOverhead <= 0.0 || capacity <= 0.0 ||
      reserve <= 0.0)
    throw ValidationError("battery parameters must all be > 0");
  if (reserve >= capacity)
    throw ValidationError("battery reserve must be below capacity");
}

double batteryCost(const Trajectory& tr, const BatteryModel& model,
                   bool isInspection) {
  return model.costPerMeter * tr.length +
         (isInspection ? model.inspectOverhead : 0.0);
}

}  // namespace tamp::geom
