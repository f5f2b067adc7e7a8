#pragma once

#include <vector>

namespace heatpen {

/// One floating-point value per grid node at a single time level.
struct ScalarField {
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(std::size_t n, double fill = 0.0) : values(n, fill) {}

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }

  bool all_finite() const;
};

}  // namespace heatpen
