#pragma once

#include "geometry.hpp"

namespace isocline {

// One coordinate patch. Analytic systems close over exact formulas; learned
// charts close over fitted regression models. phi/psi need only be mutually
// inverse on the valid region.
struct ChartHandle {
  int id = 0;
  int n = 0;  // ambient dimension
  int m = 0;  // chart dimension
  std::function<Vec(const Vec&)> phi;      // ambient -> chart
  std::function<Vec(const Vec&)> psi;      // chart -> ambient
  std::function<Mat(const Vec&)> jac_phi;  // m x n, at an ambient point
  std::function<Mat(const Vec&)> jac_psi;  // n x m, at a chart point
  std::function<bool(const Vec&)> valid;   // domain / confidence predicate
  std::function<Mat(const Vec&)> g;        // metric matrix only (cheap)
  std::function<MetricData(const Vec&)> metric;  // with inverse and symbols
};

struct ChartProvider {
  // Returns a chart containing the given ambient point. Learned providers are
  // stateful: each call may sample and fit a fresh patch.
  std::function<ChartHandle(const Vec&)> chart_at;
};

struct FieldProvider {
  // Chart components of the vector field.
  std::function<Vec(const ChartHandle&, const Vec&)> X;
  // Optional exact Jacobian of the g-normalized field Y; null -> finite
  // differences inside the tracer.
  std::function<Mat(const ChartHandle&, const Vec&)> jac_Y;
  // Optional potential evaluated through the chart; null when the system has
  // no scalar potential.
  std::function<double(const ChartHandle&, const Vec&)> energy;
};

}  // namespace isocline
