#pragma once

#include "chart.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace isocline {

struct TracerConfig {
  double tau = 1e-3;  // step length in g-arc units
  double rho = 1e-3;  // convergence threshold on sqrt(g(X, X))
  double c = 1.0;     // second-order step correction coefficient
  double h = 1e-5;    // finite-difference step for derivative fallbacks
  long max_steps = 100000;
  Vec z0;  // preferred initial direction; empty -> field direction
  // Fallback trigger: switch to raw steepest descent when the potential
  // exceeds this value. Disabled by default.
  double energy_ceiling = std::numeric_limits<double>::infinity();
};

enum class TraceStatus { Converged, MaxSteps, AmbiguousKernel, NumericalError };

struct TrajectoryRecord {
  long n = 0;
  int chart_id = 0;
  Vec p;  // chart point
  Vec x;  // ambient image
  double field_norm = 0;  // sqrt(g(X, X))
  double kernel_residual = std::numeric_limits<double>::quiet_NaN();
  double energy = std::numeric_limits<double>::quiet_NaN();
  // ||A(Y at this point) * Z_incoming|| * tau: parallel-transport defect of
  // the step that arrived here. NaN on the first record.
  double transport_defect = std::numeric_limits<double>::quiet_NaN();
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  TraceStatus status = TraceStatus::MaxSteps;
  bool converged = false;
  std::string message;
};

// Central-difference Jacobian of the g-normalized field Y on a chart.
Mat normalized_field_jacobian_fd(const FieldProvider& field,
                                 const ChartHandle& chart, const Vec& p,
                                 double h);

// Flips Z_raw so g(Z_prev, Z) > 0 and returns it g-normalized. sign(0) := +1.
Vec orient_and_normalize(const Vec& Z_prev, const Vec& Z_raw, const Mat& g);

// gamma + tau*Z - c * tau^2 * Gamma(Z, Z), componentwise
// Gamma(Z, Z)^k = sum_ij Gamma^k_{ij} Z^i Z^j; c = 0.5 is the geodesic form.
Vec euler_step(const Vec& gamma, const Vec& Z, const ChristoffelSymbols& sym,
               double tau, double c);

bool check_convergence(const Vec& X, const Mat& g, double rho);

// Trace from an ambient point: the provider picks the starting chart.
Trajectory trace(const TracerConfig& config, const ChartProvider& provider,
                 const FieldProvider& field, const Vec& start_ambient);

// Trace from chart coordinates in a given chart.
Trajectory trace_from_chart(const TracerConfig& config,
                            const ChartProvider& provider,
                            const FieldProvider& field, ChartHandle chart,
                            Vec gamma0);

// Raw Euler descent gamma += tau * X until sqrt(g(X, X)) < rho. Converges at
// step 0 if already below threshold.
Trajectory steepest_descent_fallback(const TracerConfig& config,
                                     const ChartProvider& provider,
                                     const FieldProvider& field,
                                     ChartHandle chart, Vec gamma0);

// Columns: step, chart_id, p_1..p_m, x_1..x_n, field_norm, kernel_residual,
// energy. Values printed with %.17g; energy column empty for systems without
// a potential.
void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          bool has_energy);

}  // namespace isocline
