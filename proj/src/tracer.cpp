#include "isocline/tracer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

namespace isocline {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Re-express a committed state (point + direction) through the ambient space
// in a chart picked by the provider.
void change_chart(const ChartProvider& provider, ChartHandle& chart, Vec& p,
                  Vec* Z) {
  const Vec x = chart.psi(p);
  Vec v;
  if (Z) v = chart.jac_psi(p) * (*Z);
  ChartHandle fresh = provider.chart_at(x);
  const Vec pn = fresh.phi(x);
  if (!fresh.valid(pn))
    throw std::runtime_error("point left the atlas domain");
  if (Z) *Z = fresh.jac_phi(x) * v;
  chart = std::move(fresh);
  p = pn;
}

void descend_append(Trajectory& traj, const TracerConfig& cfg,
                    const ChartProvider& provider, const FieldProvider& field,
                    ChartHandle chart, Vec gamma, long n0) {
  const bool has_energy = static_cast<bool>(field.energy);
  for (long n = n0; n <= cfg.max_steps; ++n) {
    Vec X;
    double fn = 0, E = kNaN;
    TrajectoryRecord rec;
    try {
      const Mat g = chart.g(gamma);
      X = field.X(chart, gamma);
      fn = std::sqrt(X.dot(g * X));
      if (has_energy) E = field.energy(chart, gamma);
      rec.x = chart.psi(gamma);
    } catch (const std::exception& e) {
      traj.status = TraceStatus::NumericalError;
      traj.message = e.what();
      return;
    }
    rec.n = n;
    rec.chart_id = chart.id;
    rec.p = gamma;
    rec.field_norm = fn;
    rec.energy = E;
    traj.records.push_back(std::move(rec));
    if (fn < cfg.rho) {
      traj.status = TraceStatus::Converged;
      traj.converged = true;
      traj.message = "converged (steepest descent)";
      return;
    }
    if (n == cfg.max_steps) break;
    try {
      Vec next = gamma + cfg.tau * X;
      if (!chart.valid(next)) change_chart(provider, chart, next, nullptr);
      gamma = std::move(next);
    } catch (const std::exception& e) {
      traj.status = TraceStatus::NumericalError;
      traj.message = e.what();
      return;
    }
  }
  traj.status = TraceStatus::MaxSteps;
  traj.message = "maximum step count reached during steepest descent";
}

Trajectory trace_impl(const TracerConfig& cfg, const ChartProvider& provider,
                      const FieldProvider& field, ChartHandle chart,
                      Vec gamma) {
  Trajectory traj;
  const bool has_energy = static_cast<bool>(field.energy);
  Vec Z_prev = cfg.z0;
  bool have_ref = Z_prev.size() > 0;
  bool arrived = false;  // defect needs a committed incoming step

  for (long n = 0; n <= cfg.max_steps; ++n) {
    MetricData md;
    Vec X;
    double fn = 0, E = kNaN;
    TrajectoryRecord rec;
    try {
      md = chart.metric(gamma);
      X = field.X(chart, gamma);
      fn = std::sqrt(X.dot(md.g * X));
      if (has_energy) E = field.energy(chart, gamma);
      rec.x = chart.psi(gamma);
    } catch (const std::exception& e) {
      traj.status = TraceStatus::NumericalError;
      traj.message = e.what();
      return traj;
    }
    rec.n = n;
    rec.chart_id = chart.id;
    rec.p = gamma;
    rec.field_norm = fn;
    rec.energy = E;
    traj.records.push_back(std::move(rec));

    // the convergence test is skipped on the very first record
    if (n > 0 && fn < cfg.rho) {
      traj.status = TraceStatus::Converged;
      traj.converged = true;
      traj.message = "converged: sqrt(g(X, X)) fell below rho";
      return traj;
    }
    if (n == cfg.max_steps) break;
    if (has_energy && E > cfg.energy_ceiling) {
      descend_append(traj, cfg, provider, field, std::move(chart),
                     std::move(gamma), n + 1);
      return traj;
    }

    try {
      const Vec Y = normalize_field(X, md.g);
      const Mat JY =
          field.jac_Y ? field.jac_Y(chart, gamma)
                      : normalized_field_jacobian_fd(field, chart, gamma,
                                                     cfg.h);
      const Mat A = covariant_matrix(JY, md.gamma, Y);
      if (arrived)
        traj.records.back().transport_defect = (A * Z_prev).norm() * cfg.tau;
      const LineFieldResult lf = line_field_direction(A);
      traj.records.back().kernel_residual = lf.residual;
      Vec Z = orient_and_normalize(have_ref ? Z_prev : Y, lf.direction, md.g);
      Vec next = euler_step(gamma, Z, md.gamma, cfg.tau, cfg.c);
      if (!chart.valid(next)) change_chart(provider, chart, next, &Z);
      Z_prev = std::move(Z);
      have_ref = true;
      arrived = true;
      gamma = std::move(next);
    } catch (const AmbiguousKernelError& e) {
      traj.status = TraceStatus::AmbiguousKernel;
      traj.message = e.what();
      return traj;
    } catch (const std::exception& e) {
      traj.status = TraceStatus::NumericalError;
      traj.message = e.what();
      return traj;
    }
  }
  traj.status = TraceStatus::MaxSteps;
  traj.message = "maximum step count reached";
  return traj;
}

}  // namespace

Mat normalized_field_jacobian_fd(const FieldProvider& field,
                                 const ChartHandle& chart, const Vec& p,
                                 double h) {
  const int m = static_cast<int>(p.size());
  Mat J(m, m);
  for (int i = 0; i < m; ++i) {
    Vec pp = p, pm = p;
    pp(i) += h;
    pm(i) -= h;
    const Vec Yp = normalize_field(field.X(chart, pp), chart.g(pp));
    const Vec Ym = normalize_field(field.X(chart, pm), chart.g(pm));
    J.col(i) = (Yp - Ym) / (2.0 * h);
  }
  return J;
}

Vec orient_and_normalize(const Vec& Z_prev, const Vec& Z_raw, const Mat& g) {
  const double s = Z_prev.dot(g * Z_raw);
  const Vec Z = (s < 0.0) ? Vec(-Z_raw) : Z_raw;  // sign(0) := +1
  return normalize_field(Z, g);
}

Vec euler_step(const Vec& gamma, const Vec& Z, const ChristoffelSymbols& sym,
               double tau, double c) {
  const int m = static_cast<int>(gamma.size());
  Vec out = gamma + tau * Z;
  // c = 1 is the literal tau^2 correction; c = 0.5 the geodesic Taylor form.
  const double f = c * tau * tau;
  for (int k = 0; k < m; ++k) out(k) -= f * Z.dot(sym[k] * Z);
  return out;
}

bool check_convergence(const Vec& X, const Mat& g, double rho) {
  return std::sqrt(X.dot(g * X)) < rho;
}

Trajectory trace(const TracerConfig& config, const ChartProvider& provider,
                 const FieldProvider& field, const Vec& start_ambient) {
  ChartHandle chart = provider.chart_at(start_ambient);
  Vec gamma = chart.phi(start_ambient);
  return trace_impl(config, provider, field, std::move(chart),
                    std::move(gamma));
}

Trajectory trace_from_chart(const TracerConfig& config,
                            const ChartProvider& provider,
                            const FieldProvider& field, ChartHandle chart,
                            Vec gamma0) {
  return trace_impl(config, provider, field, std::move(chart),
                    std::move(gamma0));
}

Trajectory steepest_descent_fallback(const TracerConfig& config,
                                     const ChartProvider& provider,
                                     const FieldProvider& field,
                                     ChartHandle chart, Vec gamma0) {
  Trajectory traj;
  descend_append(traj, config, provider, field, std::move(chart),
                 std::move(gamma0), 0);
  return traj;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          bool has_energy) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (traj.records.empty()) {
    f << "step,chart_id,field_norm,kernel_residual,energy\n";
    return;
  }
  const int m = static_cast<int>(traj.records.front().p.size());
  const int n = static_cast<int>(traj.records.front().x.size());
  f << "step,chart_id";
  for (int i = 1; i <= m; ++i) f << ",p_" << i;
  for (int i = 1; i <= n; ++i) f << ",x_" << i;
  f << ",field_norm,kernel_residual,energy\n";
  for (const auto& r : traj.records) {
    f << r.n << ',' << r.chart_id;
    for (int i = 0; i < m; ++i) f << ',' << fmt17(r.p(i));
    for (int i = 0; i < n; ++i) f << ',' << fmt17(r.x(i));
    f << ',' << fmt17(r.field_norm) << ',' << fmt17(r.kernel_residual) << ',';
    if (has_energy) f << fmt17(r.energy);
    f << '\n';
  }
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace isocline
