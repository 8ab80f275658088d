#pragma once

#include "chart.hpp"

#include <string>

namespace isocline {

// ---- stereographic atlas on the unit sphere ----
// pole = +1 projects from the north pole (chart covers x3 < 1),
// pole = -1 from the south pole. Both use nu = |p|^2.

Vec stereo_coords(const Vec& x, int pole);  // R^3 -> R^2
Vec stereo_param(const Vec& p, int pole);   // R^2 -> S^2
Vec chart_transition(const Vec& p);         // p / nu, between the two charts
Mat stereo_jac_psi(const Vec& p, int pole);
Mat stereo_jac_phi(const Vec& x, int pole);
MetricData stereo_metric(const Vec& p);  // conformal, closed-form symbols

// ---- Muller-Brown potential ----

struct MullerBrownParams {
  double A[4], a[4], b[4], c[4], u1[4], u2[4];
};
const MullerBrownParams& muller_brown_params();

double muller_brown_energy(const Vec& u);
Vec muller_brown_gradient(const Vec& u);
Mat muller_brown_hessian(const Vec& u);

// Angles of a sphere point, principal branches; throws on the x1 = 0 seam.
Vec sphere_angles(const Vec& x);
Mat sphere_angles_jacobian(const Vec& x);  // 2 x 3

double muller_brown_on_sphere(const Vec& x);
// Tangential ambient gradient-descent field of the above.
Vec muller_brown_sphere_ambient_field(const Vec& x);

// ---- tractrix surface of revolution, chart (radius, angle) ----

Vec pseudosphere_param(const Vec& p);  // radius in (0, 1], upper sheet
Mat pseudosphere_jac_psi(const Vec& p);
MetricData pseudosphere_metric(const Vec& p);

// ---- product-of-coordinates potential on the sphere, chart closed forms ----

double xyz_energy_chart(const Vec& p, int pole);  // 4 p1 p2 (nu-1)/(nu+1)^3
Vec xyz_chart_field(const Vec& p, int pole);      // flat-chart gradient descent
Mat xyz_chart_field_jacobian(const Vec& p, int pole);
Vec xyz_line_field(const Vec& p);  // degree-11 polynomial kernel line field

// ---- generic utility ----

// Descent field -g_inv * grad(E) with a central-difference gradient.
Vec riemannian_gradient_field(const std::function<double(const Vec&)>& E,
                              const Vec& p, const Mat& g_inv, double h = 1e-6);

// ---- assembled systems ----

struct System {
  std::string manifold;
  std::string potential;
  int n = 0;
  int m = 0;
  ChartProvider charts;
  std::function<ChartHandle(int)> chart_by_id;
  FieldProvider field;
  // Ambient-space access used by sampling and learned charts.
  std::function<Vec(const Vec&)> ambient_field;
  std::function<double(const Vec&)> ambient_energy;  // may be null
  std::function<Vec(const Vec&)> project;            // ambient -> manifold
  std::function<double(const Vec&, const Vec&)> distance;
};

// manifold in {plane, sphere, pseudosphere}, potential in {mb, xyz};
// xyz is available on the sphere only.
System make_system(const std::string& manifold, const std::string& potential);

}  // namespace isocline
