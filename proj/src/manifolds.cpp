#include "isocline/manifolds.hpp"

#include <algorithm>
#include <cmath>

namespace isocline {

namespace {

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

}  // namespace

// ---- stereographic atlas ----

Vec stereo_coords(const Vec& x, int pole) {
  const double d = 1.0 - pole * x(2);
  if (d < 1e-14)
    throw std::runtime_error("stereographic chart is singular at its pole");
  Vec p(2);
  p << x(0) / d, x(1) / d;
  return p;
}

Vec stereo_param(const Vec& p, int pole) {
  const double nu = p.squaredNorm();
  const double w = nu + 1.0;
  Vec x(3);
  x << 2.0 * p(0) / w, 2.0 * p(1) / w, pole * (nu - 1.0) / w;
  return x;
}

Vec chart_transition(const Vec& p) {
  const double nu = p.squaredNorm();
  if (nu < 1e-28)
    throw std::runtime_error(
        "chart transition is singular at the chart center");
  return p / nu;
}

Mat stereo_jac_psi(const Vec& p, int pole) {
  const double nu = p.squaredNorm();
  const double w = nu + 1.0;
  const double w2 = w * w;
  Mat J(3, 2);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i)
      J(i, j) = (i == j ? 2.0 / w : 0.0) - 4.0 * p(i) * p(j) / w2;
    J(2, j) = pole * 4.0 * p(j) / w2;
  }
  return J;
}

Mat stereo_jac_phi(const Vec& x, int pole) {
  const double d = 1.0 - pole * x(2);
  if (d < 1e-14)
    throw std::runtime_error("stereographic chart is singular at its pole");
  Mat J = Mat::Zero(2, 3);
  J(0, 0) = 1.0 / d;
  J(1, 1) = 1.0 / d;
  J(0, 2) = pole * x(0) / (d * d);
  J(1, 2) = pole * x(1) / (d * d);
  return J;
}

MetricData stereo_metric(const Vec& p) {
  const double nu = p.squaredNorm();
  const double w = nu + 1.0;
  const double conf = 4.0 / (w * w);
  MetricData md;
  md.g = conf * Mat::Identity(2, 2);
  md.g_inv = (1.0 / conf) * Mat::Identity(2, 2);
  // Gamma^k_{ij} = delta^k_i w_j + delta^k_j w_i - delta_{ij} w^k
  const double w1 = -2.0 * p(0) / w;
  const double w2 = -2.0 * p(1) / w;
  md.gamma.assign(2, Mat::Zero(2, 2));
  md.gamma[0] << w1, w2, w2, -w1;
  md.gamma[1] << -w2, w1, w1, w2;
  return md;
}

// ---- Muller-Brown potential ----

const MullerBrownParams& muller_brown_params() {
  static const MullerBrownParams P = {
      {-200.0, -100.0, -170.0, 15.0}, {-1.0, -1.0, -6.5, 0.7},
      {0.0, 0.0, 11.0, 0.6},          {-10.0, -10.0, -6.5, 0.7},
      {1.0, 0.0, -0.5, -1.0},         {0.0, 0.5, 1.5, 1.0}};
  return P;
}

double muller_brown_energy(const Vec& u) {
  const auto& P = muller_brown_params();
  double E = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double d1 = u(0) - P.u1[k];
    const double d2 = u(1) - P.u2[k];
    const double arg = P.a[k] * d1 * d1 + P.b[k] * d1 * d2 + P.c[k] * d2 * d2;
    E += P.A[k] * std::exp(clamp(arg, -500.0, 500.0));
  }
  return E;
}

Vec muller_brown_gradient(const Vec& u) {
  const auto& P = muller_brown_params();
  Vec grad = Vec::Zero(2);
  for (int k = 0; k < 4; ++k) {
    const double d1 = u(0) - P.u1[k];
    const double d2 = u(1) - P.u2[k];
    const double arg = P.a[k] * d1 * d1 + P.b[k] * d1 * d2 + P.c[k] * d2 * d2;
    const double f = P.A[k] * std::exp(clamp(arg, -500.0, 500.0));
    grad(0) += f * (2.0 * P.a[k] * d1 + P.b[k] * d2);
    grad(1) += f * (P.b[k] * d1 + 2.0 * P.c[k] * d2);
  }
  return grad;
}

Mat muller_brown_hessian(const Vec& u) {
  const auto& P = muller_brown_params();
  Mat H = Mat::Zero(2, 2);
  for (int k = 0; k < 4; ++k) {
    const double d1 = u(0) - P.u1[k];
    const double d2 = u(1) - P.u2[k];
    const double arg = P.a[k] * d1 * d1 + P.b[k] * d1 * d2 + P.c[k] * d2 * d2;
    const double f = P.A[k] * std::exp(clamp(arg, -500.0, 500.0));
    const double g1 = 2.0 * P.a[k] * d1 + P.b[k] * d2;
    const double g2 = P.b[k] * d1 + 2.0 * P.c[k] * d2;
    H(0, 0) += f * (g1 * g1 + 2.0 * P.a[k]);
    H(0, 1) += f * (g1 * g2 + P.b[k]);
    H(1, 1) += f * (g2 * g2 + 2.0 * P.c[k]);
  }
  H(1, 0) = H(0, 1);
  return H;
}

// ---- sphere angles and the potential through them ----

namespace {

// kappa rescale from sphere angles into the potential plane
constexpr double kSph1s = 1.973521294, kSph1o = -1.85;
constexpr double kSph2s = 1.750704373, kSph2o = 0.875;

}  // namespace

Vec sphere_angles(const Vec& x) {
  if (x(0) == 0.0)
    throw std::runtime_error(
        "sphere angles undefined on the x1 = 0 seam (principal branch)");
  const double s = std::hypot(x(0), x(1));
  Vec k(2);
  k << std::atan(x(1) / x(0)), std::atan(x(2) / s);
  return k;
}

Mat sphere_angles_jacobian(const Vec& x) {
  const double s2 = x(0) * x(0) + x(1) * x(1);
  if (s2 == 0.0)
    throw std::runtime_error("sphere angles undefined on the x3 axis");
  const double s = std::sqrt(s2);
  const double q = s2 + x(2) * x(2);
  Mat J(2, 3);
  J << -x(1) / s2, x(0) / s2, 0.0,
      -x(2) * x(0) / (s * q), -x(2) * x(1) / (s * q), s / q;
  return J;
}

double muller_brown_on_sphere(const Vec& x) {
  const Vec k = sphere_angles(x);
  Vec u(2);
  u << kSph1s * k(0) + kSph1o, kSph2s * k(1) + kSph2o;
  return muller_brown_energy(u);
}

namespace {

// Ambient (unprojected) gradient of the sphere potential.
Vec mb_sphere_ambient_gradient(const Vec& x) {
  const Vec k = sphere_angles(x);
  Vec u(2);
  u << kSph1s * k(0) + kSph1o, kSph2s * k(1) + kSph2o;
  const Vec gu = muller_brown_gradient(u);
  Vec gk(2);
  gk << kSph1s * gu(0), kSph2s * gu(1);
  return sphere_angles_jacobian(x).transpose() * gk;
}

}  // namespace

Vec muller_brown_sphere_ambient_field(const Vec& x) {
  const Vec ge = mb_sphere_ambient_gradient(x);
  return -(ge - x * x.dot(ge));  // tangential part, |x| = 1
}

// ---- tractrix surface ----

Vec pseudosphere_param(const Vec& p) {
  const double r = p(0);
  if (!(r > 0.0 && r <= 1.0))
    throw std::runtime_error("tractrix radius must lie in (0, 1]");
  const double w = std::sqrt(1.0 - r * r);
  Vec x(3);
  x << r * std::cos(p(1)), r * std::sin(p(1)),
      std::log((1.0 + w) / r) - w;
  return x;
}

Mat pseudosphere_jac_psi(const Vec& p) {
  const double r = p(0);
  if (!(r > 0.0 && r <= 1.0))
    throw std::runtime_error("tractrix radius must lie in (0, 1]");
  const double w = std::sqrt(1.0 - r * r);
  Mat J(3, 2);
  J << std::cos(p(1)), -r * std::sin(p(1)),
      std::sin(p(1)), r * std::cos(p(1)),
      -w / r, 0.0;
  return J;
}

MetricData pseudosphere_metric(const Vec& p) {
  const double r = p(0);
  if (!(r > 0.0 && r <= 1.0))
    throw std::runtime_error("tractrix radius must lie in (0, 1]");
  MetricData md;
  md.g = Mat::Zero(2, 2);
  md.g(0, 0) = 1.0 / (r * r);
  md.g(1, 1) = r * r;
  md.g_inv = Mat::Zero(2, 2);
  md.g_inv(0, 0) = r * r;
  md.g_inv(1, 1) = 1.0 / (r * r);
  md.gamma.assign(2, Mat::Zero(2, 2));
  md.gamma[0](0, 0) = -1.0 / r;
  md.gamma[0](1, 1) = -r * r * r;
  md.gamma[1](0, 1) = 1.0 / r;
  md.gamma[1](1, 0) = 1.0 / r;
  return md;
}

// ---- product-of-coordinates potential, chart closed forms ----

double xyz_energy_chart(const Vec& p, int pole) {
  const double nu = p.squaredNorm();
  const double w = nu + 1.0;
  return pole * 4.0 * p(0) * p(1) * (nu - 1.0) / (w * w * w);
}

Vec xyz_chart_field(const Vec& p, int pole) {
  const double p1 = p(0), p2 = p(1);
  const double x0 = std::pow(p2, 4);
  const double x1 = -x0;
  const double x2 = std::pow(p1, 2);
  const double x3 = std::pow(p1, 4);
  const double x4 = std::pow(p2, 2);
  const double x5 = x2 * x4;
  const double x6 = 2 * x5 + 1;
  const double x7 = std::pow(p1, 8);
  const double x8 = std::pow(p2, 8);
  const double x9 = 4 * x2;
  const double x10 = 6 * x3;
  const double x11 = std::pow(p1, 6);
  const double x12 = 4 * x11;
  const double x13 = std::pow(p2, 6);
  const double x14 = 12 * x2;
  const double x15 = x3 * x4;
  const double x16 =
      4 / (x0 * x10 + x0 * x14 + 6 * x0 + x10 + x12 * x4 + x12 + x13 * x9 +
           4 * x13 + x14 * x4 + 12 * x15 + 4 * x4 + x7 + x8 + x9 + 1);
  const double x17 = -x3;
  Vec X(2);
  X << p2 * x16 * (x1 - 8 * x2 + 3 * x3 + x6),
      p1 * x16 * (3 * x0 + x17 - 8 * x4 + x6);
  return pole * X;
}

Mat xyz_chart_field_jacobian(const Vec& p, int pole) {
  const double p1 = p(0), p2 = p(1);
  const double x0 = std::pow(p2, 4);
  const double x1 = -x0;
  const double x2 = std::pow(p1, 2);
  const double x3 = std::pow(p1, 4);
  const double x4 = std::pow(p2, 2);
  const double x5 = x2 * x4;
  const double x7 = std::pow(p1, 8);
  const double x8 = std::pow(p2, 8);
  const double x11 = std::pow(p1, 6);
  const double x13 = std::pow(p2, 6);
  const double x15 = x3 * x4;
  const double x17 = -x3;
  const double x18 = 5 * x2;
  const double x19 = 10 * x3;
  const double x20 = 10 * x11;
  const double x21 = 5 * x7;
  const double x22 = 5 * x4;
  const double x23 = 30 * x0;
  const double x24 =
      1.0 / (std::pow(p1, 10) + std::pow(p2, 10) + x0 * x20 + 10 * x0 +
             20 * x11 * x4 + x13 * x19 + 20 * x13 * x2 + 10 * x13 + 30 * x15 +
             x18 * x8 + x18 + x19 + x2 * x23 + x20 + x21 * x4 + x21 + x22 +
             x23 * x3 + 20 * x5 + 5 * x8 + 1);
  const double x25 = 48 * p1 * p2 * x24;
  const double x26 = -4 * x24 *
                     (15 * x0 * x2 + 5 * x0 - 3 * x11 - 3 * x13 + 15 * x15 +
                      7 * x2 + 5 * x3 + 7 * x4 - 62 * x5 - 1);
  Mat DX(2, 2);
  DX << -x25 * (x1 - x18 + x3 + x4 + 2), x26,
      x26, -x25 * (x0 + x17 + x2 - x22 + 2);
  return pole * DX;
}

namespace {

// kernel line polynomial; both components share it with arguments swapped
double xyz_kernel_poly(double a, double b) {
  const double ab = a + b;
  const double ab5 = ab * ab * ab * ab * ab;
  return ab5 - 5 * a * a * a * a + 28 * a * a * a * b + 50 * a * a * b * b -
         4 * a * b * b * b - 21 * b * b * b * b - 6 * a * a * a -
         130 * a * a * b - 130 * a * b * b - 6 * b * b * b + 6 * a * a +
         124 * a * b + 6 * b * b + 5 * a - 11 * b - 1;
}

}  // namespace

Vec xyz_line_field(const Vec& p) {
  const double a = p(0) * p(0), b = p(1) * p(1);
  Vec L(2);
  L << p(0) * xyz_kernel_poly(a, b), p(1) * xyz_kernel_poly(b, a);
  return L;
}

// ---- generic descent field ----

Vec riemannian_gradient_field(const std::function<double(const Vec&)>& E,
                              const Vec& p, const Mat& g_inv, double h) {
  const int m = static_cast<int>(p.size());
  Vec grad(m);
  for (int i = 0; i < m; ++i) {
    Vec pp = p, pm = p;
    pp(i) += h;
    pm(i) -= h;
    grad(i) = (E(pp) - E(pm)) / (2.0 * h);
  }
  return -(g_inv * grad);
}

// ---- assembled systems ----

namespace {

ChartHandle plane_chart() {
  ChartHandle ch;
  ch.id = 0;
  ch.n = 2;
  ch.m = 2;
  ch.phi = [](const Vec& x) { return x; };
  ch.psi = [](const Vec& p) { return p; };
  ch.jac_phi = [](const Vec&) { return Mat(Mat::Identity(2, 2)); };
  ch.jac_psi = [](const Vec&) { return Mat(Mat::Identity(2, 2)); };
  ch.valid = [](const Vec&) { return true; };
  ch.g = [](const Vec&) { return Mat(Mat::Identity(2, 2)); };
  ch.metric = [](const Vec&) {
    MetricData md;
    md.g = Mat::Identity(2, 2);
    md.g_inv = md.g;
    md.gamma.assign(2, Mat::Zero(2, 2));
    return md;
  };
  return ch;
}

ChartHandle sphere_chart(int pole) {
  ChartHandle ch;
  ch.id = pole;
  ch.n = 3;
  ch.m = 2;
  ch.phi = [pole](const Vec& x) { return stereo_coords(x, pole); };
  ch.psi = [pole](const Vec& p) { return stereo_param(p, pole); };
  ch.jac_phi = [pole](const Vec& x) { return stereo_jac_phi(x, pole); };
  ch.jac_psi = [pole](const Vec& p) { return stereo_jac_psi(p, pole); };
  // nu < 4 keeps |x3| <= 3/5 on the far side: wide overlap, no flapping
  ch.valid = [](const Vec& p) { return p.squaredNorm() < 4.0; };
  ch.g = [](const Vec& p) {
    const double w = p.squaredNorm() + 1.0;
    return Mat(4.0 / (w * w) * Mat::Identity(2, 2));
  };
  ch.metric = [](const Vec& p) { return stereo_metric(p); };
  return ch;
}

ChartHandle pseudosphere_chart() {
  ChartHandle ch;
  ch.id = 0;
  ch.n = 3;
  ch.m = 2;
  ch.phi = [](const Vec& x) {
    Vec p(2);
    p << std::hypot(x(0), x(1)), std::atan2(x(1), x(0));
    return p;
  };
  ch.psi = [](const Vec& p) { return pseudosphere_param(p); };
  ch.jac_psi = [](const Vec& p) { return pseudosphere_jac_psi(p); };
  ch.jac_phi = [](const Vec& x) {
    const double r2 = x(0) * x(0) + x(1) * x(1);
    if (r2 == 0.0)
      throw std::runtime_error("tractrix chart undefined on the axis");
    const double r = std::sqrt(r2);
    Mat J(2, 3);
    J << x(0) / r, x(1) / r, 0.0, -x(1) / r2, x(0) / r2, 0.0;
    return J;
  };
  // keep clear of the cusp circle r -> 0
  ch.valid = [](const Vec& p) { return p(0) > 0.05 && p(0) <= 1.0; };
  ch.g = [](const Vec& p) { return pseudosphere_metric(p).g; };
  ch.metric = [](const Vec& p) { return pseudosphere_metric(p); };
  return ch;
}

// kappa rescale from the tractrix chart into the potential plane:
// u1 from the angle, u2 from the radius
constexpr double kPsAs = 0.9867606472, kPsAo = -1.85;
constexpr double kPsRs = 4.406507321, kPsRo = -1.715856588;

Vec ps_potential_plane(const Vec& p) {
  Vec u(2);
  u << kPsAs * p(1) + kPsAo, kPsRs * p(0) + kPsRo;
  return u;
}

double ps_energy(const Vec& p) { return muller_brown_energy(ps_potential_plane(p)); }

Vec ps_chart_field(const Vec& p) {
  const Vec gu = muller_brown_gradient(ps_potential_plane(p));
  const double r = p(0);
  // X = -g_inv * (dE/dr, dE/dtheta)
  Vec X(2);
  X << -(r * r) * kPsRs * gu(1), -kPsAs * gu(0) / (r * r);
  return X;
}

Mat ps_chart_field_jacobian(const Vec& p) {
  const Vec u = ps_potential_plane(p);
  const Vec gu = muller_brown_gradient(u);
  const Mat Hu = muller_brown_hessian(u);
  const double r = p(0), r2 = r * r, r3 = r2 * r;
  Mat DX(2, 2);
  DX(0, 0) = -2.0 * r * kPsRs * gu(1) - r2 * kPsRs * kPsRs * Hu(1, 1);
  DX(0, 1) = -r2 * kPsRs * kPsAs * Hu(0, 1);
  DX(1, 0) = 2.0 * kPsAs * gu(0) / r3 - kPsAs * kPsRs * Hu(0, 1) / r2;
  DX(1, 1) = -kPsAs * kPsAs * Hu(0, 0) / r2;
  return DX;
}

System make_plane_mb() {
  System sys;
  sys.manifold = "plane";
  sys.potential = "mb";
  sys.n = 2;
  sys.m = 2;
  const ChartHandle ch = plane_chart();
  sys.charts.chart_at = [ch](const Vec&) { return ch; };
  sys.chart_by_id = [ch](int id) {
    if (id != 0) throw std::runtime_error("plane has a single chart, id 0");
    return ch;
  };
  sys.field.X = [](const ChartHandle&, const Vec& p) {
    return Vec(-muller_brown_gradient(p));
  };
  sys.field.jac_Y = [](const ChartHandle&, const Vec& p) {
    const Vec X = -muller_brown_gradient(p);
    const Mat DX = -muller_brown_hessian(p);
    const std::vector<Mat> dg(2, Mat::Zero(2, 2));
    return normalized_jacobian(X, DX, Mat::Identity(2, 2), dg);
  };
  sys.field.energy = [](const ChartHandle&, const Vec& p) {
    return muller_brown_energy(p);
  };
  sys.ambient_field = [](const Vec& x) {
    return Vec(-muller_brown_gradient(x));
  };
  sys.ambient_energy = [](const Vec& x) { return muller_brown_energy(x); };
  sys.project = [](const Vec& x) { return x; };
  sys.distance = [](const Vec& a, const Vec& b) { return (a - b).norm(); };
  return sys;
}

System make_sphere_common() {
  System sys;
  sys.manifold = "sphere";
  sys.n = 3;
  sys.m = 2;
  sys.charts.chart_at = [](const Vec& x) {
    return sphere_chart(x(2) <= 0.0 ? 1 : -1);
  };
  sys.chart_by_id = [](int id) {
    if (id != 1 && id != -1)
      throw std::runtime_error("sphere chart id must be +1 or -1");
    return sphere_chart(id);
  };
  sys.project = [](const Vec& x) {
    const double n = x.norm();
    if (n == 0.0) throw std::runtime_error("cannot project the origin");
    return Vec(x / n);
  };
  sys.distance = [](const Vec& a, const Vec& b) {
    return std::acos(clamp(a.dot(b), -1.0, 1.0));
  };
  return sys;
}

System make_sphere_mb() {
  System sys = make_sphere_common();
  sys.potential = "mb";
  sys.field.X = [](const ChartHandle& ch, const Vec& p) {
    const Vec x = ch.psi(p);
    const Vec ge = mb_sphere_ambient_gradient(x);
    const Mat g = ch.g(p);
    return Vec(-g.llt().solve(ch.jac_psi(p).transpose() * ge));
  };
  sys.field.jac_Y = nullptr;
  sys.field.energy = [](const ChartHandle& ch, const Vec& p) {
    return muller_brown_on_sphere(ch.psi(p));
  };
  sys.ambient_field = [](const Vec& x) {
    return muller_brown_sphere_ambient_field(x);
  };
  sys.ambient_energy = [](const Vec& x) { return muller_brown_on_sphere(x); };
  return sys;
}

System make_sphere_xyz() {
  System sys = make_sphere_common();
  sys.potential = "xyz";
  sys.field.X = [](const ChartHandle& ch, const Vec& p) {
    return xyz_chart_field(p, ch.id);
  };
  sys.field.jac_Y = [](const ChartHandle& ch, const Vec& p) {
    const Vec X = xyz_chart_field(p, ch.id);
    const Mat DX = xyz_chart_field_jacobian(p, ch.id);
    const MetricData md = stereo_metric(p);
    const double w = p.squaredNorm() + 1.0;
    const double f = -16.0 / (w * w * w);
    std::vector<Mat> dg(2);
    dg[0] = f * p(0) * Mat::Identity(2, 2);
    dg[1] = f * p(1) * Mat::Identity(2, 2);
    return normalized_jacobian(X, DX, md.g, dg);
  };
  sys.field.energy = [](const ChartHandle& ch, const Vec& p) {
    return xyz_energy_chart(p, ch.id);
  };
  sys.ambient_field = [](const Vec& x) {
    Vec ge(3);
    ge << x(1) * x(2), x(0) * x(2), x(0) * x(1);
    return Vec(-(ge - x * x.dot(ge)));
  };
  sys.ambient_energy = [](const Vec& x) { return x(0) * x(1) * x(2); };
  return sys;
}

System make_pseudosphere_mb() {
  System sys;
  sys.manifold = "pseudosphere";
  sys.potential = "mb";
  sys.n = 3;
  sys.m = 2;
  const ChartHandle ch = pseudosphere_chart();
  sys.charts.chart_at = [ch](const Vec&) { return ch; };
  sys.chart_by_id = [ch](int id) {
    if (id != 0)
      throw std::runtime_error("pseudosphere has a single chart, id 0");
    return ch;
  };
  sys.field.X = [](const ChartHandle&, const Vec& p) {
    return ps_chart_field(p);
  };
  sys.field.jac_Y = [](const ChartHandle&, const Vec& p) {
    const Vec X = ps_chart_field(p);
    const Mat DX = ps_chart_field_jacobian(p);
    const MetricData md = pseudosphere_metric(p);
    const double r = p(0);
    std::vector<Mat> dg(2, Mat::Zero(2, 2));
    dg[0](0, 0) = -2.0 / (r * r * r);
    dg[0](1, 1) = 2.0 * r;
    return normalized_jacobian(X, DX, md.g, dg);
  };
  sys.field.energy = [](const ChartHandle&, const Vec& p) {
    return ps_energy(p);
  };
  const ChartHandle chc = ch;
  sys.ambient_field = [chc](const Vec& x) {
    const Vec p = chc.phi(x);
    return Vec(chc.jac_psi(p) * ps_chart_field(p));
  };
  sys.ambient_energy = [chc](const Vec& x) { return ps_energy(chc.phi(x)); };
  sys.project = [](const Vec& x) {
    const double r = clamp(std::hypot(x(0), x(1)), 0.06, 1.0);
    Vec p(2);
    p << r, std::atan2(x(1), x(0));
    return pseudosphere_param(p);
  };
  sys.distance = [](const Vec& a, const Vec& b) { return (a - b).norm(); };
  return sys;
}

}  // namespace

System make_system(const std::string& manifold, const std::string& potential) {
  if (manifold == "plane") {
    if (potential == "mb") return make_plane_mb();
    throw std::runtime_error("potential '" + potential +
                             "' is not available on the plane");
  }
  if (manifold == "sphere") {
    if (potential == "mb") return make_sphere_mb();
    if (potential == "xyz") return make_sphere_xyz();
    throw std::runtime_error("unknown potential '" + potential + "'");
  }
  if (manifold == "pseudosphere") {
    if (potential == "mb") return make_pseudosphere_mb();
    throw std::runtime_error("potential '" + potential +
                             "' is not available on the pseudosphere");
  }
  throw std::runtime_error("unknown manifold '" + manifold + "'");
}

}  // namespace isocline
