#include "isocline/sampling.hpp"

#include "isocline/rng.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace isocline {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PointCloud metropolis_sample(const Vec& center, double r, int K,
                             const ManifoldOps& ops, std::uint64_t seed,
                             const MetropolisParams& params) {
  if (K <= 0) throw std::runtime_error("sample count K must be positive");
  if (!(r > 0.0)) throw std::runtime_error("ball radius r must be positive");
  const int n = static_cast<int>(center.size());
  Rng rng(seed);
  PointCloud cloud;
  cloud.center = center;
  cloud.radius = r;
  cloud.points.resize(K, n);

  Vec state = center;
  const double scale = params.proposal_frac * r;
  long proposals = 0, accepted = 0;
  int recorded = 0;
  while (recorded < K) {
    Vec w = state;
    for (int i = 0; i < n; ++i) w(i) += scale * rng.normal();
    w = ops.project(w);
    ++proposals;
    if (ops.distance(center, w) <= r) {
      state = w;
      ++accepted;
    }
    if (proposals == params.stuck_window &&
        accepted < params.min_acceptance * params.stuck_window)
      throw std::runtime_error(
          "sampler stuck: acceptance " + std::to_string(accepted) + "/" +
          std::to_string(proposals) +
          " proposals accepted; reduce the proposal scale or check the "
          "projection");
    if (proposals % params.thinning == 0)
      cloud.points.row(recorded++) = state.transpose();
  }
  return cloud;
}

PointCloud exp_map_sample(const Vec& center, double r, int K,
                          std::uint64_t seed) {
  if (center.size() != 3 || std::abs(center.norm() - 1.0) > 1e-9)
    throw std::runtime_error(
        "geodesic sampling is implemented for the unit sphere only");
  if (K <= 0) throw std::runtime_error("sample count K must be positive");
  if (!(r >= 0.0 && r < 3.14159265358979323846))
    throw std::runtime_error("geodesic radius must lie in [0, pi)");
  Rng rng(seed);

  // tangent frame at the center
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(center(i)) < std::abs(center(k))) k = i;
  Eigen::Vector3d c = center;
  Eigen::Vector3d t1 = -center(k) * c;
  t1(k) += 1.0;
  t1.normalize();
  const Eigen::Vector3d t2 = c.cross(t1);

  PointCloud cloud;
  cloud.center = center;
  cloud.radius = r;
  cloud.points.resize(K, 3);
  for (int i = 0; i < K; ++i) {
    const double rho = r * std::sqrt(rng.uniform());  // area-uniform radius
    const double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
    const Eigen::Vector3d dir = std::cos(phi) * t1 + std::sin(phi) * t2;
    cloud.points.row(i) =
        (std::cos(rho) * c + std::sin(rho) * dir).transpose();
  }
  return cloud;
}

SdeResult biased_sde_sample(const std::function<Vec(const Vec&)>& X,
                            const std::function<Vec(const Vec&)>& phi,
                            const std::function<Mat(const Vec&)>& jac_phi,
                            const Vec& target, const Vec& w0,
                            const SdeParams& params) {
  if (params.steps <= 0) throw std::runtime_error("step count must be positive");
  if (!(params.dt > 0.0)) throw std::runtime_error("dt must be positive");
  if (!(params.beta > 0.0)) throw std::runtime_error("beta must be positive");
  const int n = static_cast<int>(w0.size());
  Rng rng(params.seed);
  Vec w = w0;
  const long burn = static_cast<long>(
      static_cast<double>(params.steps) * params.burn_in_frac);
  Vec acc_w = Vec::Zero(n), acc_x = Vec::Zero(n);
  long count = 0;
  const double noise = std::sqrt(2.0 * params.dt / params.beta);
  for (long t = 0; t < params.steps; ++t) {
    const Vec drift =
        X(w) - params.zeta * (jac_phi(w).transpose() * (phi(w) - target));
    for (int i = 0; i < n; ++i)
      w(i) += drift(i) * params.dt + noise * rng.normal();
    if (!w.allFinite() || w.norm() > params.divergence_bound)
      throw std::runtime_error(
          "biased walk diverged: |w| exceeded the divergence bound; reduce "
          "dt or stiffen the restraint");
    if (t >= burn) {
      acc_w += w;
      acc_x += X(w);
      ++count;
    }
  }
  if (count == 0)
    throw std::runtime_error("no samples after burn-in: increase steps");
  SdeResult out;
  out.mean_point = acc_w / static_cast<double>(count);
  out.mean_field = acc_x / static_cast<double>(count);
  return out;
}

void populate_field(PointCloud& cloud,
                    const std::function<Vec(const Vec&)>& X) {
  const int K = static_cast<int>(cloud.points.rows());
  const int n = static_cast<int>(cloud.points.cols());
  cloud.field_values.resize(K, n);
  for (int i = 0; i < K; ++i)
    cloud.field_values.row(i) = X(cloud.points.row(i).transpose()).transpose();
}

void write_cloud_csv(const PointCloud& cloud, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  const int K = static_cast<int>(cloud.points.rows());
  const int n = static_cast<int>(cloud.points.cols());
  const bool has_field = cloud.field_values.rows() == K;
  for (int i = 1; i <= n; ++i) f << (i == 1 ? "" : ",") << "x_" << i;
  if (has_field)
    for (int i = 1; i <= n; ++i) f << ",X_" << i;
  f << '\n';
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < n; ++j)
      f << (j == 0 ? "" : ",") << fmt17(cloud.points(i, j));
    if (has_field)
      for (int j = 0; j < n; ++j) f << ',' << fmt17(cloud.field_values(i, j));
    f << '\n';
  }
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

PointCloud read_cloud_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line))
    throw std::runtime_error("'" + path + "' is empty");
  int n = 0, nf = 0;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell.rfind("x_", 0) == 0)
        ++n;
      else if (cell.rfind("X_", 0) == 0)
        ++nf;
      else
        throw std::runtime_error("unrecognized column '" + cell + "' in '" +
                                 path + "'");
    }
  }
  if (n == 0) throw std::runtime_error("no coordinate columns in '" + path + "'");
  if (nf != 0 && nf != n)
    throw std::runtime_error("field column count mismatch in '" + path + "'");
  std::vector<double> vals;
  int rows = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int got = 0;
    while (std::getline(ss, cell, ',')) {
      vals.push_back(std::strtod(cell.c_str(), nullptr));
      ++got;
    }
    if (got != n + nf)
      throw std::runtime_error("row width mismatch in '" + path + "'");
    ++rows;
  }
  PointCloud cloud;
  cloud.points.resize(rows, n);
  if (nf) cloud.field_values.resize(rows, n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) cloud.points(i, j) = vals[i * (n + nf) + j];
    for (int j = 0; j < nf; ++j)
      cloud.field_values(i, j) = vals[i * (n + nf) + n + j];
  }
  return cloud;
}

}  // namespace isocline
