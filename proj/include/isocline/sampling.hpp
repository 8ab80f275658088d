#pragma once

#include "geometry.hpp"

#include <cstdint>
#include <string>

namespace isocline {

struct PointCloud {
  Mat points;        // K x n
  Mat field_values;  // K x n, or 0 x 0 before populate_field
  Vec center;
  double radius = 0;
};

// Manifold access needed by the ball sampler.
struct ManifoldOps {
  std::function<Vec(const Vec&)> project;  // ambient -> manifold
  std::function<double(const Vec&, const Vec&)> distance;
};

struct MetropolisParams {
  double proposal_frac = 0.25;    // Gaussian proposal scale as fraction of r
  int thinning = 10;              // record every this many proposals
  int stuck_window = 100;         // proposals before the acceptance check
  double min_acceptance = 0.01;
};

// Uniform-target Metropolis walk over the geodesic ball of radius r around
// center. Proposals are ambient Gaussian steps re-projected to the manifold;
// moves leaving the ball are rejected. Throws when the chain is stuck.
PointCloud metropolis_sample(const Vec& center, double r, int K,
                             const ManifoldOps& ops, std::uint64_t seed,
                             const MetropolisParams& params = {});

// Exact geodesic normal-coordinate sampler on the unit sphere: tangent
// direction uniform, geodesic radius r*sqrt(u).
PointCloud exp_map_sample(const Vec& center, double r, int K,
                          std::uint64_t seed);

struct SdeParams {
  double zeta = 1.0;   // restraint stiffness
  double beta = 1.0;   // inverse temperature
  double dt = 1e-3;
  long steps = 10000;
  std::uint64_t seed = 0;
  double burn_in_frac = 0.2;
  double divergence_bound = 1e6;
};

struct SdeResult {
  Vec mean_point;
  Vec mean_field;
};

// Euler-Maruyama for dw = [X(w) - zeta * Jphi(w)^T (phi(w) - target)] dt
// + sqrt(2 dt / beta) N(0, I). Means are over the post-burn-in tail.
SdeResult biased_sde_sample(const std::function<Vec(const Vec&)>& X,
                            const std::function<Vec(const Vec&)>& phi,
                            const std::function<Mat(const Vec&)>& jac_phi,
                            const Vec& target, const Vec& w0,
                            const SdeParams& params);

void populate_field(PointCloud& cloud, const std::function<Vec(const Vec&)>& X);

// Header x_1..x_n[,X_1..X_n], one row per sample, %.17g.
void write_cloud_csv(const PointCloud& cloud, const std::string& path);
PointCloud read_cloud_csv(const std::string& path);

}  // namespace isocline
