#pragma once

#include "chart.hpp"
#include "sampling.hpp"

#include <memory>
#include <string>

namespace isocline {

struct DiffusionEmbedding {
  double bandwidth = 0;
  Vec eigenvalues;  // the m retained nontrivial eigenvalues, non-increasing
  Mat coordinates;  // K x m, row i embeds point i
  Vec spectrum;     // leading nontrivial eigenvalues (diagnostic, >= m)
};

// Median pairwise distance, zero distances excluded.
double median_bandwidth(const Mat& points);

// Density-normalized (alpha = 1) diffusion maps. Eigenpairs come from the
// symmetric conjugate of the Markov matrix, so eigenvalues are real and lie
// in (-1, 1]. The constant eigenvector is dropped; coordinates are
// eigenvalue-scaled, unit-normalized, sign-fixed (largest-|entry| positive).
DiffusionEmbedding diffusion_maps(const Mat& points, double eps, int m);

struct GprModel {
  Mat inputs;   // K x d
  Mat alpha;    // K x e, (K_nu + noise I)^{-1} targets
  Mat chol_l;   // lower Cholesky factor of (K_nu + noise I)
  double length_scale = 0;
  double noise = 0;  // effective jitter actually used
  double prior_variance = 1.0;
};

// Squared-exponential kernel exp(-|x-y|^2 / (2 nu^2)), shared across output
// components. Cholesky jitter escalates x100 up to 8 attempts.
GprModel gpr_fit(const Mat& inputs, const Mat& targets, double nu,
                 double sigma2 = 1e-10);

Vec gpr_predict(const GprModel& model, const Vec& x);
Mat gpr_jacobian(const GprModel& model, const Vec& x);  // e x d
// One d x d Hessian per output component.
std::vector<Mat> gpr_hessian(const GprModel& model, const Vec& x);
// Posterior covariance s^2(x) * I_e (outputs share the kernel, so the
// cross-output covariance is a scalar multiple of the identity).
Mat gpr_covariance(const GprModel& model, const Vec& x);
double gpr_covariance_norm(const GprModel& model, const Vec& x);  // Frobenius

// Chart image of an ambient vector: "jacobian" uses the model derivative,
// "fd" a forward difference along X with increment dt.
Vec pushforward_field(const GprModel& phi, const Vec& x, const Vec& X,
                      const std::string& mode = "jacobian", double dt = 1e-6);

struct LearnedChart {
  DiffusionEmbedding embedding;
  GprModel phi;  // ambient -> chart
  GprModel psi;  // chart -> ambient
  int n = 0;
  int m = 0;
  double eta = 1e-5;  // confidence exit threshold on ||Sigma_phi(psi(p))||_F
};

struct LearnConfig {
  int m = 2;
  double eta = 1e-5;
  double sigma2 = 1e-10;
  double christoffel_h = 1e-5;
};

// diffusion_maps on the cloud, then GPR fits for phi (ambient -> embedding)
// and psi (embedding -> ambient). phi uses the diffusion bandwidth; psi uses
// the median distance of its own (embedding-space) inputs.
LearnedChart build_learned_chart(const PointCloud& cloud,
                                 const LearnConfig& config);

ChartHandle learned_chart_handle(std::shared_ptr<const LearnedChart> chart,
                                 int id, double christoffel_h = 1e-5);

std::string chart_to_json(const LearnedChart& chart);
LearnedChart chart_from_json(const std::string& text);

}  // namespace isocline
