#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <vector>

namespace isocline {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// gamma[k](i, j) = Gamma^k_{ij}, symmetric in (i, j)
using ChristoffelSymbols = std::vector<Mat>;

struct MetricData {
  Mat g;
  Mat g_inv;
  ChristoffelSymbols gamma;
};

struct LineFieldResult {
  Vec direction;    // unit kernel direction, sign unspecified
  double residual;  // sigma_min / sigma_max
};

// Thrown when the two smallest singular values are not separated: the kernel
// line is not well defined at this point.
struct AmbiguousKernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// g = J^T J for an n x m Jacobian of full column rank.
Mat pullback_metric(const Mat& jac_psi);

// Central differences of the metric field; result is exactly symmetric in the
// lower indices by construction.
ChristoffelSymbols christoffel_from_metric(
    const std::function<Mat(const Vec&)>& metric_field, const Vec& p,
    double h = 1e-5);

// a(k, i) = dW^k/dp^i + sum_j Gamma^k_{ij} W^j
Mat covariant_matrix(const Mat& jac_W, const ChristoffelSymbols& gamma,
                     const Vec& W);

// X / sqrt(g(X, X)); throws when g(X, X) <= tol^2 (at an equilibrium).
Vec normalize_field(const Vec& X, const Mat& g, double tol = 0.0);

LineFieldResult line_field_direction(const Mat& A, double rank_gap_tol = 1e-8);

// Adjugate (transposed cofactor matrix): M * adjugate(M) = det(M) * I.
Mat adjugate(const Mat& M);

// Exact Jacobian of Y = X / sqrt(X^T g X) from analytic derivative data.
// dg[i](k, l) = d g_{kl} / dp^i.
Mat normalized_jacobian(const Vec& X, const Mat& DX, const Mat& g,
                        const std::vector<Mat>& dg);

}  // namespace isocline
