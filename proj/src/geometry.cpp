#include "isocline/geometry.hpp"

#include <cmath>
#include <string>

namespace isocline {

Mat pullback_metric(const Mat& jac_psi) {
  Mat g = jac_psi.transpose() * jac_psi;
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0 || lo < 1e-24 * hi) {
    const double smin = std::sqrt(std::max(lo, 0.0));
    throw std::runtime_error(
        "pullback metric is singular: smallest singular value of the "
        "parameterization Jacobian is " +
        std::to_string(smin));
  }
  return g;
}

ChristoffelSymbols christoffel_from_metric(
    const std::function<Mat(const Vec&)>& metric_field, const Vec& p,
    double h) {
  const int m = static_cast<int>(p.size());
  const Mat g = metric_field(p);
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::runtime_error("metric is not positive definite at this point");
  const Mat g_inv = g.inverse();

  std::vector<Mat> dg(m);
  for (int i = 0; i < m; ++i) {
    Vec pp = p, pm = p;
    pp(i) += h;
    pm(i) -= h;
    dg[i] = (metric_field(pp) - metric_field(pm)) / (2.0 * h);
  }

  ChristoffelSymbols gamma(m, Mat::Zero(m, m));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double s = 0.0;
        for (int l = 0; l < m; ++l)
          s += g_inv(k, l) * (dg[j](l, i) + dg[i](l, j) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * s;
        gamma[k](j, i) = gamma[k](i, j);
      }
  return gamma;
}

Mat covariant_matrix(const Mat& jac_W, const ChristoffelSymbols& gamma,
                     const Vec& W) {
  const int m = static_cast<int>(W.size());
  if (jac_W.rows() != m || jac_W.cols() != m ||
      static_cast<int>(gamma.size()) != m)
    throw std::runtime_error("covariant_matrix: shape mismatch");
  Mat a = jac_W;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) a(k, i) += gamma[k].row(i).dot(W);
  return a;
}

Vec normalize_field(const Vec& X, const Mat& g, double tol) {
  const double q = X.dot(g * X);
  if (q <= tol * tol)
    throw std::runtime_error(
        "field norm sqrt(g(X, X)) vanishes: the point is an equilibrium");
  return X / std::sqrt(q);
}

LineFieldResult line_field_direction(const Mat& A, double rank_gap_tol) {
  const int m = static_cast<int>(A.rows());
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();  // non-increasing
  const double smax = sv(0);
  if (!(smax > 0.0))
    throw AmbiguousKernelError(
        "ambiguous kernel: the covariant matrix vanishes");
  if (m >= 2 && sv(m - 2) / smax < rank_gap_tol)
    throw AmbiguousKernelError(
        "ambiguous kernel: second-smallest singular value ratio " +
        std::to_string(sv(m - 2) / smax) + " is below the rank-gap tolerance");
  LineFieldResult out;
  out.direction = svd.matrixV().col(m - 1);
  out.residual = sv(m - 1) / smax;
  return out;
}

Mat adjugate(const Mat& M) {
  const int m = static_cast<int>(M.rows());
  if (m == 1) return Mat::Ones(1, 1);
  Mat cof(m, m);
  Mat minor(m - 1, m - 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int r = 0, mr = 0; r < m; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < m; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = M(r, c);
        }
        ++mr;
      }
      cof(i, j) = (((i + j) & 1) ? -1.0 : 1.0) * minor.determinant();
    }
  return cof.transpose();
}

Mat normalized_jacobian(const Vec& X, const Mat& DX, const Mat& g,
                        const std::vector<Mat>& dg) {
  const int m = static_cast<int>(X.size());
  const double q = X.dot(g * X);
  if (q <= 0.0)
    throw std::runtime_error(
        "field norm sqrt(g(X, X)) vanishes: the point is an equilibrium");
  const double s = std::sqrt(q);
  Mat J(m, m);
  const Vec gX = g * X;
  for (int i = 0; i < m; ++i) {
    const double ds =
        (gX.dot(DX.col(i)) + 0.5 * X.dot(dg[i] * X)) / s;
    J.col(i) = DX.col(i) / s - X * (ds / q);
  }
  return J;
}

}  // namespace isocline
