#include "doctest.h"

#include "isocline/learn.hpp"
#include "isocline/manifolds.hpp"
#include "isocline/rng.hpp"
#include "isocline/sampling.hpp"

#include <cmath>
#include <memory>

using namespace isocline;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

const Vec kDeepSphere =
    vec3(0.75211518239054054, 0.57718470229563468, 0.3180889370184754);

Mat ring_points(int K) {
  Mat pts(K, 3);
  for (int i = 0; i < K; ++i) {
    const double t = 2.0 * 3.14159265358979323846 * i / K;
    pts.row(i) << std::cos(t), std::sin(t), 0.0;
  }
  return pts;
}

// smooth scalar test function on the unit square
double test_fn(const Vec& x) {
  return std::sin(2.0 * x(0)) + std::cos(x(1));
}

Mat uniform_inputs(int K, Rng& rng) {
  Mat X(K, 2);
  for (int i = 0; i < K; ++i) X.row(i) << rng.uniform(), rng.uniform();
  return X;
}

}  // namespace

TEST_CASE("median bandwidth summarizes pairwise distances") {
  Mat tri(3, 2);
  tri << 0.0, 0.0, 3.0, 0.0, 0.0, 4.0;  // distances 3, 4, 5
  CHECK(median_bandwidth(tri) == 4.0);

  Mat pair(2, 2);
  pair << 0.0, 0.0, 2.0, 0.0;
  CHECK(median_bandwidth(pair) == 2.0);

  // zero distances from duplicates are excluded
  Mat dup(3, 2);
  dup << 0.0, 0.0, 0.0, 0.0, 1.0, 0.0;
  CHECK(median_bandwidth(dup) == 1.0);

  Mat all_same(2, 2);
  all_same << 1.0, 1.0, 1.0, 1.0;
  CHECK_THROWS_AS((void)median_bandwidth(all_same), std::runtime_error);
}

TEST_CASE("diffusion maps embed a ring with the expected spectrum") {
  const int K = 60;
  const Mat pts = ring_points(K);
  const double eps = median_bandwidth(pts);
  const DiffusionEmbedding emb = diffusion_maps(pts, eps, 2);

  REQUIRE(emb.eigenvalues.size() == 2);
  REQUIRE(emb.coordinates.rows() == K);
  REQUIRE(emb.coordinates.cols() == 2);
  CHECK(emb.bandwidth == eps);

  // nontrivial eigenvalues lie strictly inside (0, 1) here, sorted
  CHECK(emb.eigenvalues(0) < 1.0);
  CHECK(emb.eigenvalues(0) > 0.0);
  CHECK(emb.eigenvalues(0) >= emb.eigenvalues(1));
  // the ring's rotational symmetry makes the leading pair degenerate
  CHECK(std::abs(emb.eigenvalues(0) - emb.eigenvalues(1)) < 1e-10);

  // columns are eigenvalue-scaled unit vectors with a positive anchor entry
  for (int k = 0; k < 2; ++k) {
    CHECK(emb.coordinates.col(k).norm() ==
          doctest::Approx(emb.eigenvalues(k)).epsilon(1e-12));
    int imax = 0;
    emb.coordinates.col(k).cwiseAbs().maxCoeff(&imax);
    CHECK(emb.coordinates(imax, k) > 0.0);
  }

  // the embedded ring is round: per-row radii are nearly constant
  const Vec radii = emb.coordinates.rowwise().norm();
  CHECK((radii.maxCoeff() - radii.minCoeff()) / radii.maxCoeff() < 1e-6);

  CHECK(emb.spectrum.size() >= 2);
  CHECK(emb.spectrum(0) == emb.eigenvalues(0));
}

TEST_CASE("diffusion maps reject unusable inputs") {
  const Mat pts = ring_points(20);
  CHECK_THROWS_AS((void)diffusion_maps(pts, -1.0, 2), std::runtime_error);
  CHECK_THROWS_AS((void)diffusion_maps(pts, 0.5, 20), std::runtime_error);
  CHECK_THROWS_AS((void)diffusion_maps(pts, 0.5, 0), std::runtime_error);

  // a point far beyond the bandwidth leaves a numerically zero kernel row
  Mat split = ring_points(20);
  split(0, 0) = 1000.0;
  CHECK_THROWS_AS((void)diffusion_maps(split, 0.05, 2), std::runtime_error);
}

TEST_CASE("gaussian process regression interpolates and generalizes") {
  Rng rng(5);
  const int K = 50;
  const Mat X = uniform_inputs(K, rng);
  Mat y(K, 1);
  for (int i = 0; i < K; ++i) y(i, 0) = test_fn(X.row(i).transpose());
  const double nu = median_bandwidth(X);
  const GprModel model = gpr_fit(X, y, nu);

  double train_err = 0.0;
  for (int i = 0; i < K; ++i)
    train_err = std::max(train_err,
                         std::abs(gpr_predict(model, X.row(i).transpose())(0) -
                                  y(i, 0)));
  CHECK(train_err < 1e-6);

  double test_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Vec x = vec2(rng.uniform(), rng.uniform());
    test_err = std::max(test_err,
                        std::abs(gpr_predict(model, x)(0) - test_fn(x)));
  }
  CHECK(test_err < 1e-3);

  CHECK_THROWS_AS((void)gpr_fit(X, y, -1.0), std::runtime_error);
  CHECK_THROWS_AS((void)gpr_fit(X, y.topRows(10), nu), std::runtime_error);
}

TEST_CASE("gpr derivatives match finite differences") {
  Rng rng(5);
  const Mat X = uniform_inputs(40, rng);
  Mat y(40, 2);
  for (int i = 0; i < 40; ++i) {
    const Vec x = X.row(i).transpose();
    y(i, 0) = test_fn(x);
    y(i, 1) = x(0) * x(1);
  }
  const GprModel model = gpr_fit(X, y, median_bandwidth(X));
  const Vec x0 = vec2(0.45, 0.55);

  const double h = 1e-6;
  Mat Jfd(2, 2);
  for (int i = 0; i < 2; ++i) {
    Vec xp = x0, xm = x0;
    xp(i) += h;
    xm(i) -= h;
    Jfd.col(i) = (gpr_predict(model, xp) - gpr_predict(model, xm)) / (2.0 * h);
  }
  // the bound reflects cancellation in the interpolant, not the formula
  CHECK((Jfd - gpr_jacobian(model, x0)).norm() < 1e-5);

  const std::vector<Mat> H = gpr_hessian(model, x0);
  REQUIRE(H.size() == 2);
  for (int e = 0; e < 2; ++e) {
    Mat Hfd(2, 2);
    for (int i = 0; i < 2; ++i) {
      Vec xp = x0, xm = x0;
      xp(i) += h;
      xm(i) -= h;
      Hfd.col(i) = (gpr_jacobian(model, xp).row(e) -
                    gpr_jacobian(model, xm).row(e))
                       .transpose() /
                   (2.0 * h);
    }
    CHECK((Hfd - H[e]).norm() < 1e-5);
    CHECK((H[e] - H[e].transpose()).norm() < 1e-10);
  }
}

TEST_CASE("gpr posterior variance vanishes on data and saturates far away") {
  Rng rng(5);
  const Mat X = uniform_inputs(30, rng);
  Mat y(30, 2);
  for (int i = 0; i < 30; ++i)
    y.row(i) << test_fn(X.row(i).transpose()), 1.0;
  const GprModel model = gpr_fit(X, y, median_bandwidth(X));

  for (int i = 0; i < 30; ++i) {
    const Mat S = gpr_covariance(model, X.row(i).transpose());
    CHECK(S(0, 0) >= 0.0);
    CHECK(S(0, 0) < 1e-6);
    CHECK(S(0, 1) == 0.0);
  }
  // far from all data the prior variance is recovered
  const Mat Sfar = gpr_covariance(model, vec2(100.0, 100.0));
  CHECK(Sfar(0, 0) > 0.9);
  CHECK(Sfar(1, 1) == Sfar(0, 0));
  CHECK(gpr_covariance_norm(model, vec2(100.0, 100.0)) ==
        doctest::Approx(Sfar(0, 0) * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("gpr jitter rescues a singular kernel matrix") {
  Mat X(4, 2);
  X << 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0;  // duplicated row
  Mat y(4, 1);
  y << 2.0, 2.0, -1.0, 0.5;
  const GprModel model = gpr_fit(X, y, 0.7);
  CHECK(model.noise >= 1e-10);
  CHECK(gpr_predict(model, vec2(0.0, 0.0))(0) ==
        doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("pushforward of an ambient vector matches the linear map") {
  // phi is a fixed linear map fitted from samples, so its pushforward is M X
  Mat M(2, 3);
  M << 0.7, -0.2, 0.4, 0.1, 0.9, -0.3;
  Rng rng(17);
  const int K = 60;
  Mat X(K, 3);
  Mat y(K, 2);
  for (int i = 0; i < K; ++i) {
    const Vec x = vec3(rng.uniform(), rng.uniform(), rng.uniform());
    X.row(i) = x.transpose();
    y.row(i) = (M * x).transpose();
  }
  const GprModel phi = gpr_fit(X, y, median_bandwidth(X));
  const Vec x0 = vec3(0.5, 0.4, 0.6);
  const Vec v = vec3(0.3, -0.2, 0.1);
  const Vec want = M * v;

  const Vec push = pushforward_field(phi, x0, v);
  CHECK((push - want).norm() / want.norm() < 1e-2);
  const Vec push_fd = pushforward_field(phi, x0, v, "fd");
  CHECK((push_fd - push).norm() < 1e-4);
  CHECK_THROWS_AS((void)pushforward_field(phi, x0, v, "nope"),
                  std::runtime_error);
}

TEST_CASE("learned charts invert themselves near their data") {
  PointCloud cloud = exp_map_sample(kDeepSphere, 0.3, 120, 21);
  const System sys = make_system("sphere", "mb");
  populate_field(cloud, sys.ambient_field);

  LearnConfig config;
  const LearnedChart chart = build_learned_chart(cloud, config);
  CHECK(chart.n == 3);
  CHECK(chart.m == 2);
  CHECK(chart.embedding.eigenvalues(0) > 0.0);

  // phi and psi are mutual inverses on the training cloud
  double worst = 0.0;
  for (int i = 0; i < 120; ++i) {
    const Vec x = cloud.points.row(i).transpose();
    const Vec p = gpr_predict(chart.phi, x);
    const Vec back = gpr_predict(chart.psi, p);
    worst = std::max(worst, (back - x).norm());
  }
  CHECK(worst < 1e-4);

  const auto handle = learned_chart_handle(
      std::make_shared<const LearnedChart>(chart), 100);
  CHECK(handle.id == 100);
  CHECK(handle.n == 3);
  const Vec pc = handle.phi(kDeepSphere);
  CHECK(handle.valid(pc));
  CHECK((handle.psi(pc) - kDeepSphere).norm() < 1e-3);

  // metric is positive definite where the chart is confident
  const MetricData md = handle.metric(pc);
  const Eigen::SelfAdjointEigenSolver<Mat> es(md.g);
  CHECK(es.eigenvalues()(0) > 0.0);
  CHECK((md.g * md.g_inv - Mat::Identity(2, 2)).norm() < 1e-10);
  for (int k = 0; k < 2; ++k) CHECK(md.gamma[k].allFinite());

  // far outside the sampled ball the confidence predicate rejects
  const Vec far_p = pc + vec2(100.0, 100.0);
  CHECK_FALSE(handle.valid(far_p));
}

TEST_CASE("learned charts serialize losslessly") {
  PointCloud cloud = exp_map_sample(kDeepSphere, 0.3, 80, 33);
  const System sys = make_system("sphere", "mb");
  populate_field(cloud, sys.ambient_field);
  const LearnedChart chart = build_learned_chart(cloud, {});

  const std::string text = chart_to_json(chart);
  const LearnedChart back = chart_from_json(text);
  CHECK(back.n == chart.n);
  CHECK(back.m == chart.m);
  CHECK(back.eta == chart.eta);

  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const Vec x = exp_map_sample(kDeepSphere, 0.25, 1, 50 + i)
                      .points.row(0)
                      .transpose();
    CHECK((gpr_predict(back.phi, x) - gpr_predict(chart.phi, x)).norm() <
          1e-14);
    const Vec p = gpr_predict(chart.phi, x);
    CHECK((gpr_predict(back.psi, p) - gpr_predict(chart.psi, p)).norm() <
          1e-14);
    CHECK(std::abs(gpr_covariance_norm(back.phi, x) -
                   gpr_covariance_norm(chart.phi, x)) < 1e-14);
  }

  CHECK_THROWS_AS((void)chart_from_json("{not json"), std::runtime_error);
  CHECK_THROWS_AS((void)chart_from_json("{\"version\": 99}"),
                  std::runtime_error);
}

TEST_CASE("markov spectrum oracle pins the trivial eigenvalue at one") {
  const Mat pts = ring_points(16);
  const double eps = median_bandwidth(pts);
  const int K = 16, m = 3;

  // independent reconstruction of the density-normalized Markov spectrum
  Mat k(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      k(i, j) = std::exp(-(pts.row(i) - pts.row(j)).squaredNorm() /
                         (2.0 * eps * eps));
  const Vec q = k.rowwise().sum();
  Mat kt = k;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) kt(i, j) /= q(i) * q(j);
  const Vec d = kt.rowwise().sum();
  Mat S = kt;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) S(i, j) /= std::sqrt(d(i) * d(j));
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  Vec lam = es.eigenvalues().reverse();  // non-increasing

  CHECK(lam(0) == doctest::Approx(1.0).epsilon(1e-12));
  const DiffusionEmbedding emb = diffusion_maps(pts, eps, m);
  for (int i = 0; i < m; ++i) {
    CHECK(emb.eigenvalues(i) == doctest::Approx(lam(i + 1)).epsilon(1e-10));
    CHECK(emb.eigenvalues(i) < 1.0);
    CHECK(emb.eigenvalues(i) > -1.0);
  }
}

TEST_CASE("diffusion coordinates recover the ring angle") {
  const int K = 60;
  const Mat pts = ring_points(K);
  const DiffusionEmbedding emb = diffusion_maps(pts, median_bandwidth(pts), 2);
  double best = 0;
  for (double s : {1.0, -1.0}) {
    double sx = 0, sy = 0;
    for (int i = 0; i < K; ++i) {
      const double rec = std::atan2(emb.coordinates(i, 1),
                                    emb.coordinates(i, 0));
      const double tru = 2.0 * 3.14159265358979323846 * i / K;
      sx += std::cos(rec - s * tru);
      sy += std::sin(rec - s * tru);
    }
    best = std::max(best, std::sqrt(sx * sx + sy * sy) / K);
  }
  CHECK(best > 0.999);
}

TEST_CASE("leading diffusion coordinate is monotonic along an arc") {
  const int K = 40;
  Mat pts(K, 2);
  for (int i = 0; i < K; ++i) {
    const double t = 0.8 * 3.14159265358979323846 * i / (K - 1);
    pts.row(i) << std::cos(t), std::sin(t);
  }
  const DiffusionEmbedding emb = diffusion_maps(pts, median_bandwidth(pts), 1);
  const double sign = emb.coordinates(K - 1, 0) > emb.coordinates(0, 0)
                          ? 1.0
                          : -1.0;
  for (int i = 1; i < K; ++i)
    CHECK(sign * (emb.coordinates(i, 0) - emb.coordinates(i - 1, 0)) > 0.0);
}

TEST_CASE("gpr leaves one out below a millesimal error") {
  Rng rng(5);
  const int K = 50;
  const Mat X = uniform_inputs(K, rng);
  Mat y(K, 1);
  for (int i = 0; i < K; ++i) y(i, 0) = test_fn(X.row(i).transpose());
  const double nu = median_bandwidth(X);

  double sum_sq = 0;
  for (int leave = 0; leave < K; ++leave) {
    Mat Xi(K - 1, 2), yi(K - 1, 1);
    int rr = 0;
    for (int i = 0; i < K; ++i) {
      if (i == leave) continue;
      Xi.row(rr) = X.row(i);
      yi.row(rr) = y.row(i);
      ++rr;
    }
    const GprModel model = gpr_fit(Xi, yi, nu);
    const double e =
        gpr_predict(model, X.row(leave).transpose())(0) - y(leave, 0);
    sum_sq += e * e;
  }
  CHECK(std::sqrt(sum_sq / K) < 1e-3);
}

TEST_CASE("gpr solves its own normal system") {
  Rng rng(5);
  const int K = 50;
  const Mat X = uniform_inputs(K, rng);
  Mat y(K, 2);
  for (int i = 0; i < K; ++i) {
    y(i, 0) = test_fn(X.row(i).transpose());
    y(i, 1) = X(i, 0) * X(i, 1);
  }
  const double nu = median_bandwidth(X);
  const GprModel model = gpr_fit(X, y, nu);

  Mat km(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      km(i, j) = model.prior_variance *
                 std::exp(-(X.row(i) - X.row(j)).squaredNorm() /
                          (2.0 * nu * nu));
  km += model.noise * Mat::Identity(K, K);
  CHECK((km * model.alpha - y).cwiseAbs().maxCoeff() < 1e-10);

  // interpolation within the jitter scale
  double worst = 0;
  for (int i = 0; i < K; ++i)
    worst = std::max(
        worst, (gpr_predict(model, X.row(i).transpose()) - y.row(i).transpose())
                   .norm());
  CHECK(worst < std::sqrt(model.noise) + 1e-8);
}

TEST_CASE("gpr degenerate fits behave exactly") {
  // all-zero targets propagate to zero coefficients
  Rng rng(77);
  const Mat X = uniform_inputs(10, rng);
  const GprModel zero = gpr_fit(X, Mat::Zero(10, 1), 0.5);
  CHECK(zero.alpha.cwiseAbs().maxCoeff() == 0.0);
  CHECK(gpr_predict(zero, vec2(0.3, 0.3))(0) == 0.0);

  // a single pair interpolates to the jitter floor and decays far away
  Mat x0(1, 2), y0(1, 2);
  x0 << 0.3, 0.7;
  y0 << 2.5, -1.0;
  const GprModel one = gpr_fit(x0, y0, 0.4, 0.0);
  CHECK((gpr_predict(one, x0.row(0).transpose()) - y0.row(0).transpose())
            .norm() < 1e-9);
  CHECK(gpr_predict(one, vec2(50.0, 50.0)).norm() < 1e-12);
}

TEST_CASE("gpr prediction matches the direct kernel sum") {
  Rng rng(5);
  const int K = 50;
  const Mat X = uniform_inputs(K, rng);
  Mat y(K, 1);
  for (int i = 0; i < K; ++i) y(i, 0) = test_fn(X.row(i).transpose());
  const double nu = median_bandwidth(X);
  const GprModel model = gpr_fit(X, y, nu);

  Rng probe(6);
  for (int trial = 0; trial < 5; ++trial) {
    const Vec x = vec2(probe.uniform(), probe.uniform());
    double direct = 0, cond = 0;
    for (int l = 0; l < K; ++l) {
      const double term =
          model.alpha(l, 0) * model.prior_variance *
          std::exp(-(x.transpose() - X.row(l)).squaredNorm() /
                   (2.0 * nu * nu));
      direct += term;
      cond += std::abs(term);
    }
    // the 1e-14 agreement is per unit of cancellation mass: near-singular
    // interpolation drives |alpha| to 1e3 scale, so the raw sums differ at
    // cond * eps no matter the summation order
    CHECK(std::abs(gpr_predict(model, x)(0) - direct) < 1e-14 * cond);
  }
}

TEST_CASE("gpr jacobian is linear in the coefficients") {
  Rng rng(5);
  const Mat X = uniform_inputs(20, rng);
  Mat y(20, 1);
  for (int i = 0; i < 20; ++i) y(i, 0) = test_fn(X.row(i).transpose());
  const GprModel model = gpr_fit(X, y, 0.5);
  GprModel scaled = model;
  scaled.alpha *= 3.5;
  const Vec x = vec2(0.4, 0.6);
  CHECK((gpr_jacobian(scaled, x) - 3.5 * gpr_jacobian(model, x)).norm() <
        1e-12);
}

TEST_CASE("gpr hessian trace matches the separable oracle") {
  // single kernel bump: the prediction factorizes per coordinate, so the
  // Laplacian is a sum of one-dimensional second derivatives
  Mat x0(1, 2), y0(1, 1);
  x0 << 0.2, -0.4;
  y0 << 1.7;
  const double nu = 0.6;
  const GprModel model = gpr_fit(x0, y0, nu, 0.0);
  const double alpha = model.alpha(0, 0);

  Rng rng(9);
  for (int trial = 0; trial < 3; ++trial) {
    const Vec x = vec2(rng.normal() * 0.3, rng.normal() * 0.3);
    const double f = gpr_predict(model, x)(0);
    double lap = 0;
    for (int i = 0; i < 2; ++i) {
      const double di = x(i) - x0(0, i);
      lap += f * (di * di / std::pow(nu, 4.0) - 1.0 / (nu * nu));
    }
    const std::vector<Mat> H = gpr_hessian(model, x);
    CHECK(H[0].trace() == doctest::Approx(lap).epsilon(1e-12));
  }

  // exactly on the bump the hessian is the isotropic peak curvature
  const std::vector<Mat> H0 = gpr_hessian(model, x0.row(0).transpose());
  const Mat ref = -(alpha * model.prior_variance / (nu * nu)) *
                  Mat::Identity(2, 2);
  CHECK((H0[0] - ref).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gpr variance grows monotonically leaving the data") {
  Rng rng(5);
  const Mat X = uniform_inputs(40, rng);
  Mat y(40, 1);
  for (int i = 0; i < 40; ++i) y(i, 0) = test_fn(X.row(i).transpose());
  const GprModel model = gpr_fit(X, y, 0.4);

  const Vec dir = vec2(1.0, 0.5).normalized();
  double prev = -1.0;
  for (int k = 0; k < 20; ++k) {
    const Vec x = vec2(0.5, 0.5) + (1.0 + 0.25 * k) * dir;
    const double s2 = gpr_covariance(model, x)(0, 0);
    CHECK(s2 >= prev - 1e-12);
    prev = s2;
  }
  // far field saturates at the prior
  const Mat far = gpr_covariance(model, vec2(200.0, -150.0));
  CHECK((far - model.prior_variance * Mat::Identity(1, 1))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("a flat disk cloud learns an isotropic chart") {
  // sunflower layout: near-uniform density keeps the embedded pair of
  // coordinates at matched scale; the plane sits away from the origin so a
  // decayed psi lands off the data
  const int K = 300;
  const double golden = 2.0 * 3.14159265358979323846 * (1.0 - 0.6180339887498949);
  Mat pts(K, 3);
  for (int i = 0; i < K; ++i) {
    const double rad = 0.5 * std::sqrt((i + 0.5) / K);
    const double ang = golden * i;
    pts.row(i) << rad * std::cos(ang), rad * std::sin(ang), 0.7;
  }
  PointCloud cloud;
  cloud.points = pts;
  cloud.center = vec3(0.0, 0.0, 0.7);
  cloud.radius = 0.5;

  const LearnedChart chart = build_learned_chart(cloud, {});
  const Vec pc = gpr_predict(chart.phi, cloud.center);
  const Mat J = gpr_jacobian(chart.psi, pc);
  const Mat G = J.transpose() * J;
  Eigen::SelfAdjointEigenSolver<Mat> es(G);
  CHECK(es.eigenvalues()(0) > 0.0);
  CHECK(es.eigenvalues()(1) / es.eigenvalues()(0) < 1.1);

  const auto handle = learned_chart_handle(
      std::make_shared<const LearnedChart>(chart), 0);
  CHECK(handle.valid(pc));
  CHECK_FALSE(handle.valid(pc + vec2(100.0, 0.0) * chart.embedding.bandwidth));
}
