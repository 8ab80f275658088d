#include "isocline/learn.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace isocline {

using nlohmann::json;

double median_bandwidth(const Mat& points) {
  const int K = static_cast<int>(points.rows());
  std::vector<double> dists;
  dists.reserve(static_cast<size_t>(K) * (K - 1) / 2);
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j) {
      const double d = (points.row(i) - points.row(j)).norm();
      if (d > 0.0) dists.push_back(d);
    }
  if (dists.empty())
    throw std::runtime_error(
        "degenerate cloud: no distinct point pairs to take a median over");
  std::sort(dists.begin(), dists.end());
  const size_t s = dists.size();
  return (s % 2) ? dists[s / 2] : 0.5 * (dists[s / 2 - 1] + dists[s / 2]);
}

DiffusionEmbedding diffusion_maps(const Mat& points, double eps, int m) {
  const int K = static_cast<int>(points.rows());
  if (!(eps > 0.0)) throw std::runtime_error("bandwidth eps must be positive");
  if (m < 1 || m >= K)
    throw std::runtime_error(
        "embedding dimension must satisfy 1 <= m < K");

  Mat W(K, K);
  const double inv = 1.0 / (2.0 * eps * eps);
  for (int i = 0; i < K; ++i) {
    W(i, i) = 1.0;
    for (int j = i + 1; j < K; ++j) {
      const double d2 = (points.row(i) - points.row(j)).squaredNorm();
      W(i, j) = W(j, i) = std::exp(-d2 * inv);
    }
  }
  for (int i = 0; i < K; ++i)
    if (W.row(i).sum() - W(i, i) < 1e-12)
      throw std::runtime_error(
          "kernel graph is disconnected at this bandwidth: increase eps");

  // alpha = 1 density normalization, then the symmetric conjugate of the
  // Markov matrix so the eigenproblem is self-adjoint
  const Vec q = W.rowwise().sum();
  Mat Wt = W.array().colwise() / q.array();
  Wt = Wt.array().rowwise() / q.transpose().array();
  const Vec d = Wt.rowwise().sum();
  const Vec dis = d.array().rsqrt();
  Mat M = dis.asDiagonal() * Wt * dis.asDiagonal();
  M = 0.5 * (M + M.transpose());

  Eigen::SelfAdjointEigenSolver<Mat> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("diffusion eigensolve failed");
  const Vec& ev = es.eigenvalues();  // ascending
  if (std::abs(ev(K - 1) - 1.0) > 1e-12)
    throw std::runtime_error(
        "leading diffusion eigenvalue deviates from 1: kernel normalization "
        "is inconsistent");

  DiffusionEmbedding emb;
  emb.bandwidth = eps;
  emb.eigenvalues.resize(m);
  emb.coordinates.resize(K, m);
  const int spec_len = std::min(K - 1, std::max(m, 6));
  emb.spectrum.resize(spec_len);
  for (int k = 1; k <= spec_len; ++k) emb.spectrum(k - 1) = ev(K - 1 - k);
  for (int k = 1; k <= m; ++k) {
    const double lam = ev(K - 1 - k);
    Vec u = es.eigenvectors().col(K - 1 - k).cwiseProduct(dis);
    u /= u.norm();
    int arg = 0;
    for (int i = 1; i < K; ++i)
      if (std::abs(u(i)) > std::abs(u(arg))) arg = i;
    if (u(arg) < 0.0) u = -u;
    emb.eigenvalues(k - 1) = lam;
    emb.coordinates.col(k - 1) = lam * u;
  }
  return emb;
}

namespace {

Mat kernel_matrix(const Mat& a, const Mat& b, double nu) {
  const double inv = 1.0 / (2.0 * nu * nu);
  Mat K(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j)
      K(i, j) = std::exp(-(a.row(i) - b.row(j)).squaredNorm() * inv);
  return K;
}

Vec kernel_vector(const GprModel& model, const Vec& x) {
  const double inv = 1.0 / (2.0 * model.length_scale * model.length_scale);
  Vec kv(model.inputs.rows());
  for (int i = 0; i < model.inputs.rows(); ++i)
    kv(i) = model.prior_variance *
            std::exp(-(x.transpose() - model.inputs.row(i)).squaredNorm() * inv);
  return kv;
}

}  // namespace

GprModel gpr_fit(const Mat& inputs, const Mat& targets, double nu,
                 double sigma2) {
  if (!(nu > 0.0)) throw std::runtime_error("length scale must be positive");
  if (sigma2 < 0.0) throw std::runtime_error("noise variance must be >= 0");
  if (inputs.rows() != targets.rows())
    throw std::runtime_error("inputs and targets disagree on sample count");
  const int K = static_cast<int>(inputs.rows());
  const Mat Km = kernel_matrix(inputs, inputs, nu);

  double jitter = std::max(sigma2, 1e-10);
  Eigen::LLT<Mat> llt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    llt.compute(Km + jitter * Mat::Identity(K, K));
    if (llt.info() == Eigen::Success) break;
    jitter *= 100.0;
  }
  if (llt.info() != Eigen::Success)
    throw std::runtime_error(
        "kernel matrix is too ill-conditioned to factorize, even with "
        "escalated jitter");

  GprModel model;
  model.inputs = inputs;
  model.alpha = llt.solve(targets);
  model.chol_l = llt.matrixL();
  model.length_scale = nu;
  model.noise = jitter;
  model.prior_variance = 1.0;
  return model;
}

Vec gpr_predict(const GprModel& model, const Vec& x) {
  return model.alpha.transpose() * kernel_vector(model, x);
}

Mat gpr_jacobian(const GprModel& model, const Vec& x) {
  const Vec kv = kernel_vector(model, x);
  const int e = static_cast<int>(model.alpha.cols());
  const int d = static_cast<int>(model.inputs.cols());
  const double inv2 = 1.0 / (model.length_scale * model.length_scale);
  Mat J = Mat::Zero(e, d);
  for (int l = 0; l < model.inputs.rows(); ++l) {
    const Vec diff = x - model.inputs.row(l).transpose();
    J.noalias() +=
        (-kv(l) * inv2) * (model.alpha.row(l).transpose() * diff.transpose());
  }
  return J;
}

std::vector<Mat> gpr_hessian(const GprModel& model, const Vec& x) {
  const Vec kv = kernel_vector(model, x);
  const int e = static_cast<int>(model.alpha.cols());
  const int d = static_cast<int>(model.inputs.cols());
  const double inv2 = 1.0 / (model.length_scale * model.length_scale);
  std::vector<Mat> H(e, Mat::Zero(d, d));
  const Mat I = Mat::Identity(d, d);
  for (int l = 0; l < model.inputs.rows(); ++l) {
    const Vec diff = x - model.inputs.row(l).transpose();
    const Mat block =
        kv(l) * (inv2 * inv2 * (diff * diff.transpose()) - inv2 * I);
    for (int o = 0; o < e; ++o) H[o] += model.alpha(l, o) * block;
  }
  return H;
}

namespace {

double posterior_scalar_variance(const GprModel& model, const Vec& x) {
  const Vec kv = kernel_vector(model, x);
  const Vec y =
      model.chol_l.triangularView<Eigen::Lower>().solve(kv);
  return std::max(model.prior_variance - y.squaredNorm(), 0.0);
}

}  // namespace

Mat gpr_covariance(const GprModel& model, const Vec& x) {
  const int e = static_cast<int>(model.alpha.cols());
  return posterior_scalar_variance(model, x) * Mat::Identity(e, e);
}

double gpr_covariance_norm(const GprModel& model, const Vec& x) {
  const int e = static_cast<int>(model.alpha.cols());
  return posterior_scalar_variance(model, x) * std::sqrt(double(e));
}

Vec pushforward_field(const GprModel& phi, const Vec& x, const Vec& X,
                      const std::string& mode, double dt) {
  if (mode == "jacobian") return gpr_jacobian(phi, x) * X;
  if (mode == "fd")
    return (gpr_predict(phi, x + dt * X) - gpr_predict(phi, x)) / dt;
  throw std::runtime_error("unknown pushforward mode '" + mode + "'");
}

LearnedChart build_learned_chart(const PointCloud& cloud,
                                 const LearnConfig& config) {
  LearnedChart lc;
  lc.n = static_cast<int>(cloud.points.cols());
  lc.m = config.m;
  lc.eta = config.eta;
  const double eps = median_bandwidth(cloud.points);
  lc.embedding = diffusion_maps(cloud.points, eps, config.m);
  lc.phi = gpr_fit(cloud.points, lc.embedding.coordinates, eps, config.sigma2);
  // The embedding lives on a much smaller scale than the ambient cloud, so
  // the inverse map gets its own median bandwidth.
  const double nu_psi = median_bandwidth(lc.embedding.coordinates);
  lc.psi = gpr_fit(lc.embedding.coordinates, cloud.points, nu_psi,
                   config.sigma2);
  return lc;
}

ChartHandle learned_chart_handle(std::shared_ptr<const LearnedChart> chart,
                                 int id, double christoffel_h) {
  ChartHandle ch;
  ch.id = id;
  ch.n = chart->n;
  ch.m = chart->m;
  ch.phi = [chart](const Vec& x) { return gpr_predict(chart->phi, x); };
  ch.psi = [chart](const Vec& p) { return gpr_predict(chart->psi, p); };
  ch.jac_phi = [chart](const Vec& x) { return gpr_jacobian(chart->phi, x); };
  ch.jac_psi = [chart](const Vec& p) { return gpr_jacobian(chart->psi, p); };
  ch.valid = [chart](const Vec& p) {
    const Vec x = gpr_predict(chart->psi, p);
    return gpr_covariance_norm(chart->phi, x) <= chart->eta;
  };
  auto gf = [chart](const Vec& p) {
    return pullback_metric(gpr_jacobian(chart->psi, p));
  };
  ch.g = gf;
  ch.metric = [gf, h = christoffel_h](const Vec& p) {
    MetricData md;
    md.g = gf(p);
    md.g_inv = md.g.inverse();
    md.gamma = christoffel_from_metric(gf, p, h);
    return md;
  };
  return ch;
}

namespace {

json mat_to_json(const Mat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  const int r = static_cast<int>(j.size());
  const int c = r ? static_cast<int>(j.at(0).size()) : 0;
  Mat M(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) M(i, k) = j.at(i).at(k).get<double>();
  return M;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vec vec_from_json(const json& j) {
  Vec v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = j.at(i).get<double>();
  return v;
}

json gpr_to_json(const GprModel& m) {
  return json{{"inputs", mat_to_json(m.inputs)},
              {"alpha", mat_to_json(m.alpha)},
              {"length_scale", m.length_scale},
              {"noise", m.noise},
              {"prior_variance", m.prior_variance}};
}

GprModel gpr_from_json(const json& j) {
  GprModel m;
  m.inputs = mat_from_json(j.at("inputs"));
  m.alpha = mat_from_json(j.at("alpha"));
  m.length_scale = j.at("length_scale").get<double>();
  m.noise = j.at("noise").get<double>();
  m.prior_variance = j.at("prior_variance").get<double>();
  // refactorize so covariance queries work after a round trip
  const int K = static_cast<int>(m.inputs.rows());
  const Mat Km = kernel_matrix(m.inputs, m.inputs, m.length_scale);
  Eigen::LLT<Mat> llt(Km + m.noise * Mat::Identity(K, K));
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("stored kernel matrix failed to refactorize");
  m.chol_l = llt.matrixL();
  return m;
}

}  // namespace

std::string chart_to_json(const LearnedChart& chart) {
  json j{{"version", 1},
         {"n", chart.n},
         {"m", chart.m},
         {"eta", chart.eta},
         {"embedding",
          json{{"bandwidth", chart.embedding.bandwidth},
               {"eigenvalues", vec_to_json(chart.embedding.eigenvalues)},
               {"spectrum", vec_to_json(chart.embedding.spectrum)},
               {"coordinates", mat_to_json(chart.embedding.coordinates)}}},
         {"phi", gpr_to_json(chart.phi)},
         {"psi", gpr_to_json(chart.psi)}};
  return j.dump();
}

LearnedChart chart_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("chart JSON parse error: ") +
                             e.what());
  }
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw std::runtime_error("unsupported chart JSON version");
  LearnedChart chart;
  chart.n = j.at("n").get<int>();
  chart.m = j.at("m").get<int>();
  chart.eta = j.at("eta").get<double>();
  const json& e = j.at("embedding");
  chart.embedding.bandwidth = e.at("bandwidth").get<double>();
  chart.embedding.eigenvalues = vec_from_json(e.at("eigenvalues"));
  chart.embedding.spectrum = vec_from_json(e.at("spectrum"));
  chart.embedding.coordinates = mat_from_json(e.at("coordinates"));
  chart.phi = gpr_from_json(j.at("phi"));
  chart.psi = gpr_from_json(j.at("psi"));
  return chart;
}

}  // namespace isocline
