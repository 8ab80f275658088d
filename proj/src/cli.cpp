#include "isocline/cli.hpp"

#include "isocline/learn.hpp"
#include "isocline/sampling.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace isocline {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Converged: return "converged";
    case TraceStatus::MaxSteps: return "max-steps";
    case TraceStatus::AmbiguousKernel: return "ambiguous-kernel";
    case TraceStatus::NumericalError: return "numerical-error";
  }
  return "unknown";
}

const json& require_field(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw std::runtime_error("missing required field '" + key + "'");
  return j.at(key);
}

double get_number(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_number())
    throw std::runtime_error("field '" + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> get_vector(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_array())
    throw std::runtime_error("field '" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number())
      throw std::runtime_error("field '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Vec to_vec(const std::vector<double>& v) {
  Vec out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<int>(i)) = v[i];
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }

  RunConfig c;
  if (j.contains("mode")) c.mode = j.at("mode").get<std::string>();
  if (c.mode != "analytic" && c.mode != "learned")
    throw std::runtime_error("field 'mode' must be 'analytic' or 'learned'");
  c.manifold = require_field(j, "manifold").get<std::string>();
  c.potential = require_field(j, "potential").get<std::string>();
  c.start = get_vector(j, "start");
  c.tau = get_number(j, "tau");
  if (!(c.tau > 0.0)) throw std::runtime_error("field 'tau' must be positive");
  c.rho = get_number(j, "rho");
  if (!(c.rho > 0.0)) throw std::runtime_error("field 'rho' must be positive");
  c.start_chart = j.contains("start_chart")
                      ? j.at("start_chart").get<int>()
                      : (c.manifold == "sphere" ? 1 : 0);
  if (j.contains("correction_coeff"))
    c.c = j.at("correction_coeff").get<double>();
  if (j.contains("h")) c.h = j.at("h").get<double>();
  if (j.contains("max_steps")) c.max_steps = j.at("max_steps").get<long>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("z0")) c.z0 = get_vector(j, "z0");
  if (j.contains("energy_ceiling"))
    c.energy_ceiling = j.at("energy_ceiling").get<double>();
  if (j.contains("eta")) c.eta = j.at("eta").get<double>();
  if (j.contains("K")) c.K = j.at("K").get<int>();
  if (j.contains("r")) c.r = j.at("r").get<double>();
  if (j.contains("m")) c.m = j.at("m").get<int>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  if (j.contains("charts_out"))
    c.charts_out = j.at("charts_out").get<std::string>();

  if (c.mode == "learned") {
    if (!j.contains("eta"))
      throw std::runtime_error("learned mode: missing required field 'eta'");
    if (!j.contains("K"))
      throw std::runtime_error("learned mode: missing required field 'K'");
    if (!j.contains("r"))
      throw std::runtime_error("learned mode: missing required field 'r'");
    if (!j.contains("m"))
      throw std::runtime_error("learned mode: missing required field 'm'");
    if (!(c.eta > 0.0))
      throw std::runtime_error("field 'eta' must be positive");
    if (c.K < 3) throw std::runtime_error("field 'K' must be at least 3");
    if (!(c.r > 0.0)) throw std::runtime_error("field 'r' must be positive");
    if (c.m < 1) throw std::runtime_error("field 'm' must be at least 1");
  }
  return c;
}

namespace {

TracerConfig tracer_config(const RunConfig& c) {
  TracerConfig tc;
  tc.tau = c.tau;
  tc.rho = c.rho;
  tc.c = c.c;
  tc.h = c.h;
  tc.max_steps = c.max_steps;
  tc.energy_ceiling = c.energy_ceiling;
  if (!c.z0.empty()) tc.z0 = to_vec(c.z0);
  return tc;
}

FieldProvider pulled_back_field(const System& sys) {
  FieldProvider fp;
  fp.X = [amb = sys.ambient_field](const ChartHandle& ch, const Vec& p) {
    const Vec x = ch.psi(p);
    return Vec(ch.jac_phi(x) * amb(x));
  };
  fp.jac_Y = nullptr;
  if (sys.ambient_energy)
    fp.energy = [e = sys.ambient_energy](const ChartHandle& ch, const Vec& p) {
      return e(ch.psi(p));
    };
  return fp;
}

void print_summary(const Trajectory& traj, std::ostream& out) {
  out << "status: " << status_name(traj.status) << "\n";
  if (!traj.message.empty()) out << "detail: " << traj.message << "\n";
  if (traj.records.empty()) return;
  const auto& last = traj.records.back();
  out << "steps: " << last.n << "\n";
  out << "chart: " << last.chart_id << "\n";
  out << "final p:";
  for (int i = 0; i < last.p.size(); ++i) out << ' ' << fmt17(last.p(i));
  out << "\nfinal x:";
  for (int i = 0; i < last.x.size(); ++i) out << ' ' << fmt17(last.x(i));
  out << "\nfinal field norm: " << fmt17(last.field_norm) << "\n";
}

int status_exit_code(const Trajectory& traj) {
  switch (traj.status) {
    case TraceStatus::Converged: return kExitOk;
    case TraceStatus::MaxSteps: return kExitNotConverged;
    default: return kExitNumericalError;
  }
}

}  // namespace

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  System sys;
  try {
    sys = make_system(config.manifold, config.potential);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  const TracerConfig tc = tracer_config(config);
  Trajectory traj;
  bool has_energy = false;

  try {
    if (config.mode == "analytic") {
      has_energy = static_cast<bool>(sys.field.energy);
      if (static_cast<int>(config.start.size()) == sys.n) {
        traj = trace(tc, sys.charts, sys.field, to_vec(config.start));
      } else if (static_cast<int>(config.start.size()) == sys.m) {
        const ChartHandle ch = sys.chart_by_id(config.start_chart);
        traj = trace_from_chart(tc, sys.charts, sys.field, ch,
                                to_vec(config.start));
      } else {
        err << "config error: field 'start' must have length " << sys.m
            << " (chart) or " << sys.n << " (ambient)\n";
        return kExitConfigError;
      }
    } else {
      if (static_cast<int>(config.start.size()) != sys.n) {
        err << "config error: learned mode requires an ambient start of "
               "length "
            << sys.n << "\n";
        return kExitConfigError;
      }
      const FieldProvider fp = pulled_back_field(sys);
      has_energy = static_cast<bool>(fp.energy);
      const ManifoldOps ops{sys.project, sys.distance};
      const LearnConfig lc{config.m, config.eta, 1e-10, tc.h};
      auto counter = std::make_shared<int>(0);
      auto snapshots = std::make_shared<json>(json::array());
      const bool keep_snapshots = !config.charts_out.empty();
      ChartProvider provider;
      provider.chart_at = [&sys, &err, tc, config, ops, lc, counter,
                           snapshots, keep_snapshots](const Vec& x) {
        const std::uint64_t sd =
            config.seed * 1009ULL + static_cast<std::uint64_t>(*counter);
        const PointCloud cloud =
            metropolis_sample(x, config.r, config.K, ops, sd);
        LearnedChart built = build_learned_chart(cloud, lc);
        err << "learned chart " << *counter << ": K=" << config.K
            << " eps=" << fmt17(built.embedding.bandwidth) << " spectrum=[";
        for (int i = 0; i < built.embedding.spectrum.size(); ++i)
          err << (i ? " " : "") << fmt17(built.embedding.spectrum(i));
        err << "]\n";
        if (keep_snapshots)
          snapshots->push_back(json::parse(chart_to_json(built)));
        auto sp = std::make_shared<const LearnedChart>(std::move(built));
        const ChartHandle ch = learned_chart_handle(sp, *counter, tc.h);
        ++(*counter);
        return ch;
      };
      traj = trace(tc, provider, fp, to_vec(config.start));
      if (keep_snapshots) {
        std::ofstream cf(config.charts_out);
        if (!cf)
          throw std::runtime_error("cannot open '" + config.charts_out + "'");
        cf << snapshots->dump() << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }

  const std::string out_path =
      config.out.empty() ? "trajectory.csv" : config.out;
  try {
    write_trajectory_csv(traj, out_path, has_energy);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
  print_summary(traj, out);
  out << "trajectory: " << out_path << "\n";
  return status_exit_code(traj);
}

int cmd_line_field(const RunConfig& config, double x0, double x1, double y0,
                   double y1, int nx, int ny, std::ostream& out,
                   std::ostream& err) {
  if (config.mode != "analytic") {
    err << "config error: line-field sampling needs an analytic system\n";
    return kExitConfigError;
  }
  if (nx < 1 || ny < 1) {
    err << "config error: grid counts must be at least 1\n";
    return kExitConfigError;
  }
  System sys;
  ChartHandle chart;
  try {
    sys = make_system(config.manifold, config.potential);
    chart = sys.chart_by_id(config.start_chart);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const std::string out_path =
      config.out.empty() ? "line_field.csv" : config.out;
  std::ofstream f(out_path);
  if (!f) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return kExitNumericalError;
  }
  f << "p_1,p_2,L_1,L_2,sigma_ratio\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int ix = 0; ix < nx; ++ix) {
    const double p1 = nx == 1 ? x0 : x0 + ix * (x1 - x0) / (nx - 1);
    for (int iy = 0; iy < ny; ++iy) {
      const double p2 = ny == 1 ? y0 : y0 + iy * (y1 - y0) / (ny - 1);
      Vec p(2);
      p << p1, p2;
      double l1 = 0, l2 = 0, ratio = nan;
      try {
        const MetricData md = chart.metric(p);
        const Vec X = sys.field.X(chart, p);
        const Vec Y = normalize_field(X, md.g);
        const Mat JY =
            sys.field.jac_Y
                ? sys.field.jac_Y(chart, p)
                : normalized_field_jacobian_fd(sys.field, chart, p, config.h);
        const Mat A = covariant_matrix(JY, md.gamma, Y);
        const LineFieldResult lf = line_field_direction(A);
        Vec L = lf.direction;
        // deterministic sign: largest-magnitude component positive
        const int a = std::abs(L(0)) >= std::abs(L(1)) ? 0 : 1;
        if (L(a) < 0.0) L = -L;
        l1 = L(0);
        l2 = L(1);
        ratio = lf.residual;
      } catch (const std::exception&) {
        // equilibrium or ambiguous kernel: sentinel row
      }
      f << fmt17(p1) << ',' << fmt17(p2) << ',' << fmt17(l1) << ','
        << fmt17(l2) << ',' << fmt17(ratio) << '\n';
    }
  }
  if (!f) {
    err << "error: write to '" << out_path << "' failed\n";
    return kExitNumericalError;
  }
  out << "grid: " << nx << " x " << ny << "\n";
  out << "line field: " << out_path << "\n";
  return kExitOk;
}

namespace {

struct Equilibrium {
  int chart_id = 0;
  Vec p;
  Vec x;
  double field_norm = 0;
  int index = 0;
  std::string kind;
};

// In-chart energy gradient: X = -g^{-1} grad E, so grad E = -g X.
Vec chart_energy_gradient(const System& sys, const ChartHandle& ch,
                          const Vec& p) {
  return Vec(-(ch.g(p) * sys.field.X(ch, p)));
}

Mat chart_energy_hessian_fd(const System& sys, const ChartHandle& ch,
                            const Vec& p, double h) {
  const int m = static_cast<int>(p.size());
  Mat H(m, m);
  for (int i = 0; i < m; ++i) {
    Vec pp = p, pm = p;
    pp(i) += h;
    pm(i) -= h;
    H.col(i) = (chart_energy_gradient(sys, ch, pp) -
                chart_energy_gradient(sys, ch, pm)) /
               (2.0 * h);
  }
  return Mat(0.5 * (H + H.transpose()));
}

}  // namespace

int cmd_equilibria(const RunConfig& config, const std::string& starts_spec,
                   std::ostream& out, std::ostream& err) {
  if (config.mode != "analytic") {
    err << "config error: the equilibrium search needs an analytic system\n";
    return kExitConfigError;
  }
  System sys;
  ChartHandle chart0;
  try {
    sys = make_system(config.manifold, config.potential);
    chart0 = sys.chart_by_id(config.start_chart);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::vector<Vec> starts;
  try {
    if (starts_spec.rfind("grid:", 0) == 0) {
      std::stringstream ss(starts_spec.substr(5));
      std::vector<double> v;
      std::string cell;
      while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
      if (v.size() != 6)
        throw std::runtime_error(
            "grid spec needs 6 values: x0,x1,y0,y1,nx,ny");
      const int nx = static_cast<int>(v[4]), ny = static_cast<int>(v[5]);
      if (nx < 1 || ny < 1)
        throw std::runtime_error("grid counts must be at least 1");
      for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy) {
          Vec p(2);
          p << (nx == 1 ? v[0] : v[0] + ix * (v[1] - v[0]) / (nx - 1)),
              (ny == 1 ? v[2] : v[2] + iy * (v[3] - v[2]) / (ny - 1));
          starts.push_back(p);
        }
    } else {
      std::ifstream sf(starts_spec);
      if (!sf)
        throw std::runtime_error("cannot open starts file '" + starts_spec +
                                 "'");
      std::string line;
      while (std::getline(sf, line)) {
        if (line.empty()) continue;
        if (line.rfind("p_", 0) == 0) continue;  // optional header
        std::stringstream ss(line);
        std::vector<double> v;
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        if (static_cast<int>(v.size()) != sys.m)
          throw std::runtime_error("starts file rows must have " +
                                   std::to_string(sys.m) + " columns");
        starts.push_back(to_vec(v));
      }
      if (starts.empty())
        throw std::runtime_error("starts file holds no start points");
    }
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const TracerConfig tc = tracer_config(config);
  std::vector<Equilibrium> found;
  int converged = 0;

  for (size_t idx = 0; idx < starts.size(); ++idx) {
    Trajectory traj;
    try {
      traj = trace_from_chart(tc, sys.charts, sys.field, chart0, starts[idx]);
    } catch (const std::exception&) {
      continue;
    }
    if (traj.status != TraceStatus::Converged || traj.records.empty())
      continue;
    ++converged;

    ChartHandle ch;
    try {
      ch = sys.chart_by_id(traj.records.back().chart_id);
    } catch (const std::exception&) {
      continue;
    }
    Vec p = traj.records.back().p;

    // Newton polish of the endpoint on the in-chart energy gradient
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      Vec F;
      try {
        F = chart_energy_gradient(sys, ch, p);
      } catch (const std::exception&) {
        break;
      }
      if (!F.allFinite()) break;
      if (F.lpNorm<Eigen::Infinity>() < 1e-12) {
        ok = true;
        break;
      }
      const Mat J = chart_energy_hessian_fd(sys, ch, p, 1e-6);
      const Vec step = J.fullPivLu().solve(F);
      if (!step.allFinite()) break;
      p -= step;
    }
    if (!ok && p.allFinite()) {
      try {
        ok = chart_energy_gradient(sys, ch, p).lpNorm<Eigen::Infinity>() <
             1e-10;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || !p.allFinite() || !ch.valid(p)) continue;

    Equilibrium eq;
    try {
      eq.x = ch.psi(p);
      const Mat g = ch.g(p);
      const Vec X = sys.field.X(ch, p);
      eq.field_norm = std::sqrt(X.dot(g * X));
      if (eq.field_norm >= 1e-8) continue;  // not an actual equilibrium
      const Mat H = chart_energy_hessian_fd(sys, ch, p, 1e-5);
      Eigen::SelfAdjointEigenSolver<Mat> es(H);
      const Vec ev = es.eigenvalues();
      if (ev.cwiseAbs().minCoeff() < 1e-6) continue;  // degenerate
      eq.index = static_cast<int>((ev.array() < 0.0).count());
    } catch (const std::exception&) {
      continue;
    }
    eq.chart_id = ch.id;
    eq.p = p;
    eq.kind = eq.index == 0 ? "sink"
                            : (eq.index == sys.m ? "source" : "saddle");

    bool dup = false;
    for (const auto& e : found)
      if ((e.x - eq.x).norm() < 1e-4) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(std::move(eq));
  }

  json jout;
  jout["starts"] = starts.size();
  jout["converged"] = converged;
  json list = json::array();
  for (const auto& e : found) {
    json je;
    je["chart_id"] = e.chart_id;
    je["p"] = std::vector<double>(e.p.data(), e.p.data() + e.p.size());
    je["x"] = std::vector<double>(e.x.data(), e.x.data() + e.x.size());
    je["field_norm"] = e.field_norm;
    je["index"] = e.index;
    je["kind"] = e.kind;
    list.push_back(std::move(je));
  }
  jout["equilibria"] = std::move(list);

  const std::string out_path =
      config.out.empty() ? "equilibria.json" : config.out;
  std::ofstream f(out_path);
  if (!f) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return kExitNumericalError;
  }
  f << jout.dump(2) << "\n";

  int sinks = 0, saddles = 0, sources = 0;
  for (const auto& e : found) {
    if (e.kind == "sink") ++sinks;
    else if (e.kind == "saddle") ++saddles;
    else ++sources;
  }
  out << "starts: " << starts.size() << ", converged: " << converged << "\n";
  out << "equilibria: " << found.size() << " (" << sinks << " sinks, "
      << saddles << " saddles, " << sources << " sources)\n";
  out << "report: " << out_path << "\n";
  return found.empty() ? kExitNotConverged : kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"equilibrium location by generalized-isocline tracing"};
  app.require_subcommand(1);

  std::string config_path, out_override, charts_out_override, grid_spec,
      starts_spec, manifold_flag, potential_flag;
  int chart_flag = 0;
  std::uint64_t seed_override = 0;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("--config", config_path,
                                "JSON run configuration");
    if (config_required) opt->required();
    cmd->add_option("--out", out_override, "output path override");
    cmd->add_option("--seed", seed_override, "RNG seed override");
  };

  CLI::App* t = app.add_subcommand("trace", "trace a generalized isocline");
  add_common(t, true);
  t->add_option("--charts-out", charts_out_override,
                "write learned-chart snapshots (JSON) here");
  CLI::App* lf = app.add_subcommand(
      "line-field", "sample the kernel line field on a chart grid");
  add_common(lf, false);
  lf->add_option("--manifold", manifold_flag, "manifold name");
  lf->add_option("--potential", potential_flag, "potential name");
  lf->add_option("--chart", chart_flag, "chart id (default: manifold's)");
  lf->add_option("--grid", grid_spec, "x0,x1,y0,y1,nx,ny")->required();
  CLI::App* eq = app.add_subcommand(
      "equilibria", "multistart isocline search with endpoint refinement");
  add_common(eq, true);
  eq->add_option("--starts", starts_spec, "grid:x0,x1,y0,y1,nx,ny or a CSV")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("isocline");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = parse_run_config(config_path);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  // flags > file > defaults
  if (lf->parsed()) {
    if (!manifold_flag.empty()) config.manifold = manifold_flag;
    if (!potential_flag.empty()) config.potential = potential_flag;
    if (lf->count("--chart"))
      config.start_chart = chart_flag;
    else if (config_path.empty())
      config.start_chart = config.manifold == "sphere" ? 1 : 0;
    if (config.manifold.empty() || config.potential.empty()) {
      err << "config error: line-field needs --manifold and --potential "
             "(or a --config supplying them)\n";
      return kExitConfigError;
    }
  }
  if (!out_override.empty()) config.out = out_override;
  if (!charts_out_override.empty()) config.charts_out = charts_out_override;
  for (const auto* cmd : {t, lf, eq})
    if (cmd->parsed() && cmd->count("--seed")) config.seed = seed_override;

  try {
    if (t->parsed()) return cmd_trace(config, out, err);
    if (lf->parsed()) {
      std::stringstream ss(grid_spec);
      std::vector<double> v;
      std::string cell;
      while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
      if (v.size() != 6) {
        err << "config error: --grid needs 6 values: x0,x1,y0,y1,nx,ny\n";
        return kExitConfigError;
      }
      return cmd_line_field(config, v[0], v[1], v[2], v[3],
                            static_cast<int>(v[4]), static_cast<int>(v[5]),
                            out, err);
    }
    return cmd_equilibria(config, starts_spec, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
}

}  // namespace isocline
