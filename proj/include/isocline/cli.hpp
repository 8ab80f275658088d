#pragma once

#include "manifolds.hpp"
#include "tracer.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isocline {

// Exit codes: 0 converged / success, 1 configuration error, 2 finished
// without convergence, 3 numerical failure.
enum ExitCode {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitNotConverged = 2,
  kExitNumericalError = 3,
};

struct RunConfig {
  std::string mode = "analytic";  // analytic | learned
  std::string manifold;
  std::string potential;
  std::vector<double> start;  // chart (length m) or ambient (length n)
  int start_chart = 1;        // chart id when start is in chart coordinates
  double tau = 0;
  double rho = 0;
  double c = 1.0;
  double h = 1e-5;
  long max_steps = 100000;
  std::uint64_t seed = 0;
  std::vector<double> z0;
  double energy_ceiling = std::numeric_limits<double>::infinity();
  // learned-mode fields, all required when mode == "learned"
  double eta = 0;
  int K = 0;
  double r = 0;
  int m = 0;
  std::string out;
  std::string charts_out;  // learned-chart JSON snapshots, optional
};

// Parses and validates a JSON config file. Throws std::runtime_error with a
// message naming the offending field.
RunConfig parse_run_config(const std::string& path);

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_line_field(const RunConfig& config, double x0, double x1, double y0,
                   double y1, int nx, int ny, std::ostream& out,
                   std::ostream& err);
int cmd_equilibria(const RunConfig& config, const std::string& starts_spec,
                   std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace isocline
