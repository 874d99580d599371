#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fragcat/cli.hpp"

namespace {

std::vector<double> parse_l0_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!item.empty()) {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument("--l0-list: bad entry '" + item + "'");
      }
      out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fragcat: exact two-mode condensate states, cat-state observables and "
      "density-density correlation grids"};
  app.get_formatter()->column_width(34);

  std::string command;
  app.add_option("--command", command,
                 "one of: coherent-check, quadratures, overlap, cat-size, "
                 "ddcorr, rho2, phase-dist, robustness, fidelity-scan")
      ->required();

  fragcat::RunConfig cfg;
  app.add_option("--N", cfg.n_particles, "particle number (default 100)");

  std::optional<double> l0_opt;
  std::optional<double> beta_sq_opt;
  app.add_option("--l0", l0_opt, "distribution center l0 (= |beta|^2)");
  app.add_option("--beta-sq", beta_sq_opt, "alias of --l0");

  app.add_option("--sigma", cfg.sigma,
                 "Gaussian width; <= 0 selects sqrt(l0 (1 - l0/N))");
  app.add_option("--r", cfg.r, "superposition weight ratio (default 1)");

  std::string theta = "pi/2";
  std::string theta_k = "0";
  std::string varphi = "0";
  std::string phi_beta = "pi/2";
  std::string phi = "0";
  app.add_option("--theta", theta, "cat phase, radians ('pi' literals ok)");
  app.add_option("--u", cfg.u, "even/odd sector weight (default 1)");
  app.add_option("--theta-k", theta_k, "even/odd sector phase, radians");
  app.add_option("--varphi", varphi,
                 "TOF rotation, radians; -pi/2 after expansion");
  app.add_option("--phi-beta", phi_beta,
                 "coherent phase, radians (default pi/2)");
  app.add_option("--phi", phi, "phase-state relative phase, radians");

  app.add_option("--frag", cfg.frag, "fragmentation degree for cat-size");
  app.add_option("--n", cfg.n_repeat,
                 "max ladder repetitions for robustness (default 5)");

  std::string l0_list;
  app.add_option("--l0-list", l0_list,
                 "comma separated l0 values for fidelity-scan");

  app.add_option("--grid-min", cfg.grid_min, "z grid lower bound (default -4)");
  app.add_option("--grid-max", cfg.grid_max, "z grid upper bound (default 4)");
  app.add_option("--grid-points", cfg.grid_points,
                 "grid points per axis (default 101)");
  app.add_option("--samples", cfg.samples,
                 "phi_beta samples for phase-dist (default 360)");
  app.add_option("--method", cfg.method, "ddcorr engine: exact | asymptotic");
  app.add_option("--state", cfg.state_family,
                 "ddcorr/rho2 state family: cat | gaussian");
  app.add_option("--boundary-tol", cfg.boundary_tol,
                 "gaussian boundary-weight bound (default 1e-6)");

  std::string format = "csv";
  app.add_option("--format", format, "csv | json (default csv)");
  app.add_option("--out", cfg.out_path,
                 "output path; standard output when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fragcat::kExitInvalidParams;
  }

  try {
    cfg.command = fragcat::parse_command(command);
    if (l0_opt && beta_sq_opt && *l0_opt != *beta_sq_opt) {
      throw std::invalid_argument(
          "--l0 and --beta-sq are aliases; give one value");
    }
    if (l0_opt) cfg.l0 = *l0_opt;
    if (beta_sq_opt) cfg.l0 = *beta_sq_opt;
    cfg.theta = fragcat::parse_angle(theta);
    cfg.theta_k = fragcat::parse_angle(theta_k);
    cfg.varphi = fragcat::parse_angle(varphi);
    cfg.phi_beta = fragcat::parse_angle(phi_beta);
    cfg.phi = fragcat::parse_angle(phi);
    if (!l0_list.empty()) cfg.l0_list = parse_l0_list(l0_list);
    if (format == "csv") {
      cfg.format = fragcat::OutputFormat::Csv;
    } else if (format == "json") {
      cfg.format = fragcat::OutputFormat::Json;
    } else {
      throw std::invalid_argument("--format must be 'csv' or 'json'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fragcat::kExitInvalidParams;
  }

  return fragcat::run(cfg, std::cerr);
}
