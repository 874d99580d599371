#include "fragcat/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fragcat/format.hpp"
#include "fragcat/observables.hpp"
#include "fragcat/states.hpp"

namespace fragcat {

namespace {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double require_l0(const RunConfig& cfg, const char* who) {
  if (!cfg.l0) {
    throw InvalidParams(std::string(who) + " requires --l0 or --beta-sq");
  }
  return *cfg.l0;
}

void check_n(const RunConfig& cfg) {
  if (cfg.n_particles < 1) throw InvalidParams("--N must be >= 1");
}

std::vector<double> make_grid(const RunConfig& cfg) {
  if (cfg.grid_points < 2) throw InvalidParams("--grid-points must be >= 2");
  if (!(cfg.grid_max > cfg.grid_min)) {
    throw InvalidParams("--grid-max must exceed --grid-min");
  }
  return linspace(cfg.grid_min, cfg.grid_max, cfg.grid_points);
}

Table coherent_check_table(const RunConfig& cfg) {
  check_n(cfg);
  const double b2 = require_l0(cfg, "coherent-check");
  const TwoModeState state =
      make_coherent({b2, cfg.phi_beta, cfg.n_particles});
  const double n1 =
      expectation(state, ModeMonomial::parse("a1+ a1")).real();
  const double w0 = std::norm(state.amplitude(0));
  const double wn = std::norm(state.amplitude(cfg.n_particles));
  // Eigenvalue residual |beta |beta> - b |beta>|^2 / (b2 <beta|beta>), which
  // has the closed form A^2 b2^N / N!.
  const std::vector<cplx> down = apply_ladder(state, LadderKind::B, false);
  std::vector<cplx> resid(down.size());
  const cplx beta = std::polar(std::sqrt(b2), cfg.phi_beta);
  for (std::size_t i = 0; i < down.size(); ++i) {
    resid[i] = beta * state.amplitudes()[i] - down[i];
  }
  const double resid_engine = b2 > 0.0 ? stable_norm_sq(resid) / b2 : 0.0;
  const double resid_closed = wn;  // A^2 b2^N / N! equals |C_N|^2
  Table t;
  t.meta.emplace_back("state", state.label());
  t.columns = {"n_particles",
               "beta_sq",
               "phi_beta",
               "mode1_mean",
               "mode1_mean_minus_beta_sq",
               "boundary_weight_l0",
               "boundary_weight_lN",
               "commutator_deficit_engine",
               "commutator_deficit_closed",
               "eigenvalue_residual_engine",
               "eigenvalue_residual_closed"};
  t.rows = {{static_cast<double>(cfg.n_particles), b2, cfg.phi_beta, n1,
             n1 - b2, w0, wn, commutator_deficit(state, LadderKind::B),
             commutator_deficit_closed(state, LadderKind::B), resid_engine,
             resid_closed}};
  return t;
}

Table quadratures_table(const RunConfig& cfg) {
  check_n(cfg);
  const double b2 = require_l0(cfg, "quadratures");
  const TwoModeState cat =
      make_cat({b2, cfg.phi_beta, cfg.n_particles, cfg.r, cfg.theta});
  const QuadratureReport ex = quadratures_exact(cat);
  const QuadratureReport as = quadratures_asymptotic(b2, cfg.phi_beta, cfg.r);
  Table t;
  t.meta.emplace_back("state", cat.label());
  t.columns = {"beta_sq",           "phi_beta",
               "r",                 "theta",
               "var_plus_exact",    "var_minus_exact",
               "mean_plus_exact",   "mean_minus_exact",
               "var_plus_asymptotic", "var_minus_asymptotic",
               "mean_plus_asymptotic", "mean_minus_asymptotic"};
  t.rows = {{b2, cfg.phi_beta, cfg.r, cfg.theta, ex.var_plus, ex.var_minus,
             ex.mean_plus, ex.mean_minus, as.var_plus, as.var_minus,
             as.mean_plus, as.mean_minus}};
  return t;
}

Table overlap_table(const RunConfig& cfg) {
  check_n(cfg);
  const double b2 = require_l0(cfg, "overlap");
  const OverlapResult o = antipodal_overlap(b2, cfg.n_particles);
  Table t;
  t.columns = {"n_particles", "beta_sq", "exact", "asymptotic",
               "relative_deviation"};
  const double rel =
      o.asymptotic != 0.0 ? (o.exact - o.asymptotic) / o.asymptotic : 0.0;
  t.rows = {{static_cast<double>(cfg.n_particles), b2, o.exact, o.asymptotic,
             rel}};
  return t;
}

Table cat_size_table(const RunConfig& cfg) {
  check_n(cfg);
  double frag;
  if (cfg.frag) {
    frag = *cfg.frag;
  } else if (cfg.l0) {
    const double l0 = *cfg.l0;
    if (!(l0 > 0.0) || !(l0 < cfg.n_particles)) {
      throw InvalidParams("cat-size: --l0 must lie in (0, N)");
    }
    frag = l0 <= 0.5 * cfg.n_particles ? 2.0 * l0 / cfg.n_particles
                                       : 2.0 * (1.0 - l0 / cfg.n_particles);
  } else {
    throw InvalidParams("cat-size requires --frag or --l0");
  }
  if (!(frag >= 0.0) || !(frag <= 1.0)) {
    throw InvalidParams("cat-size: fragmentation degree must lie in [0, 1]");
  }
  Table t;
  t.columns = {"n_particles", "frag_degree", "cat_size"};
  t.rows = {{static_cast<double>(cfg.n_particles), frag,
             cat_size(frag, cfg.n_particles)}};
  return t;
}

TwoModeState grid_state(const RunConfig& cfg, double l0) {
  if (cfg.state_family == "cat") {
    return make_cat({l0, cfg.phi_beta, cfg.n_particles, cfg.r, cfg.theta});
  }
  if (cfg.state_family == "gaussian") {
    return make_gaussian_fragmented({cfg.n_particles, l0, cfg.sigma, cfg.u,
                                     cfg.theta_k, 0.0, cfg.boundary_tol});
  }
  throw InvalidParams("--state must be 'cat' or 'gaussian'");
}

CorrelationGrid ddcorr_grid(const RunConfig& cfg) {
  check_n(cfg);
  const double l0 = require_l0(cfg, "ddcorr");
  const std::vector<double> z = make_grid(cfg);
  const OrbitalPair orb = OrbitalPair::harmonic();
  if (cfg.method == "asymptotic") {
    return delta_rho2_asymptotic(cfg.n_particles, l0, cfg.r, cfg.varphi, orb,
                                 z);
  }
  if (cfg.method != "exact") {
    throw InvalidParams("--method must be 'exact' or 'asymptotic'");
  }
  return delta_rho2_exact(grid_state(cfg, l0), orb, z, cfg.varphi);
}

CorrelationGrid rho2_grid(const RunConfig& cfg) {
  check_n(cfg);
  const double l0 = require_l0(cfg, "rho2");
  const std::vector<double> z = make_grid(cfg);
  return rho2_correlator(grid_state(cfg, l0), OrbitalPair::harmonic(), z,
                         cfg.varphi);
}

Table phase_dist_table(const RunConfig& cfg) {
  check_n(cfg);
  const double l0 = require_l0(cfg, "phase-dist");
  if (cfg.samples < 2) throw InvalidParams("--samples must be >= 2");
  const PhaseDistribution d =
      coherent_phase_distribution(cfg.phi, cfg.n_particles, l0, cfg.samples);
  std::size_t peak = 0;
  for (std::size_t i = 1; i < d.magnitude.size(); ++i) {
    if (d.magnitude[i] > d.magnitude[peak]) peak = i;
  }
  Table t;
  t.meta.emplace_back("n_particles", std::to_string(cfg.n_particles));
  t.meta.emplace_back("l0", format_double(l0));
  t.meta.emplace_back("phi", format_double(cfg.phi));
  t.meta.emplace_back("peak_phi_beta", format_double(d.phi_beta[peak]));
  t.meta.emplace_back("fwhm", format_double(periodic_fwhm(d)));
  t.columns = {"phi_beta", "magnitude"};
  t.rows.reserve(d.phi_beta.size());
  for (std::size_t i = 0; i < d.phi_beta.size(); ++i) {
    t.rows.push_back({d.phi_beta[i], d.magnitude[i]});
  }
  return t;
}

Table robustness_table(const RunConfig& cfg) {
  check_n(cfg);
  const double b2 = require_l0(cfg, "robustness");
  if (cfg.n_repeat < 1 || cfg.n_repeat > cfg.n_particles) {
    throw InvalidParams("robustness: --n must lie in [1, N]");
  }
  Table t;
  t.meta.emplace_back("n_particles", std::to_string(cfg.n_particles));
  t.meta.emplace_back("beta_sq", format_double(b2));
  t.columns = {"n", "loss"};
  for (int n = 1; n <= cfg.n_repeat; ++n) {
    t.rows.push_back({static_cast<double>(n),
                      robustness_loss(b2, cfg.n_particles, n)});
  }
  return t;
}

Table fidelity_scan_table(const RunConfig& cfg) {
  check_n(cfg);
  if (cfg.l0_list.empty()) {
    throw InvalidParams("fidelity-scan requires --l0-list");
  }
  const FidelityScan scan = fidelity_scan(cfg.n_particles, cfg.l0_list);
  Table t;
  t.meta.emplace_back("n_particles", std::to_string(cfg.n_particles));
  for (const FidelityRow& row : scan.rows) {
    t.meta.emplace_back(
        "fidelity[l0=" + format_double(row.l0) + "]",
        "beta=" + format_double(row.fidelity_beta) +
            " beta_prime=" + format_double(row.fidelity_beta_prime));
  }
  t.columns = {"l"};
  for (const FidelityRow& row : scan.rows) {
    const std::string tag = format_double(row.l0);
    t.columns.push_back("phase[l0=" + tag + "]");
    t.columns.push_back("coherent[l0=" + tag + "]");
    t.columns.push_back("prime[l0=" + tag + "]");
  }
  for (int l = 0; l <= cfg.n_particles; ++l) {
    std::vector<double> row;
    row.push_back(static_cast<double>(l));
    for (std::size_t k = 0; k < scan.rows.size(); ++k) {
      row.push_back(scan.phase_dist[k][static_cast<std::size_t>(l)]);
      row.push_back(scan.coherent_dist[k][static_cast<std::size_t>(l)]);
      row.push_back(scan.prime_dist[k][static_cast<std::size_t>(l)]);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "coherent-check") return Command::CoherentCheck;
  if (name == "quadratures") return Command::Quadratures;
  if (name == "overlap") return Command::Overlap;
  if (name == "cat-size") return Command::CatSize;
  if (name == "ddcorr") return Command::Ddcorr;
  if (name == "rho2") return Command::Rho2;
  if (name == "phase-dist") return Command::PhaseDist;
  if (name == "robustness") return Command::Robustness;
  if (name == "fidelity-scan") return Command::FidelityScan;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::CoherentCheck:
      return "coherent-check";
    case Command::Quadratures:
      return "quadratures";
    case Command::Overlap:
      return "overlap";
    case Command::CatSize:
      return "cat-size";
    case Command::Ddcorr:
      return "ddcorr";
    case Command::Rho2:
      return "rho2";
    case Command::PhaseDist:
      return "phase-dist";
    case Command::Robustness:
      return "robustness";
    case Command::FidelityScan:
      return "fidelity-scan";
  }
  return "unknown";
}

FidelityScan fidelity_scan(int n_particles,
                           const std::vector<double>& l0_list) {
  FidelityScan scan;
  scan.n_particles = n_particles;
  for (const double l0 : l0_list) {
    const TwoModeState phase = make_phase_state({0.0, n_particles, l0});
    const TwoModeState coh = make_coherent({l0, 0.0, n_particles});
    const TwoModeState prime =
        make_coherent_prime({n_particles - l0, 0.0, n_particles});
    scan.rows.push_back(
        {l0, fidelity(phase, coh), fidelity(phase, prime)});
    auto weights = [n_particles](const TwoModeState& s) {
      std::vector<double> w(static_cast<std::size_t>(n_particles) + 1);
      for (int l = 0; l <= n_particles; ++l) {
        w[static_cast<std::size_t>(l)] = std::norm(s.amplitude(l));
      }
      return w;
    };
    scan.phase_dist.push_back(weights(phase));
    scan.coherent_dist.push_back(weights(coh));
    scan.prime_dist.push_back(weights(prime));
  }
  return scan;
}

int run(const RunConfig& cfg, std::ostream& err) {
  std::ostringstream out;
  try {
    switch (cfg.command) {
      case Command::Ddcorr:
      case Command::Rho2: {
        const CorrelationGrid g = cfg.command == Command::Ddcorr
                                      ? ddcorr_grid(cfg)
                                      : rho2_grid(cfg);
        if (cfg.format == OutputFormat::Csv) {
          write_grid_csv(out, g, command_name(cfg.command));
        } else {
          write_grid_json(out, g, command_name(cfg.command));
        }
        break;
      }
      default: {
        Table t;
        switch (cfg.command) {
          case Command::CoherentCheck:
            t = coherent_check_table(cfg);
            break;
          case Command::Quadratures:
            t = quadratures_table(cfg);
            break;
          case Command::Overlap:
            t = overlap_table(cfg);
            break;
          case Command::CatSize:
            t = cat_size_table(cfg);
            break;
          case Command::PhaseDist:
            t = phase_dist_table(cfg);
            break;
          case Command::Robustness:
            t = robustness_table(cfg);
            break;
          case Command::FidelityScan:
            t = fidelity_scan_table(cfg);
            break;
          default:
            throw InvalidParams("unhandled command");
        }
        if (cfg.format == OutputFormat::Csv) {
          write_table_csv(out, t, command_name(cfg.command));
        } else {
          write_table_json(out, t, command_name(cfg.command));
        }
        break;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  }
  if (cfg.out_path.empty()) {
    std::cout << out.str();
    if (!std::cout.good()) {
      err << "error: failed writing to standard output" << '\n';
      return kExitIoError;
    }
    return kExitOk;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << cfg.out_path << "'" << '\n';
    return kExitIoError;
  }
  f << out.str();
  f.flush();
  if (!f.good()) {
    err << "error: failed writing '" << cfg.out_path << "'" << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace fragcat
