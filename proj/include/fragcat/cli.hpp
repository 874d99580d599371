#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fragcat/io.hpp"

namespace fragcat {

enum class Command {
  CoherentCheck,
  Quadratures,
  Overlap,
  CatSize,
  Ddcorr,
  Rho2,
  PhaseDist,
  Robustness,
  FidelityScan,
};

Command parse_command(std::string_view name);
std::string command_name(Command c);

enum class OutputFormat { Csv, Json };

/// Everything a command run depends on. Runs are pure functions of this
/// struct: identical configs produce identical output bytes.
struct RunConfig {
  Command command = Command::CoherentCheck;
  int n_particles = 100;
  std::optional<double> l0;  // --l0 and --beta-sq are aliases for |beta|^2
  double sigma = 0.0;        // <= 0 selects the binomial default width
  double r = 1.0;
  double theta = 1.5707963267948966;     // pi/2, the stable cat variety
  double u = 1.0;
  double theta_k = 0.0;
  double varphi = 0.0;                   // TOF rotation; -pi/2 after TOF
  double phi_beta = 1.5707963267948966;  // pre-TOF sign-rule convention
  double phi = 0.0;                      // phase-state relative phase
  std::optional<double> frag;            // cat-size fragmentation degree
  int n_repeat = 5;                      // robustness ladder repetitions
  std::vector<double> l0_list;           // fidelity-scan centers
  double grid_min = -4.0;
  double grid_max = 4.0;
  int grid_points = 101;
  int samples = 360;                     // phase-dist resolution
  std::string method = "exact";          // ddcorr: exact | asymptotic
  std::string state_family = "cat";      // ddcorr/rho2: cat | gaussian
  double boundary_tol = 1e-6;            // gaussian regime-of-validity bound
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;                  // empty -> stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitIoError = 3;

/// Validates, computes, serializes. Returns one of the exit codes above;
/// failures produce exactly one "error: ..." line on err.
int run(const RunConfig& cfg, std::ostream& err);

struct FidelityRow {
  double l0 = 0.0;
  double fidelity_beta = 0.0;        // |<phi,N,l0|beta>|^2, b2 = l0
  double fidelity_beta_prime = 0.0;  // |<phi,N,l0|beta'>|^2, b'2 = N - l0
};

struct FidelityScan {
  int n_particles = 0;
  std::vector<FidelityRow> rows;
  // |C_l|^2 columns for plotting, one entry of length N+1 per l0.
  std::vector<std::vector<double>> phase_dist;
  std::vector<std::vector<double>> coherent_dist;
  std::vector<std::vector<double>> prime_dist;
};

FidelityScan fidelity_scan(int n_particles, const std::vector<double>& l0_list);

}  // namespace fragcat
