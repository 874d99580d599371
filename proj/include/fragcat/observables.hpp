#pragma once

#include "fragcat/fock.hpp"
#include "fragcat/ladder.hpp"

namespace fragcat {

/// 2x2 single-particle density matrix <a_i^dag a_j> with its eigenvalues
/// and the fragmentation degree F = 1 - |lambda0 - lambda1| / N.
struct Spdm {
  cplx m00, m01, m10, m11;
  double lambda0 = 0.0;  // larger eigenvalue
  double lambda1 = 0.0;
  double frag_degree = 0.0;
};

Spdm spdm(const TwoModeState& state);

/// Quadrature statistics of the ladder "photons". var_plus is the variance
/// of b + b^dag, var_minus the variance of the Hermitian combination
/// -i(b - b^dag), which equals -Delta(b - b^dag); both are nonnegative.
struct QuadratureReport {
  cplx mean_b;
  cplx mean_b_dagger;
  double mean_plus = 0.0;   // <b + b^dag>
  double mean_minus = 0.0;  // <-i(b - b^dag)>
  double var_plus = 0.0;
  double var_minus = 0.0;
};

/// Computed entirely through apply_ladder, no asymptotics.
QuadratureReport quadratures_exact(const TwoModeState& state,
                                   LadderKind kind = LadderKind::B);

/// Large-|beta|^2 closed forms: 4 b2 cos^2(phi_beta) (2r/(1+r^2))^2 + 1 and
/// the sin^2 partner; means from the same limit.
QuadratureReport quadratures_asymptotic(double beta_mod_sq, double phi_beta,
                                        double r);

struct OverlapResult {
  double exact = 0.0;       // A_beta^2 sum_l (-b2)^l / l!
  double asymptotic = 0.0;  // e^{-2 b2}
};

OverlapResult antipodal_overlap(double beta_mod_sq, int n_particles);

/// Superposition size M = (1 - e^{-F N})^2 for equal branch weights, using
/// b2 = F N / 2.
double cat_size(double frag_degree, int n_particles);

/// Extension: the same polynomial evaluated on the exact finite-N overlap.
double cat_size_from_overlap(double overlap_exact);

/// |C_{phi_beta}| of the coherent-phase decomposition of a phase state,
/// sampled on a uniform grid over [0, 2 pi). The distribution peaks at
/// phi_beta = phi and sharpens with N.
struct PhaseDistribution {
  std::vector<double> phi_beta;
  std::vector<double> magnitude;
};

PhaseDistribution coherent_phase_distribution(double phi, int n_particles,
                                              double l0, int n_samples);

/// Full width at half maximum of a 2 pi periodic sample set; used for the
/// phase-distribution sharpness comparisons.
double periodic_fwhm(const PhaseDistribution& d);

}  // namespace fragcat
