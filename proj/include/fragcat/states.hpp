#pragma once

#include "fragcat/fock.hpp"

namespace fragcat {

/// Truncated coherent state parameters; beta = sqrt(beta_mod_sq) *
/// exp(i phi_beta). The mean occupation of mode 1 cannot exceed N.
struct CoherentParams {
  double beta_mod_sq = 0.0;
  double phi_beta = 0.0;
  int n_particles = 1;
};

struct PhaseStateParams {
  double phi = 0.0;
  int n_particles = 1;
  double l0 = 0.0;  // distribution center, 0 < l0 < N (may be non-integer)
};

/// Gaussian |C_l| envelope with even/odd sector weights 1 and u_mod, and the
/// sign-rule phase recursion phi_{l+1} = phi_l + theta_k (even l) respectively
/// phi_l + pi - theta_k (odd l). sigma <= 0 selects the binomial default
/// sigma^2 = l0 (1 - l0/N). Construction is rejected when the boundary
/// weights |C_0|^2 or |C_N|^2 exceed boundary_tol (outside the regime where
/// the envelope describes a fragmented state).
struct GaussianFragParams {
  int n_particles = 1;
  double l0 = 0.0;
  double sigma = 0.0;
  double u_mod = 0.0;
  double theta_k = 0.0;
  double phi0 = 0.0;
  double boundary_tol = 1e-6;
};

/// Superposition N(|beta> + r e^{i theta} |-beta>). r may be +infinity,
/// selecting the pure |-beta> branch.
struct CatParams {
  double beta_mod_sq = 0.0;
  double phi_beta = 0.0;
  int n_particles = 1;
  double r = 0.0;
  double theta = 0.0;
};

/// Even/odd sector parameterization c(|even> + u e^{i theta_k} |odd>).
struct KangsooParams {
  double u_mod = 0.0;
  double theta_k = 0.0;
  double lambda_beta = 1.0;
};

struct CatPolar {
  double r = 0.0;
  double theta = 0.0;
};

TwoModeState make_coherent(const CoherentParams& p);

/// Mirror of make_coherent with the two modes exchanged:
/// C_l ~ beta'^(N-l) / sqrt((N-l)!).
TwoModeState make_coherent_prime(const CoherentParams& p);

/// C_l = e^{i l phi} sqrt(binom(N,l) (N-l0)^(N-l) l0^l / N^N); exactly
/// normalized by the binomial theorem.
TwoModeState make_phase_state(const PhaseStateParams& p);

TwoModeState make_gaussian_fragmented(const GaussianFragParams& p);

TwoModeState make_cat(const CatParams& p);

/// sqrt((1 + e^{-2 b2}) / (1 - e^{-2 b2})); tends to 1 for large b2.
double lambda_beta(double beta_mod_sq);

/// Moebius map r e^{i theta} = (1 + g) / (1 - g) with
/// g = u lambda_beta e^{i(theta_k + pi/2)}. A vanishing denominator is
/// reported as r = +infinity (pure |-beta> limit) instead of overflowing.
CatPolar kangsoo_to_cat(const KangsooParams& k);

/// Analytic inverse of kangsoo_to_cat. The singular preimage
/// r e^{i theta} = -1 is reported as u = +infinity (pure |odd> limit).
/// Returns u >= 0 and theta_k in [0, 2 pi).
KangsooParams cat_to_kangsoo(double r, double theta, double lambda_beta);

/// Wraps an angle into [0, 2 pi).
double wrap_angle(double a);

}  // namespace fragcat
