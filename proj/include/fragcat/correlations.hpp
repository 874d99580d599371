#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fragcat/fock.hpp"

namespace fragcat {

/// Real-space orbital pair with even psi0 and odd psi1, both real. Only the
/// harmonic ground/first-excited pair ships, but the pair is pluggable so
/// self-consistent orbitals can be substituted. z is dimensionless (units of
/// the cloud extension), so grid values come out in the N^2/Z^2 scaling with
/// no explicit Z anywhere.
struct OrbitalPair {
  std::string name;
  std::function<double(double)> psi0;
  std::function<double(double)> psi1;

  static OrbitalPair harmonic();
};

std::vector<double> linspace(double lo, double hi, int n);

/// Sampled z axis plus the n x n matrix of correlation values, with the
/// provenance needed to reproduce it. Values are symmetric, real, and for
/// the sign-rule state families parity even: g(-z,-z') = g(z,z').
struct CorrelationGrid {
  std::vector<double> z;
  std::vector<double> values;  // row-major, z.size() x z.size()
  std::string state_label;
  double varphi = 0.0;
  std::string method;  // "exact" or "asymptotic"

  int size() const { return static_cast<int>(z.size()); }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * z.size() +
                  static_cast<std::size_t>(j)];
  }
  double& at(int i, int j) {
    return values[static_cast<std::size_t>(i) * z.size() +
                  static_cast<std::size_t>(j)];
  }
  double abs_max() const;
};

/// The quadratic and quartic mode moments entering the density-density
/// correlation expansion, computed once per state. Hermitian combinations
/// are stored as reals.
struct QuarticMoments {
  double n0 = 0.0;     // <a0+ a0>
  double n1 = 0.0;     // <a1+ a1>
  cplx s01;            // <a0+ a1>
  double q0000 = 0.0;  // <a0+ a0+ a0 a0>
  double q1111 = 0.0;  // <a1+ a1+ a1 a1>
  double q0110 = 0.0;  // <a0+ a1+ a1 a0>
  cplx q0001;          // <a0+ a0+ a0 a1>
  cplx q0111;          // <a0+ a1+ a1 a1>
  cplx q0011;          // <a0+ a0+ a1 a1>  (pair coherence)
};

QuarticMoments quartic_moments(const TwoModeState& state);

/// One-body density rho_1(z).
double density(const TwoModeState& state, const OrbitalPair& orbitals,
               double z);

/// Delta rho_2(z,z') = <rho(z) rho(z')> - rho_1(z) rho_1(z') with the
/// normal-ordered approximation of the correlator, evaluated exactly from
/// the mode moments. The time-of-flight phase enters as the state rotation
/// C_l -> C_l e^{i l varphi} with permanently real orbitals.
CorrelationGrid delta_rho2_exact(const TwoModeState& state,
                                 const OrbitalPair& orbitals,
                                 const std::vector<double>& z_samples,
                                 double varphi);

/// Leading-order closed form 4 psi0 psi1 psi0' psi1' (N-l0) l0 sin^2(varphi)
/// 4r^2/(1+r^2)^2; exactly zero before TOF and maximal at varphi = +-pi/2.
CorrelationGrid delta_rho2_asymptotic(int n_particles, double l0, double r,
                                      double varphi,
                                      const OrbitalPair& orbitals,
                                      const std::vector<double>& z_samples);

/// The unsubtracted correlator <rho(z) rho(z')> in the same approximation.
CorrelationGrid rho2_correlator(const TwoModeState& state,
                                const OrbitalPair& orbitals,
                                const std::vector<double>& z_samples,
                                double varphi);

}  // namespace fragcat
