#include "fragcat/observables.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fragcat {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Spdm spdm(const TwoModeState& state) {
  Spdm s;
  s.m00 = expectation(state, ModeMonomial{ModeOp::Create0, ModeOp::Annihilate0});
  s.m01 = expectation(state, ModeMonomial{ModeOp::Create0, ModeOp::Annihilate1});
  s.m10 = expectation(state, ModeMonomial{ModeOp::Create1, ModeOp::Annihilate0});
  s.m11 = expectation(state, ModeMonomial{ModeOp::Create1, ModeOp::Annihilate1});
  const double a = s.m00.real();
  const double d = s.m11.real();
  const double half_diff = 0.5 * (a - d);
  const double disc = std::hypot(half_diff, std::abs(s.m01));
  const double mean = 0.5 * (a + d);
  s.lambda0 = mean + disc;
  s.lambda1 = mean - disc;
  s.frag_degree =
      1.0 - std::abs(s.lambda0 - s.lambda1) / state.n_particles();
  return s;
}

QuadratureReport quadratures_exact(const TwoModeState& state,
                                   LadderKind kind) {
  const std::vector<cplx> bv = apply_ladder(state, kind, false);
  const std::vector<cplx> bdv = apply_ladder(state, kind, true);
  QuadratureReport r;
  r.mean_b = stable_inner(state.amplitudes(), bv);
  r.mean_b_dagger = stable_inner(state.amplitudes(), bdv);
  r.mean_plus = (r.mean_b + r.mean_b_dagger).real();
  r.mean_minus = (cplx(0.0, -1.0) * (r.mean_b - r.mean_b_dagger)).real();
  const std::size_t m = bv.size();
  std::vector<cplx> xv(m);
  std::vector<cplx> pv(m);
  for (std::size_t i = 0; i < m; ++i) {
    xv[i] = bv[i] + bdv[i];
    pv[i] = cplx(0.0, -1.0) * (bv[i] - bdv[i]);
  }
  // b and b^dag are exact adjoints on the truncated ladder, so both
  // combinations are Hermitian and their second moments are plain norms.
  r.var_plus = stable_norm_sq(xv) - r.mean_plus * r.mean_plus;
  r.var_minus = stable_norm_sq(pv) - r.mean_minus * r.mean_minus;
  return r;
}

QuadratureReport quadratures_asymptotic(double beta_mod_sq, double phi_beta,
                                        double r) {
  if (std::isnan(r) || r < 0.0) {
    throw std::invalid_argument("quadratures_asymptotic: r must be >= 0");
  }
  if (!(beta_mod_sq >= 0.0)) {
    throw std::invalid_argument(
        "quadratures_asymptotic: beta_mod_sq must be >= 0");
  }
  const double g = std::isinf(r) ? 0.0 : 2.0 * r / (1.0 + r * r);
  const double balance =
      std::isinf(r) ? -1.0 : (1.0 - r * r) / (1.0 + r * r);
  const double beta_mod = std::sqrt(beta_mod_sq);
  const double c = std::cos(phi_beta);
  const double s = std::sin(phi_beta);
  QuadratureReport q;
  q.mean_b = balance * std::polar(beta_mod, phi_beta);
  q.mean_b_dagger = std::conj(q.mean_b);
  q.mean_plus = 2.0 * balance * beta_mod * c;
  q.mean_minus = 2.0 * balance * beta_mod * s;
  q.var_plus = 4.0 * beta_mod_sq * c * c * g * g + 1.0;
  q.var_minus = 4.0 * beta_mod_sq * s * s * g * g + 1.0;
  return q;
}

OverlapResult antipodal_overlap(double beta_mod_sq, int n_particles) {
  if (n_particles < 1) {
    throw std::invalid_argument("antipodal_overlap: need N >= 1");
  }
  if (!(beta_mod_sq >= 0.0) ||
      beta_mod_sq > static_cast<double>(n_particles)) {
    throw std::invalid_argument(
        "antipodal_overlap: beta_mod_sq must lie in [0, N]");
  }
  // Terms are scaled by e^{-b2} (the Poisson weights) so neither sum can
  // overflow; the alternating numerator is accumulated with compensation.
  CompensatedSum alt;
  CompensatedSum pos;
  double term = std::exp(-beta_mod_sq);
  if (term == 0.0) {
    // b2 too large for the scaled l = 0 start; walk up in log space instead.
    const LogFactorialTable lf(n_particles);
    const double lnb2 = std::log(beta_mod_sq);
    double m = -std::numeric_limits<double>::infinity();
    for (int l = 0; l <= n_particles; ++l) {
      m = std::max(m, l * lnb2 - lf(l));
    }
    for (int l = 0; l <= n_particles; ++l) {
      const double t = std::exp(l * lnb2 - lf(l) - m);
      pos.add(t);
      alt.add(l % 2 == 0 ? t : -t);
    }
  } else {
    for (int l = 0; l <= n_particles; ++l) {
      pos.add(term);
      alt.add(l % 2 == 0 ? term : -term);
      term *= beta_mod_sq / (l + 1);
    }
  }
  return {alt.value() / pos.value(), std::exp(-2.0 * beta_mod_sq)};
}

double cat_size(double frag_degree, int n_particles) {
  if (!(frag_degree >= 0.0) || !(frag_degree <= 1.0)) {
    throw std::invalid_argument("cat_size: frag_degree must lie in [0, 1]");
  }
  if (n_particles < 1) throw std::invalid_argument("cat_size: need N >= 1");
  const double x = 1.0 - std::exp(-frag_degree * n_particles);
  return x * x;
}

double cat_size_from_overlap(double overlap_exact) {
  const double x = 1.0 - overlap_exact;
  return x * x;
}

PhaseDistribution coherent_phase_distribution(double phi, int n_particles,
                                              double l0, int n_samples) {
  const int n = n_particles;
  if (n < 1) {
    throw std::invalid_argument("coherent_phase_distribution: need N >= 1");
  }
  if (!(l0 > 0.0) || !(l0 < static_cast<double>(n))) {
    throw std::invalid_argument(
        "coherent_phase_distribution: l0 must lie in (0, N)");
  }
  if (n_samples < 2) {
    throw std::invalid_argument(
        "coherent_phase_distribution: need at least 2 samples");
  }
  const LogFactorialTable lf(n);
  // ln of sum_l b2^l/l! with b2 = l0, for the 1/A_beta factor.
  const double lnb2 = std::log(l0);
  double m = -std::numeric_limits<double>::infinity();
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    x[static_cast<std::size_t>(l)] = l * lnb2 - lf(l);
    m = std::max(m, x[static_cast<std::size_t>(l)]);
  }
  CompensatedSum s;
  for (double xi : x) s.add(std::exp(xi - m));
  const double ln_sum = m + std::log(s.value());
  const double ln_prefactor =
      0.5 * (lf(n) - n * std::log(static_cast<double>(n))) + 0.5 * ln_sum;
  // Per-l magnitudes sqrt((N-l0)^(N-l)/(N-l)!) carrying the prefactor.
  const double ln_nl0 = std::log(static_cast<double>(n) - l0);
  std::vector<double> e(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    e[static_cast<std::size_t>(l)] =
        std::exp(0.5 * ((n - l) * ln_nl0 - lf(n - l)) + ln_prefactor);
  }
  PhaseDistribution d;
  d.phi_beta.resize(static_cast<std::size_t>(n_samples));
  d.magnitude.resize(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double pb = 2.0 * kPi * k / n_samples;
    CompensatedSum re;
    CompensatedSum im;
    for (int l = 0; l <= n; ++l) {
      const cplx t = std::polar(e[static_cast<std::size_t>(l)], -l * (pb - phi));
      re.add(t.real());
      im.add(t.imag());
    }
    d.phi_beta[static_cast<std::size_t>(k)] = pb;
    d.magnitude[static_cast<std::size_t>(k)] = std::hypot(re.value(), im.value());
  }
  return d;
}

double periodic_fwhm(const PhaseDistribution& d) {
  const std::size_t n = d.magnitude.size();
  if (n < 2) throw std::invalid_argument("periodic_fwhm: too few samples");
  double peak = 0.0;
  for (double v : d.magnitude) peak = std::max(peak, v);
  const double half = 0.5 * peak;
  std::size_t above = 0;
  for (double v : d.magnitude) {
    if (v >= half) ++above;
  }
  return 2.0 * kPi * static_cast<double>(above) / static_cast<double>(n);
}

}  // namespace fragcat
