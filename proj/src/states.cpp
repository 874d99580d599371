#include "fragcat/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fragcat/format.hpp"

namespace fragcat {

namespace {

constexpr double kPi = std::numbers::pi;

void check_coherent(const CoherentParams& p, const char* who) {
  if (p.n_particles < 1) {
    throw std::invalid_argument(std::string(who) + ": need N >= 1");
  }
  if (!(p.beta_mod_sq >= 0.0) || !std::isfinite(p.beta_mod_sq)) {
    throw std::invalid_argument(std::string(who) +
                                ": beta_mod_sq must be finite and >= 0");
  }
  if (p.beta_mod_sq > static_cast<double>(p.n_particles)) {
    throw std::invalid_argument(
        std::string(who) +
        ": beta_mod_sq exceeds N (mode-1 occupation cannot exceed N)");
  }
}

// Normalized magnitudes exp((x_l - logsumexp(x)) / 2) for weights e^{x_l}.
std::vector<double> normalized_sqrt_weights(const std::vector<double>& x) {
  double m = -std::numeric_limits<double>::infinity();
  for (double xi : x) m = std::max(m, xi);
  CompensatedSum s;
  for (double xi : x) s.add(std::exp(xi - m));
  const double lse = m + std::log(s.value());
  std::vector<double> mag(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mag[i] = std::exp(0.5 * (x[i] - lse));
  }
  return mag;
}

}  // namespace

TwoModeState make_coherent(const CoherentParams& p) {
  check_coherent(p, "make_coherent");
  const int n = p.n_particles;
  const std::string label = "coherent(N=" + std::to_string(n) +
                            ", beta_sq=" + format_double(p.beta_mod_sq) +
                            ", phi_beta=" + format_double(p.phi_beta) + ")";
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, 0.0);
  if (p.beta_mod_sq == 0.0) {
    c[0] = 1.0;
    return TwoModeState(n, std::move(c), label);
  }
  const LogFactorialTable lf(n);
  const double lnb2 = std::log(p.beta_mod_sq);
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    x[static_cast<std::size_t>(l)] = l * lnb2 - lf(l);
  }
  const std::vector<double> mag = normalized_sqrt_weights(x);
  for (int l = 0; l <= n; ++l) {
    c[static_cast<std::size_t>(l)] =
        std::polar(mag[static_cast<std::size_t>(l)], p.phi_beta * l);
  }
  return TwoModeState(n, std::move(c), label);
}

TwoModeState make_coherent_prime(const CoherentParams& p) {
  check_coherent(p, "make_coherent_prime");
  const int n = p.n_particles;
  const std::string label = "coherent_prime(N=" + std::to_string(n) +
                            ", beta_sq=" + format_double(p.beta_mod_sq) +
                            ", phi_beta=" + format_double(p.phi_beta) + ")";
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, 0.0);
  if (p.beta_mod_sq == 0.0) {
    c[static_cast<std::size_t>(n)] = 1.0;
    return TwoModeState(n, std::move(c), label);
  }
  const LogFactorialTable lf(n);
  const double lnb2 = std::log(p.beta_mod_sq);
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    x[static_cast<std::size_t>(l)] = (n - l) * lnb2 - lf(n - l);
  }
  const std::vector<double> mag = normalized_sqrt_weights(x);
  for (int l = 0; l <= n; ++l) {
    c[static_cast<std::size_t>(l)] =
        std::polar(mag[static_cast<std::size_t>(l)], p.phi_beta * (n - l));
  }
  return TwoModeState(n, std::move(c), label);
}

TwoModeState make_phase_state(const PhaseStateParams& p) {
  const int n = p.n_particles;
  if (n < 1) throw std::invalid_argument("make_phase_state: need N >= 1");
  if (!(p.l0 > 0.0) || !(p.l0 < static_cast<double>(n))) {
    throw std::invalid_argument("make_phase_state: l0 must lie in (0, N)");
  }
  const LogFactorialTable lf(n);
  const double ln_l0 = std::log(p.l0);
  const double ln_nl0 = std::log(static_cast<double>(n) - p.l0);
  const double ln_n = std::log(static_cast<double>(n));
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    const double lnw = lf(n) - lf(l) - lf(n - l) + (n - l) * ln_nl0 +
                       l * ln_l0 - n * ln_n;
    c[static_cast<std::size_t>(l)] = std::polar(std::exp(0.5 * lnw), p.phi * l);
  }
  return TwoModeState(n, std::move(c),
                      "phase_state(N=" + std::to_string(n) +
                          ", l0=" + format_double(p.l0) +
                          ", phi=" + format_double(p.phi) + ")");
}

TwoModeState make_gaussian_fragmented(const GaussianFragParams& p) {
  const int n = p.n_particles;
  if (n < 1) {
    throw std::invalid_argument("make_gaussian_fragmented: need N >= 1");
  }
  if (!(p.l0 > 0.0) || !(p.l0 < static_cast<double>(n))) {
    throw std::invalid_argument("make_gaussian_fragmented: l0 must lie in (0, N)");
  }
  if (!(p.u_mod >= 0.0) || !std::isfinite(p.u_mod)) {
    throw std::invalid_argument(
        "make_gaussian_fragmented: u_mod must be finite and >= 0");
  }
  const double sigma =
      p.sigma > 0.0 ? p.sigma
                    : std::sqrt(p.l0 * (1.0 - p.l0 / static_cast<double>(n)));
  const double inv4s2 = 1.0 / (4.0 * sigma * sigma);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  double phase = p.phi0;
  for (int l = 0; l <= n; ++l) {
    const double d = l - p.l0;
    const double mag = (l % 2 == 0 ? 1.0 : p.u_mod) * std::exp(-d * d * inv4s2);
    c[static_cast<std::size_t>(l)] = std::polar(mag, phase);
    phase += (l % 2 == 0) ? p.theta_k : kPi - p.theta_k;
  }
  TwoModeState state(n, std::move(c),
                     "gaussian_fragmented(N=" + std::to_string(n) +
                         ", l0=" + format_double(p.l0) +
                         ", sigma=" + format_double(sigma) +
                         ", u=" + format_double(p.u_mod) +
                         ", theta_k=" + format_double(p.theta_k) + ")");
  const double w0 = std::norm(state.amplitude(0));
  const double wn = std::norm(state.amplitude(n));
  if (w0 > p.boundary_tol || wn > p.boundary_tol) {
    throw std::invalid_argument(
        "make_gaussian_fragmented: boundary weight too large for the regime "
        "of validity (|C_0|^2=" +
        format_double(w0) + ", |C_N|^2=" + format_double(wn) +
        ", tolerance=" + format_double(p.boundary_tol) + ")");
  }
  return state;
}

TwoModeState make_cat(const CatParams& p) {
  check_coherent({p.beta_mod_sq, p.phi_beta, p.n_particles}, "make_cat");
  if (std::isnan(p.r) || p.r < 0.0) {
    throw std::invalid_argument("make_cat: r must be >= 0");
  }
  const int n = p.n_particles;
  const TwoModeState base =
      make_coherent({p.beta_mod_sq, p.phi_beta, p.n_particles});
  const std::string label =
      "cat(N=" + std::to_string(n) + ", beta_sq=" + format_double(p.beta_mod_sq) +
      ", phi_beta=" + format_double(p.phi_beta) + ", r=" + format_double(p.r) +
      ", theta=" + format_double(p.theta) + ")";
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  if (std::isinf(p.r)) {
    // Pure |-beta> branch; (-beta)^l = (-1)^l beta^l exactly.
    const cplx w = std::polar(1.0, p.theta);
    for (int l = 0; l <= n; ++l) {
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      c[static_cast<std::size_t>(l)] = w * sign * base.amplitude(l);
    }
    return TwoModeState(n, std::move(c), label);
  }
  const double overlap = std::exp(-2.0 * p.beta_mod_sq);
  const double nsq = 1.0 + p.r * p.r + 2.0 * p.r * std::cos(p.theta) * overlap;
  if (!(nsq > 1e-14)) {
    throw std::invalid_argument(
        "make_cat: normalization constant is not finite and positive "
        "(branches cancel)");
  }
  const double scale = 1.0 / std::sqrt(nsq);
  const cplx w = p.r * std::polar(1.0, p.theta);
  for (int l = 0; l <= n; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(l)] =
        scale * (base.amplitude(l) + w * sign * base.amplitude(l));
  }
  return TwoModeState(n, std::move(c), label);
}

double lambda_beta(double beta_mod_sq) {
  if (!(beta_mod_sq > 0.0)) {
    throw std::invalid_argument("lambda_beta: beta_mod_sq must be > 0");
  }
  const double e = std::exp(-2.0 * beta_mod_sq);
  return std::sqrt((1.0 + e) / (1.0 - e));
}

CatPolar kangsoo_to_cat(const KangsooParams& k) {
  if (!(k.u_mod >= 0.0) || !(k.lambda_beta >= 1.0)) {
    throw std::invalid_argument(
        "kangsoo_to_cat: need u_mod >= 0 and lambda_beta >= 1");
  }
  const cplx g = std::polar(k.u_mod * k.lambda_beta, k.theta_k + kPi / 2.0);
  const cplx den = 1.0 - g;
  if (std::abs(den) < 1e-14) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  const cplx w = (1.0 + g) / den;
  return {std::abs(w), std::arg(w)};
}

KangsooParams cat_to_kangsoo(double r, double theta, double lb) {
  if (std::isnan(r) || r < 0.0) {
    throw std::invalid_argument("cat_to_kangsoo: r must be >= 0");
  }
  if (!(lb >= 1.0)) {
    throw std::invalid_argument("cat_to_kangsoo: lambda_beta must be >= 1");
  }
  cplx m;
  if (std::isinf(r)) {
    m = 1.0;
  } else {
    const cplx w = std::polar(r, theta);
    const cplx den = w + 1.0;
    if (std::abs(den) < 1e-14) {
      // r e^{i theta} = -1: the pure |odd> limit.
      return {std::numeric_limits<double>::infinity(), 0.0, lb};
    }
    m = (w - 1.0) / den;
  }
  return {std::abs(m) / lb, wrap_angle(std::arg(m) - kPi / 2.0), lb};
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * kPi;
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}

}  // namespace fragcat
