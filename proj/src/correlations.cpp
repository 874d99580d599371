#include "fragcat/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fragcat/format.hpp"
#include "fragcat/ladder.hpp"

namespace fragcat {

namespace {

constexpr double kPi = std::numbers::pi;

void check_grid(const std::vector<double>& z) {
  if (z.empty()) {
    throw std::invalid_argument("correlation grid: z samples must be nonempty");
  }
}

struct OrbitalSamples {
  std::vector<double> p0;
  std::vector<double> p1;
  std::vector<double> prod;  // psi0 * psi1
};

OrbitalSamples sample_orbitals(const OrbitalPair& orb,
                               const std::vector<double>& z) {
  OrbitalSamples s;
  s.p0.reserve(z.size());
  s.p1.reserve(z.size());
  s.prod.reserve(z.size());
  for (double zi : z) {
    const double a = orb.psi0(zi);
    const double b = orb.psi1(zi);
    s.p0.push_back(a);
    s.p1.push_back(b);
    s.prod.push_back(a * b);
  }
  return s;
}

}  // namespace

OrbitalPair OrbitalPair::harmonic() {
  const double norm = std::pow(kPi, -0.25);
  return OrbitalPair{
      "harmonic",
      [norm](double z) { return norm * std::exp(-0.5 * z * z); },
      [norm](double z) {
        return norm * std::numbers::sqrt2 * z * std::exp(-0.5 * z * z);
      }};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument("linspace: need hi > lo");
  std::vector<double> z(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] = lo + step * i;
  }
  z.back() = hi;
  return z;
}

double CorrelationGrid::abs_max() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

QuarticMoments quartic_moments(const TwoModeState& state) {
  const auto expect = [&state](std::string_view text) {
    return expectation(state, ModeMonomial::parse(text));
  };
  QuarticMoments q;
  q.n0 = expect("a0+ a0").real();
  q.n1 = expect("a1+ a1").real();
  q.s01 = expect("a0+ a1");
  q.q0000 = expect("a0+ a0+ a0 a0").real();
  q.q1111 = expect("a1+ a1+ a1 a1").real();
  q.q0110 = expect("a0+ a1+ a1 a0").real();
  q.q0001 = expect("a0+ a0+ a0 a1");
  q.q0111 = expect("a0+ a1+ a1 a1");
  q.q0011 = expect("a0+ a0+ a1 a1");
  return q;
}

double density(const TwoModeState& state, const OrbitalPair& orbitals,
               double z) {
  const double p0 = orbitals.psi0(z);
  const double p1 = orbitals.psi1(z);
  const cplx s01 =
      expectation(state, ModeMonomial{ModeOp::Create0, ModeOp::Annihilate1});
  const double n0 =
      expectation(state, ModeMonomial{ModeOp::Create0, ModeOp::Annihilate0})
          .real();
  const double n1 =
      expectation(state, ModeMonomial{ModeOp::Create1, ModeOp::Annihilate1})
          .real();
  return p0 * p0 * n0 + p1 * p1 * n1 + 2.0 * p0 * p1 * s01.real();
}

namespace {

// Shared evaluator for the exact correlator grids. The grid value at (z, z')
// is assembled from six parity-grouped coefficients:
//   c_00 w00 + c_11 w11 + c_x (w01 + w10)
//   + c_4 (p0^2 P' + p0'^2 P) + c_5 (p1^2 P' + p1'^2 P) + c_6 P P'
// with w_ij the squared-orbital weights and P = psi0 psi1.
struct GridCoefficients {
  double c00, c11, cx, c4, c5, c6;
};

CorrelationGrid fill_grid(const GridCoefficients& c, const OrbitalSamples& s,
                          const std::vector<double>& z, std::string label,
                          double varphi, std::string method) {
  const int n = static_cast<int>(z.size());
  CorrelationGrid g;
  g.z = z;
  g.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  0.0);
  g.state_label = std::move(label);
  g.varphi = varphi;
  g.method = std::move(method);
  for (int i = 0; i < n; ++i) {
    const double p0i2 = s.p0[static_cast<std::size_t>(i)] *
                        s.p0[static_cast<std::size_t>(i)];
    const double p1i2 = s.p1[static_cast<std::size_t>(i)] *
                        s.p1[static_cast<std::size_t>(i)];
    const double pri = s.prod[static_cast<std::size_t>(i)];
    for (int j = i; j < n; ++j) {
      const double p0j2 = s.p0[static_cast<std::size_t>(j)] *
                          s.p0[static_cast<std::size_t>(j)];
      const double p1j2 = s.p1[static_cast<std::size_t>(j)] *
                          s.p1[static_cast<std::size_t>(j)];
      const double prj = s.prod[static_cast<std::size_t>(j)];
      const double val = c.c00 * p0i2 * p0j2 + c.c11 * p1i2 * p1j2 +
                         c.cx * (p0i2 * p1j2 + p1i2 * p0j2) +
                         c.c4 * (p0i2 * prj + p0j2 * pri) +
                         c.c5 * (p1i2 * prj + p1j2 * pri) + c.c6 * pri * prj;
      g.at(i, j) = val;
      g.at(j, i) = val;
    }
  }
  return g;
}

}  // namespace

CorrelationGrid delta_rho2_exact(const TwoModeState& state,
                                 const OrbitalPair& orbitals,
                                 const std::vector<double>& z_samples,
                                 double varphi) {
  check_grid(z_samples);
  const TwoModeState rotated = tof_rotate(state, varphi);
  const QuarticMoments q = quartic_moments(rotated);
  const GridCoefficients c{
      q.q0000 - q.n0 * q.n0,
      q.q1111 - q.n1 * q.n1,
      q.q0110 - q.n0 * q.n1,
      2.0 * (q.q0001.real() - q.n0 * q.s01.real()),
      2.0 * (q.q0111.real() - q.s01.real() * q.n1),
      2.0 * q.q0110 + 2.0 * q.q0011.real() -
          4.0 * q.s01.real() * q.s01.real()};
  const OrbitalSamples s = sample_orbitals(orbitals, z_samples);
  return fill_grid(c, s, z_samples, state.label(), varphi, "exact");
}

CorrelationGrid rho2_correlator(const TwoModeState& state,
                                const OrbitalPair& orbitals,
                                const std::vector<double>& z_samples,
                                double varphi) {
  check_grid(z_samples);
  const TwoModeState rotated = tof_rotate(state, varphi);
  const QuarticMoments q = quartic_moments(rotated);
  const GridCoefficients c{q.q0000,
                           q.q1111,
                           q.q0110,
                           2.0 * q.q0001.real(),
                           2.0 * q.q0111.real(),
                           2.0 * q.q0110 + 2.0 * q.q0011.real()};
  const OrbitalSamples s = sample_orbitals(orbitals, z_samples);
  return fill_grid(c, s, z_samples, state.label(), varphi, "exact");
}

CorrelationGrid delta_rho2_asymptotic(int n_particles, double l0, double r,
                                      double varphi,
                                      const OrbitalPair& orbitals,
                                      const std::vector<double>& z_samples) {
  check_grid(z_samples);
  if (n_particles < 1) {
    throw std::invalid_argument("delta_rho2_asymptotic: need N >= 1");
  }
  if (!(l0 > 0.0) || !(l0 < static_cast<double>(n_particles))) {
    throw std::invalid_argument(
        "delta_rho2_asymptotic: l0 must lie in (0, N)");
  }
  if (std::isnan(r) || r < 0.0) {
    throw std::invalid_argument("delta_rho2_asymptotic: r must be >= 0");
  }
  const double g = std::isinf(r) ? 0.0 : 2.0 * r / (1.0 + r * r);
  const double sv = std::sin(varphi);
  const double amp =
      4.0 * (n_particles - l0) * l0 * sv * sv * g * g;
  const GridCoefficients c{0.0, 0.0, 0.0, 0.0, 0.0, amp};
  const OrbitalSamples s = sample_orbitals(orbitals, z_samples);
  return fill_grid(
      c, s, z_samples,
      "asymptotic(N=" + std::to_string(n_particles) + ", l0=" +
          format_double(l0) + ", r=" + format_double(r) + ")",
      varphi, "asymptotic");
}

}  // namespace fragcat
