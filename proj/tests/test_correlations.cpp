#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "fragcat/correlations.hpp"
#include "fragcat/observables.hpp"
#include "fragcat/states.hpp"

using namespace fragcat;

namespace {

constexpr double kPi = std::numbers::pi;

double trapezoid(const std::vector<double>& z, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    acc += 0.5 * (f[i] + f[i - 1]) * (z[i] - z[i - 1]);
  }
  return acc;
}

void check_grid_structure(const CorrelationGrid& g, double tol) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      CHECK(std::abs(g.at(i, j) - g.at(j, i)) <= tol);
      // odd grids centered on zero: the parity partner of (i, j)
      CHECK(std::abs(g.at(i, j) - g.at(n - 1 - i, n - 1 - j)) <= tol);
    }
  }
}

TwoModeState fig1_cat(double l0) {
  return make_cat({l0, kPi / 2, 100, 1.0, kPi / 2});
}

}  // namespace

TEST_CASE("harmonic orbitals") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  SUBCASE("parity and values") {
    for (double z : {0.1, 0.77, 1.9, 3.4}) {
      CHECK(std::abs(orb.psi0(z) - orb.psi0(-z)) < 1e-12);
      CHECK(std::abs(orb.psi1(z) + orb.psi1(-z)) < 1e-12);
    }
    CHECK(orb.psi0(0.0) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
    CHECK(orb.psi1(0.0) == 0.0);
  }
  SUBCASE("grid normalization") {
    const std::vector<double> z = linspace(-4.0, 4.0, 101);
    std::vector<double> f0(z.size());
    std::vector<double> f1(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      f0[i] = orb.psi0(z[i]) * orb.psi0(z[i]);
      f1[i] = orb.psi1(z[i]) * orb.psi1(z[i]);
    }
    CHECK(std::abs(trapezoid(z, f0) - 1.0) < 1e-6);
    CHECK(std::abs(trapezoid(z, f1) - 1.0) < 1e-6);
  }
}

TEST_CASE("one-body density") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  SUBCASE("|N,0> density is N |psi0|^2") {
    const TwoModeState s = TwoModeState::basis(100, 0);
    CHECK(density(s, orb, 0.0) ==
          doctest::Approx(100.0 / std::sqrt(kPi)).epsilon(1e-12));
  }
  SUBCASE("|0,N> density vanishes at the origin") {
    CHECK(density(TwoModeState::basis(100, 100), orb, 0.0) == 0.0);
  }
  SUBCASE("integrates to N") {
    const TwoModeState cat = fig1_cat(20.0);
    const std::vector<double> z = linspace(-4.0, 4.0, 101);
    std::vector<double> f(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      f[i] = density(cat, orb, z[i]);
    }
    CHECK(std::abs(trapezoid(z, f) - 100.0) < 0.1);
  }
}

TEST_CASE("quartic moments match the continuum forms for the gaussian state") {
  // <a0+a0+a0a0> = (N-l0)^2 - (N-l0) + sigma^2 etc., up to truncation
  // corrections that are tiny at l0 = 20, sigma^2 = 16.
  const TwoModeState g = make_gaussian_fragmented({100, 20.0, 0.0, 1.0, 0.0});
  const QuarticMoments q = quartic_moments(g);
  CHECK(q.n0 == doctest::Approx(80.0).epsilon(1e-4));
  CHECK(q.n1 == doctest::Approx(20.0).epsilon(1e-4));
  CHECK(q.q0000 == doctest::Approx(80.0 * 80.0 - 80.0 + 16.0).epsilon(1e-3));
  CHECK(q.q1111 == doctest::Approx(20.0 * 20.0 - 20.0 + 16.0).epsilon(1e-3));
  CHECK(q.q0110 == doctest::Approx(80.0 * 20.0 - 16.0).epsilon(1e-3));
  // pair coherence is macroscopically negative before TOF
  CHECK(q.q0011.real() < -1500.0);
  CHECK(std::abs(q.q0011.imag()) < 1e-9);
}

TEST_CASE("delta rho2 exact") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  const std::vector<double> z = linspace(-4.0, 4.0, 101);

  SUBCASE("|N,0> reduces to the single-mode connected term") {
    // All cross terms vanish; what is left is the normal-ordering deficit
    // <a0+a0+a0a0> - <a0+a0>^2 = -N on the |psi0|^2 |psi0'|^2 weight.
    const TwoModeState s = TwoModeState::basis(100, 0);
    const CorrelationGrid g = delta_rho2_exact(s, orb, z, 0.0);
    for (int i : {0, 25, 50, 75}) {
      for (int j : {10, 50, 90}) {
        const double w = orb.psi0(z[static_cast<std::size_t>(i)]) *
                         orb.psi0(z[static_cast<std::size_t>(i)]) *
                         orb.psi0(z[static_cast<std::size_t>(j)]) *
                         orb.psi0(z[static_cast<std::size_t>(j)]);
        CHECK(g.at(i, j) == doctest::Approx(-100.0 * w).epsilon(1e-10));
      }
    }
  }

  SUBCASE("frozen reference values for the Fig. 1 cat at b2 = 20") {
    const CorrelationGrid after =
        delta_rho2_exact(fig1_cat(20.0), orb, z, -kPi / 2);
    // z index 59 is z = 0.72, the on-grid peak position.
    CHECK(z[59] == doctest::Approx(0.72).epsilon(1e-14));
    CHECK(after.at(59, 59) ==
          doctest::Approx(730.46092745420522).epsilon(1e-10));
    CHECK(after.abs_max() ==
          doctest::Approx(753.36695741735629).epsilon(1e-10));
    const CorrelationGrid before =
        delta_rho2_exact(fig1_cat(20.0), orb, z, 0.0);
    CHECK(before.abs_max() ==
          doctest::Approx(19.09859317102744).epsilon(1e-10));
    CHECK(before.abs_max() <= 0.1 * after.abs_max());
  }

  SUBCASE("matches rho2 minus the density product") {
    const TwoModeState cat = fig1_cat(10.0);
    const CorrelationGrid d = delta_rho2_exact(cat, orb, z, -kPi / 2);
    const CorrelationGrid g2 = rho2_correlator(cat, orb, z, -kPi / 2);
    const TwoModeState rotated = tof_rotate(cat, -kPi / 2);
    std::vector<double> rho(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      rho[i] = density(rotated, orb, z[i]);
    }
    for (int i = 0; i < 101; i += 7) {
      for (int j = 0; j < 101; j += 7) {
        CHECK(d.at(i, j) ==
              doctest::Approx(g2.at(i, j) -
                              rho[static_cast<std::size_t>(i)] *
                                  rho[static_cast<std::size_t>(j)])
                  .epsilon(1e-9));
      }
    }
  }

  SUBCASE("structural invariants for the sign-rule families") {
    const std::vector<CorrelationGrid> grids = {
        delta_rho2_exact(fig1_cat(5.0), orb, z, -kPi / 2),
        delta_rho2_exact(fig1_cat(20.0), orb, z, -kPi / 2),
        delta_rho2_exact(fig1_cat(20.0), orb, z, 0.0),
        delta_rho2_exact(
            make_gaussian_fragmented({100, 20.0, 0.0, 1.0, 0.0}), orb, z,
            -kPi / 2),
        delta_rho2_exact(make_coherent({20.0, kPi / 2, 100}), orb, z, 0.0),
        rho2_correlator(fig1_cat(20.0), orb, z, 0.0),
    };
    for (const CorrelationGrid& g : grids) {
      check_grid_structure(g, 1e-10);
    }
  }
}

TEST_CASE("delta rho2 asymptotic") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  SUBCASE("zero before TOF and at r = 0") {
    const std::vector<double> z = linspace(-2.0, 2.0, 21);
    const CorrelationGrid g0 =
        delta_rho2_asymptotic(100, 20.0, 1.0, 0.0, orb, z);
    CHECK(g0.abs_max() == 0.0);
    const CorrelationGrid gr =
        delta_rho2_asymptotic(100, 20.0, 0.0, -kPi / 2, orb, z);
    CHECK(gr.abs_max() == 0.0);
  }
  SUBCASE("closed-form peak value at z = z' = 1/sqrt(2)") {
    const std::vector<double> z = {1.0 / std::numbers::sqrt2};
    const CorrelationGrid g =
        delta_rho2_asymptotic(100, 20.0, 1.0, -kPi / 2, orb, z);
    CHECK(g.at(0, 0) == doctest::Approx(749.43784351128526).epsilon(1e-12));
  }
  SUBCASE("exact peak matches the closed form within 10%") {
    const std::vector<double> z = linspace(-4.0, 4.0, 101);
    const CorrelationGrid exact =
        delta_rho2_exact(fig1_cat(20.0), orb, z, -kPi / 2);
    const CorrelationGrid asym =
        delta_rho2_asymptotic(100, 20.0, 1.0, -kPi / 2, orb, z);
    CHECK(std::abs(exact.abs_max() - asym.abs_max()) / asym.abs_max() < 0.10);
  }
}

TEST_CASE("rho2 correlator") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  const std::vector<double> z = linspace(-4.0, 4.0, 101);
  SUBCASE("double integral is <N(N-1)>") {
    const CorrelationGrid g = rho2_correlator(fig1_cat(20.0), orb, z, 0.0);
    const double h = z[1] - z[0];
    double acc = 0.0;
    for (int i = 0; i < 101; ++i) {
      for (int j = 0; j < 101; ++j) {
        const double w = (i == 0 || i == 100 ? 0.5 : 1.0) *
                         (j == 0 || j == 100 ? 0.5 : 1.0);
        acc += w * g.at(i, j);
      }
    }
    acc *= h * h;
    CHECK(std::abs(acc - (100.0 * 99.0)) / (100.0 * 99.0) < 0.01);
  }
  SUBCASE("theta independence at large b2") {
    const CorrelationGrid a = rho2_correlator(
        make_cat({20.0, kPi / 2, 100, 1.0, 0.0}), orb, z, 0.0);
    const CorrelationGrid b = rho2_correlator(
        make_cat({20.0, kPi / 2, 100, 1.0, kPi / 2}), orb, z, 0.0);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      dev = std::max(dev, std::abs(a.values[i] - b.values[i]));
    }
    CHECK(dev / b.abs_max() < 1e-3);
  }
  SUBCASE("the two coherent branches have identical correlators") {
    const CorrelationGrid a = rho2_correlator(
        make_cat({20.0, kPi / 2, 100, 0.0, 0.0}), orb, z, 0.0);
    const CorrelationGrid b = rho2_correlator(
        make_cat({20.0, kPi / 2, 100,
                  std::numeric_limits<double>::infinity(), 0.0}),
        orb, z, 0.0);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      dev = std::max(dev, std::abs(a.values[i] - b.values[i]));
    }
    CHECK(dev / b.abs_max() < 1e-10);
  }
}

TEST_CASE("ansatz deviation against the matched cat state") {
  // Exact-engine comparison between the Gaussian fragmented state and the
  // cat ansatz, after TOF. With the binomial default width the deviation is
  // NOT monotone over l0 (the binomial width happens to match the cat's
  // Poisson width at small l0/N); the frozen values document this. With the
  // Poisson-matched width sigma^2 = l0 the convergence claim holds.
  const OrbitalPair orb = OrbitalPair::harmonic();
  const std::vector<double> z = linspace(-4.0, 4.0, 101);
  auto normalized_dev = [&](double l0, double sigma) {
    const TwoModeState g = make_gaussian_fragmented(
        {100, l0, sigma, 1.0, 0.0, 0.0, 0.05});
    const CorrelationGrid gg = delta_rho2_exact(g, orb, z, -kPi / 2);
    const CorrelationGrid cc =
        delta_rho2_exact(fig1_cat(l0), orb, z, -kPi / 2);
    double dev = 0.0;
    for (std::size_t i = 0; i < gg.values.size(); ++i) {
      dev = std::max(dev, std::abs(gg.values[i] - cc.values[i]));
    }
    return dev / cc.abs_max();
  };
  SUBCASE("binomial width: frozen values") {
    CHECK(normalized_dev(5.0, 0.0) ==
          doctest::Approx(0.00056250549298265928).epsilon(1e-6));
    CHECK(normalized_dev(10.0, 0.0) ==
          doctest::Approx(0.0023728409287506565).epsilon(1e-6));
    CHECK(normalized_dev(20.0, 0.0) ==
          doctest::Approx(0.0016900900597667374).epsilon(1e-6));
  }
  SUBCASE("poisson-matched width: deviation shrinks with l0") {
    const double d5 = normalized_dev(5.0, std::sqrt(5.0));
    const double d10 = normalized_dev(10.0, std::sqrt(10.0));
    const double d20 = normalized_dev(20.0, std::sqrt(20.0));
    CHECK(d5 == doctest::Approx(0.0028802709158732703).epsilon(1e-6));
    CHECK(d10 == doctest::Approx(0.00052165178595377695).epsilon(1e-6));
    CHECK(d20 == doctest::Approx(0.00015744817480880488).epsilon(1e-6));
    CHECK(d10 < d5);
    CHECK(d20 < d10);
  }
}

TEST_CASE("grid resolution independence") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  const TwoModeState cat = fig1_cat(20.0);
  const CorrelationGrid coarse =
      delta_rho2_exact(cat, orb, linspace(-4.0, 4.0, 101), -kPi / 2);
  const CorrelationGrid fine =
      delta_rho2_exact(cat, orb, linspace(-4.0, 4.0, 201), -kPi / 2);
  auto peak = [](const CorrelationGrid& g) {
    int bi = 0;
    int bj = 0;
    double bv = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) {
        if (std::abs(g.at(i, j)) > std::abs(bv)) {
          bv = g.at(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    return std::tuple<double, double, double>(
        g.z[static_cast<std::size_t>(bi)], g.z[static_cast<std::size_t>(bj)],
        bv);
  };
  const auto [ci, cj, cv] = peak(coarse);
  const auto [fi, fj, fv] = peak(fine);
  CHECK(std::abs(std::abs(fv) - std::abs(cv)) / std::abs(cv) < 0.005);
  CHECK(std::abs(std::abs(fi) - std::abs(ci)) < 0.04 + 1e-12);
  CHECK(std::abs(std::abs(fj) - std::abs(cj)) < 0.04 + 1e-12);
}

TEST_CASE("grid preconditions") {
  const OrbitalPair orb = OrbitalPair::harmonic();
  CHECK_THROWS_AS(
      delta_rho2_exact(TwoModeState::basis(4, 0), orb, {}, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      delta_rho2_asymptotic(10, 11.0, 1.0, 0.0, orb, {0.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(linspace(1.0, 0.0, 5), std::invalid_argument);
}
