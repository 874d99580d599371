#include "fragcat/ladder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fragcat/format.hpp"

namespace fragcat {

std::vector<cplx> apply_ladder(const TwoModeState& state, LadderKind kind,
                               bool dagger) {
  const int n = state.n_particles();
  const auto& c = state.amplitudes();
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1, 0.0);
  if (kind == LadderKind::B) {
    if (!dagger) {
      for (int l = 1; l <= n; ++l) {
        out[static_cast<std::size_t>(l - 1)] =
            std::sqrt(static_cast<double>(l)) * c[static_cast<std::size_t>(l)];
      }
    } else {
      for (int l = 0; l < n; ++l) {
        out[static_cast<std::size_t>(l + 1)] =
            std::sqrt(static_cast<double>(l + 1)) *
            c[static_cast<std::size_t>(l)];
      }
    }
  } else {
    if (!dagger) {
      for (int l = 0; l < n; ++l) {
        out[static_cast<std::size_t>(l + 1)] =
            std::sqrt(static_cast<double>(n - l)) *
            c[static_cast<std::size_t>(l)];
      }
    } else {
      for (int l = 1; l <= n; ++l) {
        out[static_cast<std::size_t>(l - 1)] =
            std::sqrt(static_cast<double>(n - l + 1)) *
            c[static_cast<std::size_t>(l)];
      }
    }
  }
  return out;
}

double commutator_deficit(const TwoModeState& state, LadderKind kind) {
  const std::vector<cplx> down = apply_ladder(state, kind, false);
  const std::vector<cplx> up = apply_ladder(state, kind, true);
  return 1.0 - (stable_norm_sq(up) - stable_norm_sq(down));
}

double commutator_deficit_closed(const TwoModeState& state, LadderKind kind) {
  const int n = state.n_particles();
  const double w = kind == LadderKind::B ? std::norm(state.amplitude(n))
                                         : std::norm(state.amplitude(0));
  return (n + 1) * w;
}

double robustness_loss(double beta_mod_sq, int n_particles, int n) {
  if (n_particles < 1) {
    throw std::invalid_argument("robustness_loss: need N >= 1");
  }
  if (n < 1 || n > n_particles) {
    throw std::invalid_argument("robustness_loss: n must lie in [1, N]");
  }
  if (!(beta_mod_sq >= 0.0) || !std::isfinite(beta_mod_sq)) {
    throw std::invalid_argument(
        "robustness_loss: beta_mod_sq must be finite and >= 0");
  }
  if (beta_mod_sq == 0.0) return 0.0;
  const LogFactorialTable lf(n_particles);
  const double lnb2 = std::log(beta_mod_sq);
  double m = -std::numeric_limits<double>::infinity();
  std::vector<double> x(static_cast<std::size_t>(n_particles) + 1);
  for (int l = 0; l <= n_particles; ++l) {
    x[static_cast<std::size_t>(l)] = l * lnb2 - lf(l);
    m = std::max(m, x[static_cast<std::size_t>(l)]);
  }
  CompensatedSum num;
  CompensatedSum den;
  for (int l = 0; l <= n_particles; ++l) {
    const double t = std::exp(x[static_cast<std::size_t>(l)] - m);
    den.add(t);
    if (l >= n_particles - n + 1) num.add(t);
  }
  return num.value() / den.value();
}

TwoModeState tof_rotate(const TwoModeState& state, double varphi) {
  const int n = state.n_particles();
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    c[static_cast<std::size_t>(l)] =
        state.amplitude(l) * std::polar(1.0, varphi * l);
  }
  return TwoModeState(n, std::move(c),
                      state.label() +
                          "; rotated(varphi=" + format_double(varphi) + ")");
}

}  // namespace fragcat
