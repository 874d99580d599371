#pragma once

#include "fragcat/fock.hpp"

namespace fragcat {

/// The two number-conserving ladder operators. B transfers one particle
/// from mode 1 to mode 0 (b |N-l,l> = sqrt(l) |N-l+1,l-1>); BPrime is the
/// mode-swapped partner.
enum class LadderKind { B, BPrime };

/// Exact ladder action as the regularized limit of the operator definition:
/// the dagger of B annihilates the l = N component (no particle left to
/// transfer) and the dagger of BPrime annihilates l = 0.
std::vector<cplx> apply_ladder(const TwoModeState& state, LadderKind kind,
                               bool dagger);

/// 1 - <[b, b^dag]> computed through apply_ladder.
double commutator_deficit(const TwoModeState& state, LadderKind kind);

/// The closed form (N+1)|C_N|^2 for B and (N+1)|C_0|^2 for BPrime.
double commutator_deficit_closed(const TwoModeState& state, LadderKind kind);

/// Fraction of coherent-state weight lost to n-fold ladder action:
/// (sum_{l=N-n+1}^N b2^l/l!) / (sum_{l=0}^N b2^l/l!). Nondecreasing in n
/// and in b2; requires 1 <= n <= N.
double robustness_loss(double beta_mod_sq, int n_particles, int n);

/// C_l -> C_l e^{i l varphi}; the time-of-flight expansion map. Rotates a
/// coherent state's phase, phi_beta -> phi_beta + varphi.
TwoModeState tof_rotate(const TwoModeState& state, double varphi);

}  // namespace fragcat
