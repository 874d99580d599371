#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fragcat {

using cplx = std::complex<double>;

/// States are accepted as normalized when |sum |C_l|^2 - 1| is below this.
inline constexpr double kNormTolerance = 1e-12;

/// Table of ln(n!) for n = 0..max_n, accumulated in extended precision so
/// that consecutive differences reproduce ln(n) to better than 1e-12 even
/// for max_n = 1000.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_n);
  double operator()(int n) const;
  int max_n() const { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<double> values_;
};

/// Neumaier-compensated accumulator; keeps long sums of O(N) terms accurate
/// to a few ulp instead of O(N*eps).
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double stable_norm_sq(std::span<const cplx> v);
cplx stable_inner(std::span<const cplx> a, std::span<const cplx> b);

/// Normalized state of N bosons in two modes, sum_l C_l |N-l, l>, where l
/// counts particles in mode 1. Immutable after construction; construction
/// renormalizes analytically unnormalized input and records the deficit in
/// the label.
class TwoModeState {
 public:
  TwoModeState(int n_particles, std::vector<cplx> amplitudes,
               std::string label);

  /// The basis vector |N-l, l>.
  static TwoModeState basis(int n_particles, int l);

  int n_particles() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(int l) const { return amps_[static_cast<std::size_t>(l)]; }
  const std::string& label() const { return label_; }

 private:
  int n_;
  std::vector<cplx> amps_;
  std::string label_;
};

enum class ModeOp { Create0, Annihilate0, Create1, Annihilate1 };

/// Ordered product of elementary mode operators, written in operator order
/// (leftmost factor acts last). At most 8 factors, enough for every quartic
/// moment used by the correlation formulas.
class ModeMonomial {
 public:
  static constexpr std::size_t kMaxFactors = 8;

  ModeMonomial(std::initializer_list<ModeOp> factors);
  explicit ModeMonomial(std::vector<ModeOp> factors);

  /// Parses "a0+ a1+ a1 a0" style text (tokens a0, a0+, a1, a1+).
  static ModeMonomial parse(std::string_view text);

  ModeMonomial adjoint() const;
  const std::vector<ModeOp>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::string to_string() const;

 private:
  std::vector<ModeOp> factors_;
};

/// Exact action of the monomial on the fixed-N expansion. Number
/// non-conserving monomials return the zero vector (the fixed-N space
/// projects them out); components pushed outside l in [0, N] are annihilated
/// exactly by the ladder prefactors, never truncated approximately.
std::vector<cplx> apply_monomial(const TwoModeState& state,
                                 const ModeMonomial& op);

/// <state| op |state> via apply_monomial plus a compensated inner product.
cplx expectation(const TwoModeState& state, const ModeMonomial& op);

/// sum_l conj(A_l) B_l; requires equal particle number.
cplx inner(const TwoModeState& a, const TwoModeState& b);

/// |<a|b>|^2.
double fidelity(const TwoModeState& a, const TwoModeState& b);

}  // namespace fragcat
