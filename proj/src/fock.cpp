#include "fragcat/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "fragcat/format.hpp"

namespace fragcat {

LogFactorialTable::LogFactorialTable(int max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("LogFactorialTable: max_n must be >= 0");
  }
  values_.resize(static_cast<std::size_t>(max_n) + 1);
  values_[0] = 0.0;
  long double acc = 0.0L;
  for (int n = 1; n <= max_n; ++n) {
    acc += std::log(static_cast<long double>(n));
    values_[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
}

double LogFactorialTable::operator()(int n) const {
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("LogFactorialTable: argument out of range");
  }
  return values_[static_cast<std::size_t>(n)];
}

double stable_norm_sq(std::span<const cplx> v) {
  CompensatedSum s;
  for (const cplx& a : v) {
    s.add(a.real() * a.real());
    s.add(a.imag() * a.imag());
  }
  return s.value();
}

cplx stable_inner(std::span<const cplx> a, std::span<const cplx> b) {
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const cplx t = std::conj(a[i]) * b[i];
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value(), im.value()};
}

TwoModeState::TwoModeState(int n_particles, std::vector<cplx> amplitudes,
                           std::string label)
    : n_(n_particles), amps_(std::move(amplitudes)), label_(std::move(label)) {
  if (n_ < 1) {
    throw std::invalid_argument("TwoModeState: need at least one particle");
  }
  if (amps_.size() != static_cast<std::size_t>(n_) + 1) {
    throw std::invalid_argument(
        "TwoModeState: amplitude vector must have length N+1");
  }
  for (const cplx& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("TwoModeState: non-finite amplitude");
    }
  }
  const double nsq = stable_norm_sq(amps_);
  if (!(nsq > 0.0)) {
    throw std::invalid_argument("TwoModeState: zero-norm amplitude vector");
  }
  const double deficit = std::abs(nsq - 1.0);
  if (deficit > kNormTolerance) {
    const double inv = 1.0 / std::sqrt(nsq);
    for (cplx& a : amps_) a *= inv;
    label_ += "; renormalized(|norm^2-1|=" + format_double(deficit) + ")";
  }
}

TwoModeState TwoModeState::basis(int n_particles, int l) {
  if (n_particles < 1 || l < 0 || l > n_particles) {
    throw std::invalid_argument("TwoModeState::basis: l must lie in [0, N]");
  }
  std::vector<cplx> c(static_cast<std::size_t>(n_particles) + 1, 0.0);
  c[static_cast<std::size_t>(l)] = 1.0;
  return TwoModeState(n_particles, std::move(c),
                      "basis(N=" + std::to_string(n_particles) +
                          ", l=" + std::to_string(l) + ")");
}

namespace {

void check_size(std::size_t n) {
  if (n > ModeMonomial::kMaxFactors) {
    throw std::invalid_argument(
        "ModeMonomial: more than 8 factors is unsupported");
  }
}

}  // namespace

ModeMonomial::ModeMonomial(std::initializer_list<ModeOp> factors)
    : factors_(factors) {
  check_size(factors_.size());
}

ModeMonomial::ModeMonomial(std::vector<ModeOp> factors)
    : factors_(std::move(factors)) {
  check_size(factors_.size());
}

ModeMonomial ModeMonomial::parse(std::string_view text) {
  std::vector<ModeOp> ops;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    const std::string_view tok = text.substr(i, j - i);
    if (tok == "a0") {
      ops.push_back(ModeOp::Annihilate0);
    } else if (tok == "a0+") {
      ops.push_back(ModeOp::Create0);
    } else if (tok == "a1") {
      ops.push_back(ModeOp::Annihilate1);
    } else if (tok == "a1+") {
      ops.push_back(ModeOp::Create1);
    } else {
      throw std::invalid_argument("ModeMonomial::parse: unknown token '" +
                                  std::string(tok) + "'");
    }
    i = j;
  }
  return ModeMonomial(std::move(ops));
}

ModeMonomial ModeMonomial::adjoint() const {
  std::vector<ModeOp> out;
  out.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    switch (*it) {
      case ModeOp::Create0:
        out.push_back(ModeOp::Annihilate0);
        break;
      case ModeOp::Annihilate0:
        out.push_back(ModeOp::Create0);
        break;
      case ModeOp::Create1:
        out.push_back(ModeOp::Annihilate1);
        break;
      case ModeOp::Annihilate1:
        out.push_back(ModeOp::Create1);
        break;
    }
  }
  return ModeMonomial(std::move(out));
}

std::string ModeMonomial::to_string() const {
  std::string s;
  for (const ModeOp f : factors_) {
    if (!s.empty()) s += ' ';
    switch (f) {
      case ModeOp::Create0:
        s += "a0+";
        break;
      case ModeOp::Annihilate0:
        s += "a0";
        break;
      case ModeOp::Create1:
        s += "a1+";
        break;
      case ModeOp::Annihilate1:
        s += "a1";
        break;
    }
  }
  return s;
}

std::vector<cplx> apply_monomial(const TwoModeState& state,
                                 const ModeMonomial& op) {
  const int n = state.n_particles();
  std::vector<cplx> v = state.amplitudes();
  // Slot l carries the basis vector |N-l+d0, l+d1> while factors are applied
  // right to left; the sqrt prefactors annihilate empty modes exactly.
  int d0 = 0;
  int d1 = 0;
  const auto& fs = op.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    switch (*it) {
      case ModeOp::Annihilate1:
        for (int l = 0; l <= n; ++l) {
          const int occ = l + d1;
          v[static_cast<std::size_t>(l)] *=
              occ > 0 ? std::sqrt(static_cast<double>(occ)) : 0.0;
        }
        --d1;
        break;
      case ModeOp::Create1:
        for (int l = 0; l <= n; ++l) {
          const int occ = l + d1 + 1;
          v[static_cast<std::size_t>(l)] *=
              occ > 0 ? std::sqrt(static_cast<double>(occ)) : 0.0;
        }
        ++d1;
        break;
      case ModeOp::Annihilate0:
        for (int l = 0; l <= n; ++l) {
          const int occ = n - l + d0;
          v[static_cast<std::size_t>(l)] *=
              occ > 0 ? std::sqrt(static_cast<double>(occ)) : 0.0;
        }
        --d0;
        break;
      case ModeOp::Create0:
        for (int l = 0; l <= n; ++l) {
          const int occ = n - l + d0 + 1;
          v[static_cast<std::size_t>(l)] *=
              occ > 0 ? std::sqrt(static_cast<double>(occ)) : 0.0;
        }
        ++d0;
        break;
    }
  }
  if (d0 + d1 != 0) {
    // Number non-conserving: orthogonal to the fixed-N space.
    return std::vector<cplx>(static_cast<std::size_t>(n) + 1, 0.0);
  }
  const int shift = d0;
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int l = 0; l <= n; ++l) {
    const int lp = l - shift;
    if (lp >= 0 && lp <= n) {
      out[static_cast<std::size_t>(lp)] = v[static_cast<std::size_t>(l)];
    }
  }
  return out;
}

cplx expectation(const TwoModeState& state, const ModeMonomial& op) {
  const std::vector<cplx> w = apply_monomial(state, op);
  return stable_inner(state.amplitudes(), w);
}

cplx inner(const TwoModeState& a, const TwoModeState& b) {
  if (a.n_particles() != b.n_particles()) {
    throw std::invalid_argument("inner: particle numbers differ");
  }
  return stable_inner(a.amplitudes(), b.amplitudes());
}

double fidelity(const TwoModeState& a, const TwoModeState& b) {
  return std::norm(inner(a, b));
}

}  // namespace fragcat
