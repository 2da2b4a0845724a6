#include "wyur/skew.hpp"

#include "wyur/error.hpp"

namespace wyur {

namespace {

void require_dim(const DensityState& state, const ComplexMatrix& k) {
  if (k.rows() != state.dim() || k.cols() != state.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator is " + std::to_string(k.rows()) + "x" +
                                                  std::to_string(k.cols()) + ", state dimension is " +
                                                  std::to_string(state.dim()));
  }
}

void require_dim(const DensityState& state, const KrausChannel& channel) {
  if (channel.dim() != state.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channel '" + channel.label() + "' has dimension " +
                                                  std::to_string(channel.dim()) + ", state dimension is " +
                                                  std::to_string(state.dim()));
  }
}

}  // namespace

double clamp_nonnegative(double value) noexcept {
  return (value < 0.0 && value >= -kNonNegativeSlack) ? 0.0 : value;
}

TildeMatrix tilde(const DensityState& state, const ComplexMatrix& k) {
  require_dim(state, k);
  return {commutator(state.sqrt_rho(), k), {}};
}

TildeSet tildes(const DensityState& state, const KrausChannel& channel) {
  require_dim(state, channel);
  TildeSet out;
  out.reserve(channel.size());
  for (std::size_t i = 0; i < channel.size(); ++i) {
    TildeMatrix t = tilde(state, channel[i]);
    t.source_label = channel.label() + "[" + std::to_string(i) + "]";
    out.push_back(std::move(t));
  }
  return out;
}

double skew_info_op(const DensityState& state, const ComplexMatrix& k) {
  const ComplexMatrix t = tilde(state, k).matrix;
  return clamp_nonnegative(0.5 * hs_inner(t, t).real());
}

double skew_info_channel(const DensityState& state, const KrausChannel& channel) {
  require_dim(state, channel);
  double total = 0.0;
  for (const ComplexMatrix& k : channel.kraus()) total += skew_info_op(state, k);
  return total;
}

Complex corr_wy(const DensityState& state, const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * hs_inner(tilde(state, a).matrix, tilde(state, b).matrix);
}

InvarianceCheck channel_invariance_check(const DensityState& state, const KrausChannel& channel,
                                         const ComplexMatrix& unitary_mix) {
  require_dim(state, channel);
  const std::size_t n = channel.size();
  if (unitary_mix.rows() != n || unitary_mix.cols() != n) {
    throw Error(ErrorCode::NotUnitaryMix, "mixing matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (unitarity_residual(unitary_mix) > 1e-10) {
    throw Error(ErrorCode::NotUnitaryMix, "mixing matrix is not unitary");
  }
  std::vector<ComplexMatrix> mixed;
  mixed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix k(channel.dim(), channel.dim());
    for (std::size_t j = 0; j < n; ++j) k += unitary_mix(i, j) * channel[j];
    mixed.push_back(std::move(k));
  }
  const KrausChannel remixed(std::move(mixed), channel.label() + "·U");
  return {skew_info_channel(state, channel), skew_info_channel(state, remixed)};
}

}  // namespace wyur
