#pragma once

#include <string>
#include <vector>

#include "wyur/matrix.hpp"
#include "wyur/quantum.hpp"

namespace wyur {

/// Commutator [√ρ, K] for one operator.
struct TildeMatrix {
  ComplexMatrix matrix;
  std::string source_label;
};

using TildeSet = std::vector<TildeMatrix>;

/// Results within this distance below zero are reported as exactly zero.
inline constexpr double kNonNegativeSlack = 1e-12;

TildeMatrix tilde(const DensityState& state, const ComplexMatrix& k);
/// One tilde per Kraus operator, in channel order.
TildeSet tildes(const DensityState& state, const KrausChannel& channel);

/// Wigner-Yanase skew information ½·tr([√ρ,K]†[√ρ,K]).
double skew_info_op(const DensityState& state, const ComplexMatrix& k);
/// Σ_i I_ρ(K_i).
double skew_info_channel(const DensityState& state, const KrausChannel& channel);

/// ½·tr([√ρ,A]†[√ρ,B]).
Complex corr_wy(const DensityState& state, const ComplexMatrix& a, const ComplexMatrix& b);

struct InvarianceCheck {
  double original = 0.0;
  double mixed = 0.0;
};

/// Skew information of `channel` and of the equivalent representation
/// K'_i = Σ_j u_ij K_j. `unitary_mix` must be n×n unitary (1e-10), otherwise
/// NotUnitaryMix.
InvarianceCheck channel_invariance_check(const DensityState& state, const KrausChannel& channel,
                                         const ComplexMatrix& unitary_mix);

/// Clamps values in [-kNonNegativeSlack, 0) to 0.
double clamp_nonnegative(double value) noexcept;

}  // namespace wyur
