#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wyur/quantum.hpp"
#include "wyur/rearrange.hpp"
#include "wyur/skew.hpp"

namespace wyur {

// Lower bounds on I_ρ(Ψ)·I_ρ(Φ) (product form) and I_ρ(Ψ)+I_ρ(Φ) (sum form)
// for two channels Ψ = {L_i}, Φ = {K_j}. Everything is expressed through the
// tilde matrices L~_i = [√ρ, L_i], K~_j = [√ρ, K_j].

/// Validity slack for "bound ≤ uncertainty".
inline constexpr double kBoundTol = 1e-9;
/// Slack for the ordering thm2 ≥ thm1 ≥ zhou.
inline constexpr double kChainSlack = 1e-12;
/// Largest Kraus count for exhaustive S_n searches.
inline constexpr std::size_t kMaxExhaustiveKraus = 8;

enum class Thm1Variant {
  ProofForm,      ///< ¼ Σ_ij (Σ_st |A_st|·|B_st|)²
  StatementForm,  ///< ¼ Σ_ij Σ_st |A_st|²·|B_st|²
};

enum class FuSignMode {
  PerTerm,  ///< best sign chosen independently for each i
  Global,   ///< one sign shared by all terms
};

enum class Thm3Pairing {
  DoubleSumNormalized,  ///< (1/n)·Σ_{i,j} term(i, j)
  MatchedPairs,         ///< max_π Σ_i term(i, π(i))
};

/// How the free S_{d²} permutations of the sum-form bound are chosen.
enum class PermStrategy {
  Identity,         ///< saturates: term = I(L_i) + I(K_j)
  Descending,       ///< pair each entry with its rank in the X↓ rearrangement
  ExhaustiveSmall,  ///< maximize over S_4 × S_4; only for d = 2
};

/// Stable bound identifiers, in report/CSV column order.
inline constexpr std::array<std::string_view, 8> kBoundIds = {
    "zhou", "thm1_proof", "thm1_stmt", "thm2", "fu_perterm", "fu_global", "thm3_id", "thm3_desc"};

bool is_product_bound(std::string_view id);
bool is_known_bound(std::string_view id);

// --- tilde-level kernels --------------------------------------------------

double zhou_bound(const TildeSet& l, const TildeSet& k);
double thm1_bound(const TildeSet& l, const TildeSet& k, Thm1Variant variant = Thm1Variant::ProofForm);
double thm2_bound(const TildeSet& l, const TildeSet& k);

/// ¼[Σ_k |m_k||m_{π1(k)}| + Σ_k |n_k||n_{π2(k)}|] with m = vec(L~+K~),
/// n = vec(L~-K~) and π1, π2 chosen by `strategy`.
double thm3_term(const ComplexMatrix& l_tilde, const ComplexMatrix& k_tilde, PermStrategy strategy);
/// Requires |l| == |k| (pad first).
double thm3_bound(const TildeSet& l, const TildeSet& k, Thm3Pairing pairing, PermStrategy strategy);

// --- channel-level API ----------------------------------------------------

/// ¼ Σ_ij |tr(L~_i† K~_j)|².
double zhou_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b);
double thm1_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b,
                  Thm1Variant variant = Thm1Variant::ProofForm);
/// Like thm1 proof form, but with both tilde vectors sorted by non-increasing modulus.
double thm2_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b);

struct FuResult {
  double value = 0.0;
  Permutation permutation;  ///< K index paired with each L_i
  std::vector<int> signs;   ///< +1 / -1 per term at the optimum
};

/// max_{π ∈ S_n} ½ Σ_i I_ρ(L_i ± K_{π(i)}), exhaustive. Both channels are
/// zero-padded to a common n; n > 8 raises TooManyKraus.
FuResult fu_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b,
                  FuSignMode mode = FuSignMode::PerTerm);

/// Sum-form bound built from the parallelogram decomposition. Channels are
/// zero-padded to a common n. MatchedPairs searches S_n exhaustively (n ≤ 8).
double thm3_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b,
                  Thm3Pairing pairing = Thm3Pairing::DoubleSumNormalized,
                  PermStrategy strategy = PermStrategy::Descending);

/// Product-form bound for two unitaries (thm2 on single-operator channels).
double unitary_product_bound(const DensityState& state, const ComplexMatrix& u, const ComplexMatrix& v);
/// Sum-form bound for two unitaries (thm3 with n = 1).
double unitary_sum_bound(const DensityState& state, const ComplexMatrix& u, const ComplexMatrix& v,
                         PermStrategy strategy = PermStrategy::Descending);

struct BoundReport {
  double skew_a = 0.0;
  double skew_b = 0.0;
  double product_uncertainty = 0.0;
  double sum_uncertainty = 0.0;
  std::map<std::string, double, std::less<>> bounds;

  std::string state_label;
  std::string channel_a_label;
  std::string channel_b_label;
  bool channel_a_complete = false;
  bool channel_b_complete = false;
  FuResult fu_perterm;
  FuResult fu_global;
  Thm1Variant thm1_default = Thm1Variant::ProofForm;
  Thm3Pairing thm3_pairing = Thm3Pairing::DoubleSumNormalized;

  double bound(std::string_view id) const;
  /// Human-readable list of broken validity invariants; empty when valid.
  std::vector<std::string> violations(double tol = kBoundTol) const;
};

BoundReport evaluate_all(const DensityState& state, const KrausChannel& a, const KrausChannel& b);

std::string_view to_string(Thm1Variant v);
std::string_view to_string(FuSignMode m);
std::string_view to_string(Thm3Pairing p);
std::string_view to_string(PermStrategy s);

}  // namespace wyur
