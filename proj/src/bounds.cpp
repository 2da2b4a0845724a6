#include "wyur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "wyur/error.hpp"

namespace wyur {

namespace {

void require_same_dim(const DensityState& state, const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim() || a.dim() != state.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(state.dim()) + ", channel '" +
                                                  a.label() + "' " + std::to_string(a.dim()) + ", channel '" +
                                                  b.label() + "' " + std::to_string(b.dim()));
  }
}

void require_unitary(const ComplexMatrix& u, const char* name) {
  if (!u.is_square() || unitarity_residual(u) > 1e-10) {
    throw Error(ErrorCode::NotUnitary, std::string(name) + " is not unitary within 1e-10");
  }
}

std::vector<double> sorted_moduli(const ComplexMatrix& m) {
  std::vector<double> out;
  out.reserve(m.size());
  for (const Complex& z : m.entries()) out.push_back(std::abs(z));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Σ_k |v_k|·|v_{π(k)}| maximized over all π ∈ S_len.
double best_self_pairing(std::span<const Complex> v) {
  double best = 0.0;
  for_each_permutation(v.size(), [&](const Permutation& p) { best = std::max(best, abs_pair_sum(v, v, p)); });
  return best;
}

double self_pairing(std::span<const Complex> v, PermStrategy strategy) {
  switch (strategy) {
    case PermStrategy::Identity:
      return abs_pair_sum(v, v, Permutation::identity(v.size()));
    case PermStrategy::Descending:
      return abs_pair_sum(v, v, descending_order(v));
    case PermStrategy::ExhaustiveSmall:
      if (v.size() > 4) {
        throw Error(ErrorCode::TooLarge, "exhaustive permutation search is limited to d = 2");
      }
      return best_self_pairing(v);
  }
  return 0.0;
}

// max over π ∈ S_n of Σ_i weight(i, π(i)); the first maximizer in
// lexicographic order wins.
std::pair<double, Permutation> best_assignment(std::size_t n,
                                               const std::function<double(std::size_t, std::size_t)>& weight) {
  if (n > kMaxExhaustiveKraus) {
    throw Error(ErrorCode::TooManyKraus, std::to_string(n) + " Kraus operators exceed the exhaustive limit of " +
                                             std::to_string(kMaxExhaustiveKraus));
  }
  double best = -1.0;
  Permutation arg = Permutation::identity(n);
  for_each_permutation(n, [&](const Permutation& p) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += weight(i, p[i]);
    if (total > best) {
      best = total;
      arg = p;
    }
  });
  return {best, arg};
}

}  // namespace

bool is_product_bound(std::string_view id) {
  return id == "zhou" || id == "thm1_proof" || id == "thm1_stmt" || id == "thm2";
}

bool is_known_bound(std::string_view id) {
  return std::find(kBoundIds.begin(), kBoundIds.end(), id) != kBoundIds.end();
}

double zhou_bound(const TildeSet& l, const TildeSet& k) {
  double total = 0.0;
  for (const TildeMatrix& a : l)
    for (const TildeMatrix& b : k) total += std::norm(hs_inner(a.matrix, b.matrix));
  return 0.25 * total;
}

double thm1_bound(const TildeSet& l, const TildeSet& k, Thm1Variant variant) {
  double total = 0.0;
  for (const TildeMatrix& a : l) {
    for (const TildeMatrix& b : k) {
      if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "tilde matrices differ in shape");
      }
      const auto ea = a.matrix.entries();
      const auto eb = b.matrix.entries();
      double term = 0.0;
      for (std::size_t s = 0; s < ea.size(); ++s) {
        const double prod = std::abs(ea[s]) * std::abs(eb[s]);
        term += variant == Thm1Variant::ProofForm ? prod : prod * prod;
      }
      total += variant == Thm1Variant::ProofForm ? term * term : term;
    }
  }
#ifdef WYUR_INJECT_FAULT
  if (variant == Thm1Variant::ProofForm) total = -total;
#endif
  return 0.25 * total;
}

double thm2_bound(const TildeSet& l, const TildeSet& k) {
  std::vector<std::vector<double>> sorted_k;
  sorted_k.reserve(k.size());
  for (const TildeMatrix& b : k) sorted_k.push_back(sorted_moduli(b.matrix));

  double total = 0.0;
  for (const TildeMatrix& a : l) {
    const std::vector<double> sa = sorted_moduli(a.matrix);
    for (const std::vector<double>& sb : sorted_k) {
      if (sa.size() != sb.size()) throw Error(ErrorCode::DimensionMismatch, "tilde matrices differ in shape");
      double term = 0.0;
      for (std::size_t s = 0; s < sa.size(); ++s) term += sa[s] * sb[s];
      total += term * term;
    }
  }
  return 0.25 * total;
}

double thm3_term(const ComplexMatrix& l_tilde, const ComplexMatrix& k_tilde, PermStrategy strategy) {
  const VectorizedMatrix plus = vectorize(l_tilde + k_tilde);
  const VectorizedMatrix minus = vectorize(l_tilde - k_tilde);
  return 0.25 * (self_pairing(plus.entries, strategy) + self_pairing(minus.entries, strategy));
}

double thm3_bound(const TildeSet& l, const TildeSet& k, Thm3Pairing pairing, PermStrategy strategy) {
  if (l.size() != k.size()) {
    throw Error(ErrorCode::DimensionMismatch, "sum-form bound needs Kraus lists of equal length");
  }
  const std::size_t n = l.size();
  std::vector<double> terms(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) terms[i * n + j] = thm3_term(l[i].matrix, k[j].matrix, strategy);

  if (pairing == Thm3Pairing::DoubleSumNormalized) {
    double total = 0.0;
    for (double t : terms) total += t;
    return total / static_cast<double>(n);
  }
  return best_assignment(n, [&](std::size_t i, std::size_t j) { return terms[i * n + j]; }).first;
}

double zhou_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b) {
  require_same_dim(state, a, b);
  return zhou_bound(tildes(state, a), tildes(state, b));
}

double thm1_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b, Thm1Variant variant) {
  require_same_dim(state, a, b);
  return thm1_bound(tildes(state, a), tildes(state, b), variant);
}

double thm2_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b) {
  require_same_dim(state, a, b);
  return thm2_bound(tildes(state, a), tildes(state, b));
}

FuResult fu_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b, FuSignMode mode) {
  require_same_dim(state, a, b);
  const auto [pa, pb] = pad_kraus(a, b);
  const std::size_t n = pa.size();
  if (n > kMaxExhaustiveKraus) {
    throw Error(ErrorCode::TooManyKraus, std::to_string(n) + " Kraus operators exceed the exhaustive limit of " +
                                             std::to_string(kMaxExhaustiveKraus));
  }
  const TildeSet tl = tildes(state, pa);
  const TildeSet tk = tildes(state, pb);

  // I_ρ(L ± K) = ½‖L~ ± K~‖² by linearity of the commutator.
  std::vector<double> plus(n * n);
  std::vector<double> minus(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix sum = tl[i].matrix + tk[j].matrix;
      const ComplexMatrix diff = tl[i].matrix - tk[j].matrix;
      plus[i * n + j] = clamp_nonnegative(0.5 * hs_inner(sum, sum).real());
      minus[i * n + j] = clamp_nonnegative(0.5 * hs_inner(diff, diff).real());
    }
  }

  FuResult result;
  if (mode == FuSignMode::PerTerm) {
    auto [value, perm] = best_assignment(
        n, [&](std::size_t i, std::size_t j) { return 0.5 * std::max(plus[i * n + j], minus[i * n + j]); });
    result.value = value;
    result.permutation = perm;
    for (std::size_t i = 0; i < n; ++i)
      result.signs.push_back(plus[i * n + perm[i]] >= minus[i * n + perm[i]] ? +1 : -1);
  } else {
    auto [vp, pp] = best_assignment(n, [&](std::size_t i, std::size_t j) { return 0.5 * plus[i * n + j]; });
    auto [vm, pm] = best_assignment(n, [&](std::size_t i, std::size_t j) { return 0.5 * minus[i * n + j]; });
    const bool use_plus = vp >= vm;
    result.value = use_plus ? vp : vm;
    result.permutation = use_plus ? pp : pm;
    result.signs.assign(n, use_plus ? +1 : -1);
  }
  return result;
}

double thm3_bound(const DensityState& state, const KrausChannel& a, const KrausChannel& b, Thm3Pairing pairing,
                  PermStrategy strategy) {
  require_same_dim(state, a, b);
  if (strategy == PermStrategy::ExhaustiveSmall && state.dim() != 2) {
    throw Error(ErrorCode::TooLarge, "exhaustive permutation search is limited to d = 2");
  }
  const auto [pa, pb] = pad_kraus(a, b);
  return thm3_bound(tildes(state, pa), tildes(state, pb), pairing, strategy);
}

double unitary_product_bound(const DensityState& state, const ComplexMatrix& u, const ComplexMatrix& v) {
  require_unitary(u, "U");
  require_unitary(v, "V");
  return thm2_bound(state, KrausChannel({u}, "U"), KrausChannel({v}, "V"));
}

double unitary_sum_bound(const DensityState& state, const ComplexMatrix& u, const ComplexMatrix& v,
                         PermStrategy strategy) {
  require_unitary(u, "U");
  require_unitary(v, "V");
  return thm3_bound(state, KrausChannel({u}, "U"), KrausChannel({v}, "V"), Thm3Pairing::DoubleSumNormalized,
                    strategy);
}

double BoundReport::bound(std::string_view id) const {
  const auto it = bounds.find(id);
  if (it == bounds.end()) throw Error(ErrorCode::InvalidArgument, "no bound named '" + std::string(id) + "'");
  return it->second;
}

std::vector<std::string> BoundReport::violations(double tol) const {
  std::vector<std::string> out;
  for (const auto& [id, value] : bounds) {
    const double limit = is_product_bound(id) ? product_uncertainty : sum_uncertainty;
    if (value > limit + tol) {
      std::ostringstream os;
      os << id << " = " << value << " exceeds " << (is_product_bound(id) ? "product" : "sum") << " uncertainty "
         << limit;
      out.push_back(os.str());
    }
  }
  return out;
}

BoundReport evaluate_all(const DensityState& state, const KrausChannel& a, const KrausChannel& b) {
  require_same_dim(state, a, b);
  BoundReport report;
  report.state_label = state.label();
  report.channel_a_label = a.label();
  report.channel_b_label = b.label();
  report.channel_a_complete = a.complete();
  report.channel_b_complete = b.complete();

  report.skew_a = skew_info_channel(state, a);
  report.skew_b = skew_info_channel(state, b);
  report.product_uncertainty = report.skew_a * report.skew_b;
  report.sum_uncertainty = report.skew_a + report.skew_b;

  const TildeSet ta = tildes(state, a);
  const TildeSet tb = tildes(state, b);
  report.bounds["zhou"] = zhou_bound(ta, tb);
  report.bounds["thm1_proof"] = thm1_bound(ta, tb, Thm1Variant::ProofForm);
  report.bounds["thm1_stmt"] = thm1_bound(ta, tb, Thm1Variant::StatementForm);
  report.bounds["thm2"] = thm2_bound(ta, tb);

  report.fu_perterm = fu_bound(state, a, b, FuSignMode::PerTerm);
  report.fu_global = fu_bound(state, a, b, FuSignMode::Global);
  report.bounds["fu_perterm"] = report.fu_perterm.value;
  report.bounds["fu_global"] = report.fu_global.value;

  const auto [pa, pb] = pad_kraus(a, b);
  const TildeSet pta = tildes(state, pa);
  const TildeSet ptb = tildes(state, pb);
  report.bounds["thm3_id"] = thm3_bound(pta, ptb, Thm3Pairing::DoubleSumNormalized, PermStrategy::Identity);
  report.bounds["thm3_desc"] = thm3_bound(pta, ptb, Thm3Pairing::DoubleSumNormalized, PermStrategy::Descending);
  return report;
}

std::string_view to_string(Thm1Variant v) {
  return v == Thm1Variant::ProofForm ? "proof_form" : "statement_form";
}

std::string_view to_string(FuSignMode m) { return m == FuSignMode::PerTerm ? "per_term" : "global"; }

std::string_view to_string(Thm3Pairing p) {
  return p == Thm3Pairing::DoubleSumNormalized ? "double_sum_normalized" : "matched_pairs";
}

std::string_view to_string(PermStrategy s) {
  switch (s) {
    case PermStrategy::Identity: return "identity";
    case PermStrategy::Descending: return "descending";
    case PermStrategy::ExhaustiveSmall: return "exhaustive_small";
  }
  return "unknown";
}

}  // namespace wyur
