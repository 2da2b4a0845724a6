#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wyur/eigen.hpp"
#include "wyur/error.hpp"
#include "wyur/skew.hpp"

using namespace wyur;

namespace {

DensityState ket0() { return state_from_bloch({0, 0, 1}); }

// Direct trace formula I = ½tr(ρ(K†K + KK†)) - Re tr(√ρ K† √ρ K), independent
// of the vectorized inner product used by the library.
double skew_by_trace(const DensityState& s, const ComplexMatrix& k) {
  const ComplexMatrix& r = s.rho();
  const ComplexMatrix& sr = s.sqrt_rho();
  return 0.5 * (r * (k.adjoint() * k + k * k.adjoint())).trace().real() - (sr * k.adjoint() * sr * k).trace().real();
}

ComplexMatrix random_mix(std::size_t n, std::uint64_t seed) {
  return random_unitary(n, seed);
}

}  // namespace

TEST_CASE("tilde of a pure state") {
  const TildeMatrix t = tilde(ket0(), pauli::x());
  CHECK(max_abs_diff(t.matrix, ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}})) == 0.0);
  CHECK(tilde(state_from_bloch({0, 0, 0}), pauli::y()).matrix.max_abs() <= 1e-15);
  CHECK(tilde(ket0(), pauli::z()).matrix.max_abs() == 0.0);
}

TEST_CASE("skew information anchors") {
  CHECK(skew_info_op(ket0(), pauli::x()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(skew_info_op(ket0(), pauli::z()) == 0.0);
  for (std::size_t d = 2; d <= 5; ++d) {
    const ComplexMatrix maximally_mixed = (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
    const DensityState s = DensityState::from_matrix(maximally_mixed);
    CHECK(std::abs(skew_info_op(s, testing::random_matrix(d, d, d))) <= 1e-12);
  }
  for (int k = 0; k <= 100; ++k) {
    const double q = 0.99 * k / 100.0;
    CHECK(std::abs(skew_info_channel(ket0(), bit_flip(q)) - (1.0 - q)) <= 1e-12);
  }
}

TEST_CASE("skew information is non-negative and scales quadratically") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 2 + seed % 4;
    const DensityState s = random_state(d, seed);
    const ComplexMatrix k = testing::random_matrix(d, d, seed + 500);
    const double base = skew_info_op(s, k);
    CHECK(base >= 0.0);
    const Complex c(1.7, -0.4);
    CHECK(skew_info_op(s, c * k) == doctest::Approx(std::norm(c) * base).epsilon(1e-10));
    // Shifting by a multiple of the identity leaves the commutator unchanged.
    CHECK(skew_info_op(s, k + Complex(0.3, 2.0) * ComplexMatrix::identity(d)) ==
          doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("vectorized and trace formulas agree") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 2 + seed % 4;
    const DensityState s = random_state(d, seed + 100);
    const ComplexMatrix k = testing::random_matrix(d, d, seed + 200);
    CHECK(std::abs(skew_info_op(s, k) - skew_by_trace(s, k)) <= 1e-10);
  }
}

TEST_CASE("channel skew information examples") {
  // |0><0| commutes with the diagonal phase damping operators; I/2 commutes with everything.
  CHECK(skew_info_channel(ket0(), phase_damping(0.5)) == 0.0);
  CHECK(skew_info_channel(state_from_bloch({0, 0, 0}), bit_flip(0.3)) <= 1e-15);
  // |+><+| commutes with σx, so bit flip is invisible there.
  CHECK(skew_info_channel(state_from_bloch({1, 0, 0}), bit_flip(0.3)) <= 1e-14);
  // ...but dephasing is not.
  CHECK(skew_info_channel(state_from_bloch({1, 0, 0}), phase_damping(0.5)) > 0.0);
}

TEST_CASE("corr_wy is Hermitian-symmetric and Cauchy-Schwarz bounded") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const DensityState s = random_state(d, seed);
    const ComplexMatrix a = testing::random_matrix(d, d, seed + 1);
    const ComplexMatrix b = testing::random_matrix(d, d, seed + 2);
    const Complex ab = corr_wy(s, a, b);
    const Complex ba = corr_wy(s, b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12);
    CHECK(std::norm(ab) <= skew_info_op(s, a) * skew_info_op(s, b) + 1e-12);
    CHECK(std::abs(corr_wy(s, a, a).real() - skew_info_op(s, a)) <= 1e-12);
  }
}

TEST_CASE("skew information of a channel is invariant under unitary mixing") {
  const DensityState s = paper_state(0.7);
  const KrausChannel pd = phase_damping(0.5);
  const InvarianceCheck same = channel_invariance_check(s, pd, ComplexMatrix::identity(2));
  CHECK(same.original == same.mixed);
  const InvarianceCheck swapped = channel_invariance_check(s, pd, pauli::x());
  CHECK(std::abs(swapped.original - swapped.mixed) <= 1e-15);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const std::size_t n = 1 + seed % 4;
    const DensityState rho = random_state(d, seed);
    const KrausChannel ch = random_channel(d, n, seed + 1);
    const InvarianceCheck c = channel_invariance_check(rho, ch, random_mix(n, seed + 2));
    CHECK(std::abs(c.original - c.mixed) <= 1e-9);
  }
}

TEST_CASE("invariance check rejects non-unitary mixes") {
  const DensityState s = paper_state(0.0);
  const auto code = [&](const ComplexMatrix& mix) {
    try {
      channel_invariance_check(s, phase_damping(0.5), mix);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code(2.0 * ComplexMatrix::identity(2)) == ErrorCode::NotUnitaryMix);
  CHECK(code(ComplexMatrix::identity(3)) == ErrorCode::NotUnitaryMix);
}

TEST_CASE("dimension mismatch between state and operator") {
  CHECK_THROWS_AS(skew_info_op(ket0(), ComplexMatrix::identity(3)), Error);
  CHECK_THROWS_AS(skew_info_channel(random_state(3, 1), bit_flip(0.2)), Error);
}

TEST_CASE("clamp_nonnegative") {
  CHECK(clamp_nonnegative(-1e-13) == 0.0);
  CHECK(clamp_nonnegative(-1e-6) == -1e-6);
  CHECK(clamp_nonnegative(0.25) == 0.25);
}
