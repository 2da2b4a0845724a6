#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "wyur/eigen.hpp"
#include "wyur/error.hpp"
#include "wyur/quantum.hpp"

using namespace wyur;

namespace {

void check_valid_state(const DensityState& s) {
  CHECK(hermiticity_residual(s.rho()) <= 1e-9);
  CHECK(std::abs(s.rho().trace() - Complex(1.0)) <= 1e-9);
  CHECK(hermitian_eig(s.rho()).eigenvalues.front() >= -1e-10);
  CHECK(max_abs_diff(s.sqrt_rho() * s.sqrt_rho(), s.rho()) <= 1e-9);
  CHECK(hermiticity_residual(s.sqrt_rho()) <= 1e-12);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Bloch states") {
  const DensityState mixed = state_from_bloch({0, 0, 0});
  CHECK(max_abs_diff(mixed.rho(), 0.5 * ComplexMatrix::identity(2)) == 0.0);
  check_valid_state(mixed);

  const DensityState north = state_from_bloch({0, 0, 1});
  CHECK(max_abs_diff(north.rho(), ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})) == 0.0);
  check_valid_state(north);

  const DensityState example = state_from_bloch({std::sqrt(3.0) / 2.0, 0.0, 0.25});
  CHECK(example.rho()(0, 0).real() == doctest::Approx(0.625));
  CHECK(example.rho()(0, 1).real() == doctest::Approx(0.4330127018922193));
  CHECK(example.rho()(1, 0).real() == doctest::Approx(0.4330127018922193));
  CHECK(example.rho()(1, 1).real() == doctest::Approx(0.375));

  CHECK(code_of([] { state_from_bloch({1.0, 0.1, 0.0}); }) == ErrorCode::BlochNormExceeded);
  CHECK_NOTHROW(state_from_bloch({1.0 + 1e-13, 0.0, 0.0}));
}

TEST_CASE("paper example Bloch vectors") {
  const BlochVector r0 = paper_bloch(0.0);
  CHECK(r0.rx == doctest::Approx(0.8660254037844386));
  CHECK(r0.ry == 0.0);
  CHECK(r0.rz == 0.25);
  const BlochVector r90 = paper_bloch(std::numbers::pi / 2);
  CHECK(std::abs(r90.rx) < 1e-16);
  CHECK(r90.ry == doctest::Approx(0.8660254037844386));
  const BlochVector r45 = paper_bloch(std::numbers::pi / 4);
  CHECK(r45.rx == doctest::Approx(0.6123724356957945));
  CHECK(r45.ry == doctest::Approx(0.6123724356957945));
}

TEST_CASE("paper_state spectrum does not depend on theta") {
  const double lo = (1.0 - std::sqrt(13.0) / 4.0) / 2.0;
  const double hi = (1.0 + std::sqrt(13.0) / 4.0) / 2.0;
  for (int k = 0; k < 64; ++k) {
    const DensityState s = paper_state(2.0 * std::numbers::pi * k / 64.0);
    check_valid_state(s);
    const auto ev = hermitian_eig(s.rho()).eigenvalues;
    CHECK(ev[0] == doctest::Approx(lo).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(hi).epsilon(1e-13));
  }
}

TEST_CASE("DensityState validation") {
  CHECK(code_of([] { DensityState::from_matrix(ComplexMatrix::identity(2)); }) == ErrorCode::InvalidState);
  CHECK(code_of([] {
          DensityState::from_matrix(ComplexMatrix::from_rows({{0.5, 0.5}, {0.0, 0.5}}));
        }) == ErrorCode::InvalidState);
  const Complex neg[] = {1.2, -0.2};
  CHECK(code_of([&] { DensityState::from_matrix(ComplexMatrix::diagonal(neg)); }) == ErrorCode::NegativeEigenvalue);
}

TEST_CASE("phase damping") {
  const KrausChannel none = phase_damping(0.0);
  CHECK(max_abs_diff(none[0], ComplexMatrix::identity(2)) == 0.0);
  CHECK(none[1].max_abs() == 0.0);

  const KrausChannel half = phase_damping(0.5);
  REQUIRE(half.size() == 2);
  const double h = std::sqrt(0.5);
  const Complex l1[] = {1.0, h};
  const Complex l2[] = {0.0, h};
  CHECK(max_abs_diff(half[0], ComplexMatrix::diagonal(l1)) == 0.0);
  CHECK(max_abs_diff(half[1], ComplexMatrix::diagonal(l2)) == 0.0);
  CHECK(phase_damping(0.3).completeness_residual() <= 1e-15);

  CHECK(code_of([] { phase_damping(1.0); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { phase_damping(-0.1); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("bit flip") {
  const KrausChannel half = bit_flip(0.5);
  const double h = std::sqrt(0.5);
  CHECK(max_abs_diff(half[0], h * ComplexMatrix::identity(2)) == 0.0);
  CHECK(max_abs_diff(half[1], h * pauli::x()) == 0.0);

  const KrausChannel zero = bit_flip(0.0);
  CHECK(zero[0].max_abs() == 0.0);
  CHECK(max_abs_diff(zero[1], pauli::x()) == 0.0);
  CHECK(bit_flip(0.7).completeness_residual() <= 1e-15);
  CHECK(code_of([] { bit_flip(1.5); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("builtin channels are complete on a 101-point grid") {
  for (int k = 0; k <= 100; ++k) {
    const double q = 0.99 * k / 100.0;
    CHECK(phase_damping(q).completeness_residual() <= 1e-12);
    CHECK(bit_flip(q).completeness_residual() <= 1e-12);
    CHECK(phase_damping(q).complete());
    CHECK(bit_flip(q).complete());
  }
}

TEST_CASE("rotation unitaries") {
  const auto [u, v] = rotation_unitaries();
  REQUIRE(u.size() == 1);
  REQUIRE(v.size() == 1);
  CHECK(u[0](0, 0).real() == doctest::Approx(0.9238795325112867));
  CHECK(u[0](0, 1).real() == doctest::Approx(0.3826834323650898));
  CHECK(u[0](1, 0).real() == doctest::Approx(-0.3826834323650898));
  CHECK(v[0](0, 0) == Complex(std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8)));
  CHECK(v[0](1, 1).imag() == doctest::Approx(-0.3826834323650898));
  CHECK(unitarity_residual(u[0]) <= 1e-12);
  CHECK(unitarity_residual(v[0]) <= 1e-12);
  CHECK(u.label() == "rot_y_pi8");
  CHECK(v.label() == "rot_z_pi8");
}

TEST_CASE("random states") {
  CHECK(random_state(3, 11).rho() == random_state(3, 11).rho());
  CHECK_FALSE(random_state(3, 11).rho() == random_state(3, 12).rho());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityState s = random_state(2 + seed % 4, seed);
    CHECK(std::abs(s.rho().trace() - Complex(1.0)) <= 1e-12);
    CHECK(hermitian_eig(s.rho()).eigenvalues.front() >= 0.0);
  }
  CHECK_THROWS_AS(random_state(1, 0), Error);
}

TEST_CASE("random channels") {
  const KrausChannel unitary = random_channel(3, 1, 5);
  CHECK(unitarity_residual(unitary[0]) <= 1e-10);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const KrausChannel ch = random_channel(2 + seed % 4, 1 + seed % 4, seed);
    CHECK(ch.completeness_residual() <= 1e-8);
    CHECK(ch.complete());
  }
  const KrausChannel a = random_channel(4, 3, 9);
  const KrausChannel b = random_channel(4, 3, 9);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("pad_kraus") {
  const auto [a, b] = pad_kraus(phase_damping(0.2), bit_flip(0.4));
  CHECK(a.size() == 2);
  CHECK(b.size() == 2);
  CHECK(a[1] == phase_damping(0.2)[1]);

  const KrausChannel single = rotation_unitaries().first;
  const auto [pa, pb] = pad_kraus(single, bit_flip(0.4));
  REQUIRE(pa.size() == 2);
  CHECK(pa[1].max_abs() == 0.0);
  CHECK(pa.label() == single.label());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KrausChannel small = random_channel(3, 1, seed);
    const KrausChannel big = random_channel(3, 3, seed + 1);
    const auto [ps, pbig] = pad_kraus(small, big);
    const DensityState rho = random_state(3, seed + 2);
    CHECK(ps.size() == 3);
    CHECK(max_abs_diff(ps.apply(rho.rho()), small.apply(rho.rho())) <= 1e-12);
    CHECK(max_abs_diff(pbig.apply(rho.rho()), big.apply(rho.rho())) <= 1e-12);
  }

  CHECK(code_of([] { pad_kraus(random_channel(2, 1, 0), random_channel(3, 1, 0)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("incomplete operator lists are flagged, not rejected") {
  const KrausChannel half({0.5 * ComplexMatrix::identity(2)}, "half");
  CHECK_FALSE(half.complete());
  CHECK(half.completeness_residual() == doctest::Approx(0.75));
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}), Error);
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), Error);
}
