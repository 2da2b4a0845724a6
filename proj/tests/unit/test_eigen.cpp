#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wyur/eigen.hpp"
#include "wyur/error.hpp"

using namespace wyur;

namespace {

void check_decomposition(const ComplexMatrix& m, const EigenDecomposition& eig) {
  const std::size_t n = m.rows();
  const ComplexMatrix& v = eig.eigenvectors;
  CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)) <= 1e-10);
  ComplexMatrix lambda(n, n);
  for (std::size_t k = 0; k < n; ++k) lambda(k, k) = eig.eigenvalues[k];
  CHECK(max_abs_diff(v * lambda * v.adjoint(), m) <= 1e-10);
  for (std::size_t k = 1; k < n; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
}

}  // namespace

TEST_CASE("identity spectrum") {
  const EigenDecomposition eig = hermitian_eig(ComplexMatrix::identity(2));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("sigma_z is already diagonal") {
  const EigenDecomposition eig = hermitian_eig(pauli::z());
  CHECK(eig.eigenvalues[0] == -1.0);
  CHECK(eig.eigenvalues[1] == 1.0);
  check_decomposition(pauli::z(), eig);
}

TEST_CASE("sigma_x eigenvectors are (1, ∓1)/√2 up to phase") {
  const EigenDecomposition eig = hermitian_eig(pauli::x());
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  const double h = 1.0 / std::sqrt(2.0);
  // |<expected|v>| = 1 fixes the vector up to a phase.
  const Complex minus = std::conj(Complex(h)) * eig.eigenvectors(0, 0) - h * eig.eigenvectors(1, 0);
  const Complex plus = h * eig.eigenvectors(0, 1) + h * eig.eigenvectors(1, 1);
  CHECK(std::abs(minus) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(plus) == doctest::Approx(1.0).epsilon(1e-12));
  check_decomposition(pauli::x(), eig);
}

TEST_CASE("sigma_y has complex eigenvectors") {
  check_decomposition(pauli::y(), hermitian_eig(pauli::y()));
}

TEST_CASE("random Hermitian matrices up to d = 8") {
  for (std::size_t d = 1; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ComplexMatrix h = testing::random_hermitian(d, seed * 31 + d);
      check_decomposition(h, hermitian_eig(h));
    }
  }
}

TEST_CASE("degenerate spectra") {
  // U diag(2, 2, -1) U† with a dense unitary.
  const ComplexMatrix u = [] {
    const EigenDecomposition e = hermitian_eig(testing::random_hermitian(3, 99));
    return e.eigenvectors;
  }();
  const Complex diag[] = {2.0, 2.0, -1.0};
  const ComplexMatrix m = u * ComplexMatrix::diagonal(diag) * u.adjoint();
  const EigenDecomposition eig = hermitian_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));
  check_decomposition(m, eig);
}

TEST_CASE("zero matrix") {
  const EigenDecomposition eig = hermitian_eig(ComplexMatrix(3, 3));
  for (double lambda : eig.eigenvalues) CHECK(lambda == 0.0);
}

TEST_CASE("deterministic for identical input") {
  const ComplexMatrix h = testing::random_hermitian(5, 7);
  const EigenDecomposition a = hermitian_eig(h);
  const EigenDecomposition b = hermitian_eig(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("non-Hermitian input is rejected") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  try {
    hermitian_eig(m);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("psd_sqrt examples") {
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) <= 1e-15);

  const Complex d[] = {0.25, 0.75};
  const Complex r[] = {0.5, std::sqrt(0.75)};
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(d)), ComplexMatrix::diagonal(r)) <= 1e-15);

  const ComplexMatrix projector = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  CHECK(max_abs_diff(psd_sqrt(projector), projector) <= 1e-15);
}

TEST_CASE("psd_sqrt squares back for random PSD matrices") {
  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const ComplexMatrix a = testing::random_matrix(d, d, seed + 1000 * d);
      const ComplexMatrix m = a * a.adjoint();
      const ComplexMatrix root = psd_sqrt(m);
      CHECK(hermiticity_residual(root) == 0.0);
      CHECK(max_abs_diff(root * root, m) <= 1e-9);
      for (double lambda : hermitian_eig(root).eigenvalues) CHECK(lambda >= -1e-12);
    }
  }
}

TEST_CASE("psd_sqrt clamps tiny negative eigenvalues and rejects large ones") {
  const Complex tiny[] = {1.0, -5e-11};
  const ComplexMatrix clamped = psd_sqrt(ComplexMatrix::diagonal(tiny));
  CHECK(clamped(1, 1) == Complex{});
  CHECK(clamped(0, 0) == Complex(1.0));

  const Complex bad[] = {1.0, -1e-6};
  try {
    psd_sqrt(ComplexMatrix::diagonal(bad));
    FAIL("expected NegativeEigenvalue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeEigenvalue);
  }
}
