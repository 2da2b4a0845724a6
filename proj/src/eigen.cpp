#include "wyur/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wyur/error.hpp"

namespace wyur {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRatio = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary W acting on columns p,q:
//   W = [[c, s·e^{iφ}], [-s·e^{-iφ}, c]],  a(p,q) = |a(p,q)|·e^{iφ}.
// A <- W†AW, V <- VW.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex s_phase = s * phase;             // W(p,q)
  const Complex s_phase_conj = s * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s_phase_conj * akq;
    a(k, q) = s_phase * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s_phase * aqk;
    a(q, k) = s_phase_conj * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s_phase_conj * vkq;
    v(k, q) = s_phase * vkp + c * vkq;
  }
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix scaled = v;
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c) scaled(r, c) *= eig.eigenvalues[c];
  return scaled * v.adjoint();
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "eigendecomposition needs a non-empty square matrix");
  }
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "‖M - M†‖_max = " << herm;
    throw Error(ErrorCode::NotHermitian, os.str());
  }

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kOffDiagonalRatio * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition eig{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    eig.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) eig.eigenvectors(r, k) = v(r, order[k]);
  }

  const double residual = max_abs_diff(reconstruct(eig), m);
  if (residual > tol * std::max(1.0, m.max_abs())) {
    std::ostringstream os;
    os << "reconstruction residual " << residual << " exceeds tolerance";
    throw Error(ErrorCode::NoConvergence, os.str());
  }
  return eig;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double clamp_tol) {
  EigenDecomposition eig = hermitian_eig(m);
  for (double& lambda : eig.eigenvalues) {
    if (lambda < -clamp_tol) {
      std::ostringstream os;
      os << "eigenvalue " << lambda << " below -" << clamp_tol;
      throw Error(ErrorCode::NegativeEigenvalue, os.str());
    }
    lambda = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix root = reconstruct(eig);
  // Exact Hermitian symmetry for downstream commutators.
  for (std::size_t r = 0; r < root.rows(); ++r) {
    root(r, r) = root(r, r).real();
    for (std::size_t c = r + 1; c < root.cols(); ++c) {
      const Complex avg = 0.5 * (root(r, c) + std::conj(root(c, r)));
      root(r, c) = avg;
      root(c, r) = std::conj(avg);
    }
  }
  return root;
}

}  // namespace wyur
