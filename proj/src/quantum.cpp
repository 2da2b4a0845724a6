#include "wyur/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wyur/eigen.hpp"
#include "wyur/error.hpp"
#include "wyur/matrix_io.hpp"

namespace wyur {

namespace {

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Complex& z : g.entries()) {
    const double re = normal(engine);
    const double im = normal(engine);
    z = {re, im};
  }
  return g;
}

// Orthonormalizes the columns of g in place (modified Gram-Schmidt, re-orthogonalized).
void orthonormalize_columns(ComplexMatrix& g) {
  const std::size_t rows = g.rows();
  for (std::size_t c = 0; c < g.cols(); ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < rows; ++r) proj += std::conj(g(r, prev)) * g(r, c);
        for (std::size_t r = 0; r < rows; ++r) g(r, c) -= proj * g(r, prev);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "degenerate Gaussian sample");
    for (std::size_t r = 0; r < rows; ++r) g(r, c) /= norm;
  }
}

void require_probability(double q, const char* name) {
  if (!(q >= 0.0 && q < 1.0)) {
    std::ostringstream os;
    os << name << " parameter q = " << q << " outside [0, 1)";
    throw Error(ErrorCode::ParamOutOfRange, os.str());
  }
}

// ½(I + r·σ)
ComplexMatrix bloch_matrix(const BlochVector& r) {
  return ComplexMatrix::from_rows({
      {0.5 * (1.0 + r.rz), Complex(0.5 * r.rx, -0.5 * r.ry)},
      {Complex(0.5 * r.rx, 0.5 * r.ry), 0.5 * (1.0 - r.rz)},
  });
}

std::string with_param(const char* name, double q) {
  return std::string(name) + "(" + format_double(q) + ")";
}

}  // namespace

double BlochVector::norm() const noexcept { return std::sqrt(rx * rx + ry * ry + rz * rz); }

DensityState DensityState::from_matrix(ComplexMatrix rho, std::string label) {
  if (!rho.is_square() || rho.empty()) {
    throw Error(ErrorCode::InvalidState, "density matrix must be square and non-empty");
  }
  const double herm = hermiticity_residual(rho);
  if (herm > kStateTol) {
    std::ostringstream os;
    os << "density matrix not Hermitian (residual " << herm << ")";
    throw Error(ErrorCode::InvalidState, os.str());
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0)) > kStateTol) {
    std::ostringstream os;
    os << "density matrix trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag() << "i != 1";
    throw Error(ErrorCode::InvalidState, os.str());
  }
  ComplexMatrix root = psd_sqrt(rho, kSqrtClampTol);
  return DensityState(std::move(rho), std::move(root), std::move(label));
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, std::string label)
    : kraus_(std::move(kraus)), label_(std::move(label)) {
  if (kraus_.empty()) throw Error(ErrorCode::InvalidArgument, "channel needs at least one Kraus operator");
  const std::size_t d = kraus_.front().rows();
  for (const ComplexMatrix& k : kraus_) {
    if (!k.is_square() || k.rows() != d || d == 0) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must all be d×d with a common d");
    }
  }
  complete_ = completeness_residual() <= kCompletenessTol;
}

double KrausChannel::completeness_residual() const {
  ComplexMatrix sum(dim(), dim());
  for (const ComplexMatrix& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and channel dimensions differ");
  }
  ComplexMatrix out(dim(), dim());
  for (const ComplexMatrix& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

DensityState state_from_bloch(const BlochVector& r) {
  const double n = r.norm();
  if (!(n <= 1.0 + kBlochSlack)) {
    std::ostringstream os;
    os << "|r| = " << n << " exceeds 1";
    throw Error(ErrorCode::BlochNormExceeded, os.str());
  }
  std::ostringstream label;
  label << "bloch(" << format_double(r.rx) << "," << format_double(r.ry) << "," << format_double(r.rz) << ")";
  return DensityState::from_matrix(bloch_matrix(r), label.str());
}

BlochVector paper_bloch(double theta) {
  const double radius = std::sqrt(3.0) / 2.0;
  return {radius * std::cos(theta), radius * std::sin(theta), 0.25};
}

DensityState paper_state(double theta) {
  const BlochVector r = paper_bloch(theta);
  return DensityState::from_matrix(bloch_matrix(r), "paper(" + format_double(theta) + ")");
}

KrausChannel phase_damping(double q) {
  require_probability(q, "phase_damping");
  const Complex l1[] = {1.0, std::sqrt(1.0 - q)};
  const Complex l2[] = {0.0, std::sqrt(q)};
  return KrausChannel({ComplexMatrix::diagonal(l1), ComplexMatrix::diagonal(l2)},
                      with_param("phase_damping", q));
}

KrausChannel bit_flip(double q) {
  require_probability(q, "bit_flip");
  return KrausChannel({std::sqrt(q) * ComplexMatrix::identity(2), std::sqrt(1.0 - q) * pauli::x()},
                      with_param("bit_flip", q));
}

ComplexMatrix rotation_y_pi8() {
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  return ComplexMatrix::from_rows({{c, s}, {-s, c}});
}

ComplexMatrix rotation_z_pi8() {
  const Complex phase = std::polar(1.0, std::numbers::pi / 8.0);
  const Complex diag[] = {phase, std::conj(phase)};
  return ComplexMatrix::diagonal(diag);
}

std::pair<KrausChannel, KrausChannel> rotation_unitaries() {
  return {KrausChannel({rotation_y_pi8()}, "rot_y_pi8"), KrausChannel({rotation_z_pi8()}, "rot_z_pi8")};
}

DensityState random_state(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "random_state needs dim >= 2");
  const ComplexMatrix g = gaussian_matrix(dim, dim, seed);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // G·G† is Hermitian analytically; remove rounding asymmetry.
  for (std::size_t r = 0; r < dim; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return DensityState::from_matrix(std::move(rho), "random(" + std::to_string(dim) + ",seed=" +
                                                       std::to_string(seed) + ")");
}

KrausChannel random_channel(std::size_t dim, std::size_t n_kraus, std::uint64_t seed) {
  if (dim < 2 || n_kraus < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_channel needs dim >= 2 and n_kraus >= 1");
  }
  ComplexMatrix iso = gaussian_matrix(dim * n_kraus, dim, seed);
  orthonormalize_columns(iso);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t i = 0; i < n_kraus; ++i) {
    ComplexMatrix k(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) k(r, c) = iso(i * dim + r, c);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus), "random(" + std::to_string(dim) + "," + std::to_string(n_kraus) +
                                            ",seed=" + std::to_string(seed) + ")");
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  ComplexMatrix u = gaussian_matrix(n, n, seed);
  orthonormalize_columns(u);
  return u;
}

std::pair<KrausChannel, KrausChannel> pad_kraus(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channels act on different dimensions (" +
                                                  std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
  const std::size_t n = std::max(a.size(), b.size());
  auto padded = [&](const KrausChannel& ch) {
    if (ch.size() == n) return ch;
    std::vector<ComplexMatrix> ops = ch.kraus();
    ops.resize(n, ComplexMatrix(ch.dim(), ch.dim()));
    return KrausChannel(std::move(ops), ch.label());
  };
  return {padded(a), padded(b)};
}

}  // namespace wyur
