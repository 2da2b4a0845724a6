#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wyur/matrix.hpp"

namespace wyur {

inline constexpr double kStateTol = 1e-9;
inline constexpr double kCompletenessTol = 1e-8;
inline constexpr double kBlochSlack = 1e-12;

struct BlochVector {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  double norm() const noexcept;
};

/// Density matrix with its cached principal square root.
///
/// Construction validates Hermiticity (1e-9), unit trace (1e-9) and
/// positivity (smallest eigenvalue ≥ -1e-10); the matrix is stored as given,
/// without renormalization.
class DensityState {
 public:
  /// Throws InvalidState (or NegativeEigenvalue / NotHermitian) on invalid input.
  static DensityState from_matrix(ComplexMatrix rho, std::string label = {});

  std::size_t dim() const noexcept { return rho_.rows(); }
  const ComplexMatrix& rho() const noexcept { return rho_; }
  const ComplexMatrix& sqrt_rho() const noexcept { return sqrt_rho_; }
  const std::string& label() const noexcept { return label_; }

 private:
  DensityState(ComplexMatrix rho, ComplexMatrix sqrt_rho, std::string label)
      : rho_(std::move(rho)), sqrt_rho_(std::move(sqrt_rho)), label_(std::move(label)) {}

  ComplexMatrix rho_;
  ComplexMatrix sqrt_rho_;
  std::string label_;
};

/// Ordered Kraus list. Order is significant for the bounds and is never
/// canonicalized. Completeness (Σ K†K = I within 1e-8) is recorded, not enforced.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus, std::string label = {});

  std::size_t dim() const noexcept { return kraus_.front().rows(); }
  std::size_t size() const noexcept { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const ComplexMatrix& operator[](std::size_t i) const { return kraus_[i]; }
  const std::string& label() const noexcept { return label_; }
  bool complete() const noexcept { return complete_; }

  /// ‖Σ K†K - I‖_max.
  double completeness_residual() const;

  /// Σ K ρ K†.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
  bool complete_ = false;
};

/// ½(I + rx·σx + ry·σy + rz·σz). Throws BlochNormExceeded if |r| > 1 + 1e-12.
DensityState state_from_bloch(const BlochVector& r);

/// Bloch vector (√3/2·cosθ, √3/2·sinθ, 1/4) of the worked qubit example.
BlochVector paper_bloch(double theta);
DensityState paper_state(double theta);

/// L1 = |0><0| + √(1-q)|1><1|, L2 = √q|1><1|. Requires 0 ≤ q < 1.
KrausChannel phase_damping(double q);
/// K1 = √q·I, K2 = √(1-q)·σx. Requires 0 ≤ q < 1.
KrausChannel bit_flip(double q);

ComplexMatrix rotation_y_pi8();  // e^{iπσy/8}
ComplexMatrix rotation_z_pi8();  // e^{iπσz/8}
/// Single-Kraus channels for e^{iπσy/8} and e^{iπσz/8}.
std::pair<KrausChannel, KrausChannel> rotation_unitaries();

/// G·G†/tr(G·G†) for a seeded complex Gaussian G (std::mt19937_64 +
/// std::normal_distribution; real part then imaginary part, row-major).
DensityState random_state(std::size_t dim, std::uint64_t seed);

/// Kraus operators sliced from a seeded random isometry C^dim -> C^{dim·n}
/// (modified Gram-Schmidt, two passes, on a complex Gaussian matrix).
KrausChannel random_channel(std::size_t dim, std::size_t n_kraus, std::uint64_t seed);

/// Seeded random unitary of size n (n_kraus = 1 isometry).
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Zero-pads the shorter Kraus list so both have max(n_a, n_b) operators.
std::pair<KrausChannel, KrausChannel> pad_kraus(const KrausChannel& a, const KrausChannel& b);

}  // namespace wyur
