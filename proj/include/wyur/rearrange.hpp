#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wyur/matrix.hpp"

namespace wyur {

/// Bijection on {0, …, n-1}; maps position k to mapping[k].
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `mapping` is a bijection.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator[](std::size_t k) const { return mapping_[k]; }
  std::span<const std::size_t> mapping() const noexcept { return mapping_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// Calls `visit` once for every permutation of {0, …, n-1} in lexicographic
/// order, starting with the identity.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

/// Indices ordering entries by non-increasing modulus; ties keep original order.
Permutation descending_order(std::span<const Complex> values);

/// Entries rearranged by non-increasing modulus (stable on ties).
VectorizedMatrix sort_abs_descending(const VectorizedMatrix& v);

/// Σ_k |a_k|·|b_{perm(k)}|.
double abs_pair_sum(std::span<const Complex> a, std::span<const Complex> b, const Permutation& perm);
double abs_pair_sum(const VectorizedMatrix& a, const VectorizedMatrix& b, const Permutation& perm);

}  // namespace wyur
