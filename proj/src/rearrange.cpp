#include "wyur/rearrange.hpp"

#include <algorithm>
#include <numeric>

#include "wyur/error.hpp"

namespace wyur {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t target : mapping_) {
    if (target >= mapping_.size() || seen[target]) {
      throw Error(ErrorCode::InvalidPermutation, "mapping is not a bijection");
    }
    seen[target] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < mapping_.size(); ++k)
    if (mapping_[k] != k) return false;
  return true;
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  do {
    visit(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
}

Permutation descending_order(std::span<const Complex> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(values[i]) > std::abs(values[j]);
  });
  return Permutation(std::move(order));
}

VectorizedMatrix sort_abs_descending(const VectorizedMatrix& v) {
  const Permutation order = descending_order(v.entries);
  VectorizedMatrix out{v.rows, v.cols, {}};
  out.entries.reserve(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) out.entries.push_back(v.entries[order[k]]);
  return out;
}

double abs_pair_sum(std::span<const Complex> a, std::span<const Complex> b, const Permutation& perm) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "abs_pair_sum on vectors of different length");
  }
  if (perm.size() != a.size()) {
    throw Error(ErrorCode::InvalidPermutation, "permutation length differs from vector length");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k]) * std::abs(b[perm[k]]);
  return sum;
}

double abs_pair_sum(const VectorizedMatrix& a, const VectorizedMatrix& b, const Permutation& perm) {
  return abs_pair_sum(std::span<const Complex>(a.entries), std::span<const Complex>(b.entries), perm);
}

}  // namespace wyur
