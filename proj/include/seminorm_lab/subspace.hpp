#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "seminorm_lab/rational.hpp"
#include "seminorm_lab/sparse_seq.hpp"

namespace seminorm_lab {

namespace subspace_detail {

// Reduced row echelon form in place; returns the pivot column of each
// produced row, in order.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace subspace_detail

/**
 * A finite-dimensional subspace spanned by an explicit, linearly independent
 * basis of finitely supported sequences. Construction rejects empty bases,
 * zero vectors, and dependent sets.
 */
class Subspace {
 public:
  explicit Subspace(std::vector<SparseSeq> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw std::invalid_argument("subspace: basis must be nonempty");
    std::set<Index> sup;
    for (const SparseSeq& v : basis_) {
      if (v.is_zero()) throw std::invalid_argument("subspace: basis contains the zero vector");
      for (const auto& [i, c] : v.entries()) sup.insert(i);
    }
    support_.assign(sup.begin(), sup.end());
    std::vector<std::vector<Rational>> m = coefficient_matrix();
    auto pivots = subspace_detail::rref(m);
    if (pivots.size() != basis_.size())
      throw std::invalid_argument("subspace: basis is linearly dependent");
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseSeq>& basis() const { return basis_; }

  /// Union of the basis vectors' supports, ascending.
  const std::vector<Index>& ambient_support() const { return support_; }

  /// Coefficients expressing x in the basis, or nullopt when x is outside
  /// the span. Exact Gaussian elimination; unique because the basis is
  /// independent.
  std::optional<std::vector<Rational>> membership(const SparseSeq& x) const {
    for (const auto& [i, c] : x.entries())
      if (!std::binary_search(support_.begin(), support_.end(), i)) return std::nullopt;
    std::vector<std::vector<Rational>> m = coefficient_matrix();
    for (std::size_t r = 0; r < support_.size(); ++r) m[r].push_back(x.coord(support_[r]));
    auto pivots = subspace_detail::rref(m);
    const int dim_col = static_cast<int>(basis_.size());
    std::vector<Rational> coeffs(basis_.size(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == dim_col) return std::nullopt;  // inconsistent system
      coeffs[pivots[r]] = m[r][dim_col];
    }
    return coeffs;
  }

  bool contains(const SparseSeq& x) const { return membership(x).has_value(); }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  std::vector<SparseSeq> basis_;
  std::vector<Index> support_;

  // |support| x dim matrix whose columns are the basis vectors restricted to
  // the joint support rows.
  std::vector<std::vector<Rational>> coefficient_matrix() const {
    std::vector<std::vector<Rational>> m(support_.size(),
                                         std::vector<Rational>(basis_.size(), Rational(0)));
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (const auto& [i, c] : basis_[j].entries()) {
        const auto it = std::lower_bound(support_.begin(), support_.end(), i);
        m[static_cast<std::size_t>(it - support_.begin())][j] = c;
      }
    return m;
  }
};

}  // namespace seminorm_lab
