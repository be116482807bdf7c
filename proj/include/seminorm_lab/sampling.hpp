#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "seminorm_lab/rational.hpp"
#include "seminorm_lab/sparse_seq.hpp"
#include "seminorm_lab/subspace.hpp"

namespace seminorm_lab {

/**
 * Deterministic sampler. Draws come from mt19937_64 through a rejection
 * reducer, so a seed pins the exact stream on every platform; none of the
 * distribution classes from <random> (whose output is implementation
 * defined) are involved.
 */
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("int_in: empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Nonzero p/q with |p| <= 50 and 1 <= q <= 10, both uniform.
inline Rational random_coeff(SampleRng& rng) {
  for (;;) {
    const std::int64_t p = rng.int_in(-50, 50);
    if (p == 0) continue;
    const std::int64_t q = rng.int_in(1, 10);
    return rat(p, q);
  }
}

/**
 * Random finitely supported sequence: support size uniform in
 * [min_size, max_size], support indices drawn without replacement from
 * 1..max_index, coefficients from random_coeff.
 */
inline SparseSeq random_seq(SampleRng& rng, Index max_index = 20, int min_size = 0,
                            int max_size = 6) {
  if (max_index < 1 || min_size < 0 || max_size < min_size ||
      static_cast<Index>(max_size) > max_index)
    throw std::invalid_argument("random_seq: bad support parameters");
  const int size = static_cast<int>(rng.int_in(min_size, max_size));
  std::set<Index> support;
  while (static_cast<int>(support.size()) < size)
    support.insert(static_cast<Index>(rng.int_in(1, max_index)));
  std::vector<std::pair<Index, Rational>> entries;
  entries.reserve(support.size());
  for (Index i : support) entries.emplace_back(i, random_coeff(rng));
  return SparseSeq::from_pairs(entries);
}

/**
 * Random subspace: dimension uniform in [1, max_dim]; candidate vectors with
 * support of size 1..4 inside 1..max_index are drawn until they extend an
 * independent set of the target dimension.
 */
inline Subspace random_subspace(SampleRng& rng, int max_dim = 3, Index max_index = 8) {
  if (max_dim < 1 || static_cast<Index>(max_dim) > max_index)
    throw std::invalid_argument("random_subspace: bad dimension bound");
  const int dim = static_cast<int>(rng.int_in(1, max_dim));
  std::vector<SparseSeq> basis;
  while (static_cast<int>(basis.size()) < dim) {
    SparseSeq cand = random_seq(rng, max_index, 1, std::min<int>(4, static_cast<int>(max_index)));
    if (cand.is_zero()) continue;
    basis.push_back(cand);
    try {
      Subspace probe(basis);
    } catch (const std::invalid_argument&) {
      basis.pop_back();  // dependent draw; try again
    }
  }
  return Subspace(std::move(basis));
}

}  // namespace seminorm_lab
