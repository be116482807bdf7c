#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seminorm_lab/rational.hpp"

namespace seminorm_lab {

/**
 * A finitely supported sequence of exact rationals, indexed from 1.
 *
 * Canonical sparse form: zero values are never stored, so two sequences are
 * equal iff their entry maps are. Values are immutable after construction
 * and every operation returns a fresh sequence.
 */
class SparseSeq {
 public:
  using EntryMap = std::map<Index, Rational>;

  SparseSeq() = default;

  /// Builds from (index, value) pairs. Duplicate indices and indices < 1 are
  /// rejected; zero values are dropped.
  static SparseSeq from_pairs(const std::vector<std::pair<Index, Rational>>& pairs) {
    SparseSeq s;
    for (const auto& [idx, value] : pairs) {
      if (idx < 1) throw std::invalid_argument("sequence index must be >= 1");
      if (s.entries_.count(idx)) throw std::invalid_argument("duplicate sequence index");
      if (value != 0) s.entries_.emplace(idx, value);
    }
    return s;
  }

  static SparseSeq from_pairs(std::initializer_list<std::pair<Index, Rational>> pairs) {
    return from_pairs(std::vector<std::pair<Index, Rational>>(pairs));
  }

  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Largest index with a nonzero value; 0 for the zero sequence.
  Index max_support_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  std::vector<Index> support() const {
    std::vector<Index> idx;
    idx.reserve(entries_.size());
    for (const auto& [i, v] : entries_) idx.push_back(i);
    return idx;
  }

  Rational coord(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  friend SparseSeq operator+(const SparseSeq& a, const SparseSeq& b) {
    SparseSeq out = a;
    for (const auto& [i, v] : b.entries_) {
      auto [it, inserted] = out.entries_.emplace(i, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) out.entries_.erase(it);
      }
    }
    return out;
  }

  friend SparseSeq operator-(const SparseSeq& a, const SparseSeq& b) { return a + (-b); }

  friend SparseSeq operator-(const SparseSeq& a) {
    SparseSeq out;
    for (const auto& [i, v] : a.entries_) out.entries_.emplace(i, -v);
    return out;
  }

  friend SparseSeq operator*(const Rational& a, const SparseSeq& x) {
    SparseSeq out;
    if (a == 0) return out;
    for (const auto& [i, v] : x.entries_) out.entries_.emplace(i, a * v);
    return out;
  }

  friend bool operator==(const SparseSeq& a, const SparseSeq& b) {
    return a.entries_ == b.entries_;
  }

 private:
  EntryMap entries_;
};

inline SparseSeq make_seq(const std::vector<std::pair<Index, Rational>>& pairs) {
  return SparseSeq::from_pairs(pairs);
}

inline SparseSeq add(const SparseSeq& x, const SparseSeq& y) { return x + y; }
inline SparseSeq scale(const Rational& a, const SparseSeq& x) { return a * x; }
inline Rational coord(const SparseSeq& x, Index i) { return x.coord(i); }

/// e_n: the canonical basis vector with 1 at position n.
inline SparseSeq basis_vector(Index n) {
  if (n < 1) throw std::invalid_argument("basis_vector: index must be >= 1");
  return SparseSeq::from_pairs({{n, Rational(1)}});
}

/// (x_1, x_2, ...) -> (x_2, x_3, ...); the first entry is discarded.
inline SparseSeq shift_left(const SparseSeq& x) {
  std::vector<std::pair<Index, Rational>> pairs;
  for (const auto& [i, v] : x.entries())
    if (i >= 2) pairs.emplace_back(i - 1, v);
  return SparseSeq::from_pairs(pairs);
}

/// (x_1, x_2, ...) -> (0, x_1, x_2, ...).
inline SparseSeq shift_right(const SparseSeq& x) {
  std::vector<std::pair<Index, Rational>> pairs;
  for (const auto& [i, v] : x.entries()) pairs.emplace_back(i + 1, v);
  return SparseSeq::from_pairs(pairs);
}

/// (x_1, x_2, ...) -> (x_1, 0, 0, ...).
inline SparseSeq truncate_first(const SparseSeq& x) {
  const Rational first = x.coord(1);
  if (first == 0) return SparseSeq();
  return SparseSeq::from_pairs({{1, first}});
}

/// Human-readable basis-combination form, e.g. "e1 + 2*e3 - 1/2*e5"; "0" when empty.
inline std::string to_term_string(const SparseSeq& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, v] : x.entries()) {
    const Rational a = abs_val(v);
    if (first) {
      if (v < 0) out += "-";
      first = false;
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (a != 1) {
      out += format_rational(a);
      out += '*';
    }
    out += 'e';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace seminorm_lab
