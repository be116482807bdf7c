#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "seminorm_lab/index_rule.hpp"
#include "seminorm_lab/sparse_seq.hpp"

namespace seminorm_lab {

/**
 * A finitely described linear operator on sparse sequences. Every member of
 * the algebra maps finitely supported sequences to finitely supported
 * sequences by construction, and application is exactly linear.
 */
class LinearMap {
 public:
  enum class Kind {
    identity,
    shift_left,      // (x1, x2, ...) -> (x2, x3, ...)
    shift_right,     // (x1, x2, ...) -> (0, x1, x2, ...)
    truncate_first,  // (x1, x2, ...) -> (x1, 0, 0, ...)
    diagonal,        // x_i -> rule(i) * x_i
    finite_table,    // e_i -> images[i] when present, e_i otherwise
    compose,         // outer(inner(x))
    sum              // left(x) + right(x)
  };

  static LinearMap identity() { return LinearMap(Kind::identity); }
  static LinearMap shift_left() { return LinearMap(Kind::shift_left); }
  static LinearMap shift_right() { return LinearMap(Kind::shift_right); }
  static LinearMap truncate_first() { return LinearMap(Kind::truncate_first); }

  static LinearMap diagonal(IndexRule rule) {
    LinearMap m(Kind::diagonal);
    m.rule_ = std::make_shared<IndexRule>(std::move(rule));
    return m;
  }

  static LinearMap finite_table(std::map<Index, SparseSeq> images) {
    for (const auto& [i, img] : images)
      if (i < 1) throw std::invalid_argument("finite_table: index must be >= 1");
    LinearMap m(Kind::finite_table);
    m.images_ = std::make_shared<const std::map<Index, SparseSeq>>(std::move(images));
    return m;
  }

  static LinearMap compose(LinearMap outer, LinearMap inner) {
    LinearMap m(Kind::compose);
    m.a_ = std::make_shared<const LinearMap>(std::move(outer));
    m.b_ = std::make_shared<const LinearMap>(std::move(inner));
    return m;
  }

  static LinearMap sum(LinearMap left, LinearMap right) {
    LinearMap m(Kind::sum);
    m.a_ = std::make_shared<const LinearMap>(std::move(left));
    m.b_ = std::make_shared<const LinearMap>(std::move(right));
    return m;
  }

  /// x -> R(f(L(x))) + T(x): applies f to the tail behind a right shift and
  /// keeps the first entry via the truncation. The first coordinate of the
  /// image equals the first coordinate of the argument for every linear f.
  static LinearMap first_entry_preserving(LinearMap f) {
    return sum(compose(shift_right(), compose(std::move(f), shift_left())), truncate_first());
  }

  Kind kind() const { return kind_; }

  const IndexRule& rule() const { return *rule_; }
  const std::map<Index, SparseSeq>& images() const { return *images_; }
  const LinearMap& outer() const { return *a_; }
  const LinearMap& inner() const { return *b_; }
  const LinearMap& left() const { return *a_; }
  const LinearMap& right() const { return *b_; }

  SparseSeq apply(const SparseSeq& x) const {
    switch (kind_) {
      case Kind::identity:
        return x;
      case Kind::shift_left:
        return seminorm_lab::shift_left(x);
      case Kind::shift_right:
        return seminorm_lab::shift_right(x);
      case Kind::truncate_first:
        return seminorm_lab::truncate_first(x);
      case Kind::diagonal: {
        std::vector<std::pair<Index, Rational>> pairs;
        for (const auto& [i, v] : x.entries()) pairs.emplace_back(i, rule_->at(i) * v);
        return SparseSeq::from_pairs(pairs);
      }
      case Kind::finite_table: {
        SparseSeq out;
        for (const auto& [i, v] : x.entries()) {
          auto it = images_->find(i);
          out = out + (it == images_->end() ? v * basis_vector(i) : v * it->second);
        }
        return out;
      }
      case Kind::compose:
        return a_->apply(b_->apply(x));
      case Kind::sum:
        return a_->apply(x) + b_->apply(x);
    }
    throw std::logic_error("linear map: bad kind");
  }

  /**
   * Conservative syntactic injectivity test. True only for shapes that are
   * injective on all of c00: the identity, the right shift, diagonals with a
   * nowhere-zero rule, compositions of injective maps, and sums matching the
   * first_entry_preserving shape with injective f. A false answer makes no
   * claim either way.
   */
  bool structurally_injective() const {
    switch (kind_) {
      case Kind::identity:
      case Kind::shift_right:
        return true;
      case Kind::shift_left:
      case Kind::truncate_first:
      case Kind::finite_table:
        return false;
      case Kind::diagonal:
        return rule_->never_zero();
      case Kind::compose:
        return a_->structurally_injective() && b_->structurally_injective();
      case Kind::sum: {
        const LinearMap* f = nullptr;
        if (matches_first_entry_preserving(*this, &f)) return f->structurally_injective();
        return false;
      }
    }
    return false;
  }

  /// Recognizes m == first_entry_preserving(f) for some f and reports f.
  /// Both associativity shapes of the three-fold composition are accepted.
  static bool matches_first_entry_preserving(const LinearMap& m, const LinearMap** f_out) {
    if (m.kind_ != Kind::sum) return false;
    const LinearMap* chain = nullptr;
    if (m.b_->kind_ == Kind::truncate_first)
      chain = m.a_.get();
    else if (m.a_->kind_ == Kind::truncate_first)
      chain = m.b_.get();
    else
      return false;
    // chain must be R . f . L in one of the two nestings
    if (chain->kind_ != Kind::compose) return false;
    const LinearMap& o = *chain->a_;
    const LinearMap& i = *chain->b_;
    if (o.kind_ == Kind::shift_right && i.kind_ == Kind::compose &&
        i.b_->kind_ == Kind::shift_left) {
      if (f_out) *f_out = i.a_.get();
      return true;
    }
    if (i.kind_ == Kind::shift_left && o.kind_ == Kind::compose &&
        o.a_->kind_ == Kind::shift_right) {
      if (f_out) *f_out = o.b_.get();
      return true;
    }
    return false;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::identity:
      case Kind::shift_left:
      case Kind::shift_right:
      case Kind::truncate_first:
        return true;
      case Kind::diagonal:
        return *a.rule_ == *b.rule_;
      case Kind::finite_table:
        return *a.images_ == *b.images_;
      case Kind::compose:
      case Kind::sum:
        return *a.a_ == *b.a_ && *a.b_ == *b.b_;
    }
    return false;
  }

 private:
  explicit LinearMap(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const IndexRule> rule_;
  std::shared_ptr<const std::map<Index, SparseSeq>> images_;
  std::shared_ptr<const LinearMap> a_;
  std::shared_ptr<const LinearMap> b_;
};

inline SparseSeq apply_map(const LinearMap& m, const SparseSeq& x) { return m.apply(x); }

}  // namespace seminorm_lab
