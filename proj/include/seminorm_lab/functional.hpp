#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

#include "seminorm_lab/distance_lp.hpp"
#include "seminorm_lab/index_rule.hpp"
#include "seminorm_lab/linear_map.hpp"
#include "seminorm_lab/sparse_seq.hpp"
#include "seminorm_lab/subspace.hpp"

namespace seminorm_lab {

/// Raised when an operation needs an ambient norm outside the polyhedral
/// family it can reduce to exact linear programming.
class UnsupportedNorm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A closed family of seminorms on finitely supported sequences. Leaves are
 * classical norms and coordinate seminorms; composite nodes add pointwise
 * sums, pullbacks along linear maps, and quotient seminorms (distance to a
 * subspace in a polyhedral ambient norm). Values are immutable and cheap to
 * copy.
 */
class Functional {
 public:
  enum class Kind {
    l1,
    linf,
    weighted_l1,
    rescaled_l1,
    coordinate_abs,
    sum,
    pullback,
    quotient
  };

  static Functional l1() { return Functional(make(Kind::l1)); }
  static Functional linf() { return Functional(make(Kind::linf)); }

  /// sum_i d_i |x_i| with every d_i > 0.
  static Functional weighted_l1(IndexRule rule) {
    if (!rule.strictly_positive())
      throw std::invalid_argument("weighted_l1: rule must be strictly positive");
    auto b = make(Kind::weighted_l1);
    b->rule = std::move(rule);
    return Functional(std::move(b));
  }

  /// Coordinates are taken with respect to the rescaled basis (d_i e_i), so
  /// the value is sum over non-excluded i of |x_i| / d_i. The kernel is
  /// exactly the span of the excluded coordinates.
  static Functional rescaled_l1(IndexRule rule, std::set<Index> excluded) {
    if (!rule.strictly_positive())
      throw std::invalid_argument("rescaled_l1: rule must be strictly positive");
    for (Index i : excluded)
      if (i < 1) throw std::invalid_argument("rescaled_l1: excluded indices start at 1");
    auto b = make(Kind::rescaled_l1);
    b->rule = std::move(rule);
    b->excluded = std::move(excluded);
    return Functional(std::move(b));
  }

  /// |x_k|: the simplest proper seminorm.
  static Functional coordinate_abs(Index k) {
    if (k < 1) throw std::invalid_argument("coordinate_abs: index starts at 1");
    auto b = make(Kind::coordinate_abs);
    b->coord = k;
    return Functional(std::move(b));
  }

  static Functional sum(Functional left, Functional right) {
    auto b = make(Kind::sum);
    b->left = wrap(std::move(left));
    b->right = wrap(std::move(right));
    return Functional(std::move(b));
  }

  /// x -> inner(map(x)).
  static Functional pullback(Functional inner, LinearMap map) {
    auto b = make(Kind::pullback);
    b->left = wrap(std::move(inner));
    b->map = std::make_shared<const LinearMap>(std::move(map));
    return Functional(std::move(b));
  }

  /// x -> distance from x to the subspace, measured in the ambient norm.
  /// Only polyhedral ambients are supported.
  static Functional quotient(Functional ambient, Subspace subspace) {
    if (!ambient.polyhedral_kind())
      throw UnsupportedNorm("quotient: ambient norm must be l1, linf, or weighted_l1");
    auto b = make(Kind::quotient);
    b->left = wrap(std::move(ambient));
    b->subspace = std::make_shared<const Subspace>(std::move(subspace));
    return Functional(std::move(b));
  }

  Kind kind() const { return body_->kind; }
  const IndexRule& rule() const { return body_->rule; }
  const std::set<Index>& excluded() const { return body_->excluded; }
  Index coord_index() const { return body_->coord; }
  const Functional& left() const { return *body_->left; }
  const Functional& right() const { return *body_->right; }
  const Functional& inner() const { return *body_->left; }
  const Functional& ambient() const { return *body_->left; }
  const LinearMap& map() const { return *body_->map; }
  const Subspace& subspace() const { return *body_->subspace; }

  /// The matching LP-ready kind when this is a bare polyhedral norm.
  std::optional<PolyhedralKind> polyhedral_kind() const {
    switch (body_->kind) {
      case Kind::l1:
        return PolyhedralKind::l1;
      case Kind::linf:
        return PolyhedralKind::linf;
      case Kind::weighted_l1:
        return PolyhedralKind::weighted_l1;
      default:
        return std::nullopt;
    }
  }

  bool operator==(const Functional& other) const {
    if (body_ == other.body_) return true;
    if (body_->kind != other.body_->kind) return false;
    switch (body_->kind) {
      case Kind::l1:
      case Kind::linf:
        return true;
      case Kind::weighted_l1:
        return body_->rule == other.body_->rule;
      case Kind::rescaled_l1:
        return body_->rule == other.body_->rule && body_->excluded == other.body_->excluded;
      case Kind::coordinate_abs:
        return body_->coord == other.body_->coord;
      case Kind::sum:
        return *body_->left == *other.body_->left && *body_->right == *other.body_->right;
      case Kind::pullback:
        return *body_->left == *other.body_->left && *body_->map == *other.body_->map;
      case Kind::quotient:
        return *body_->left == *other.body_->left &&
               *body_->subspace == *other.body_->subspace;
    }
    return false;
  }

 private:
  struct Body {
    Kind kind = Kind::l1;
    IndexRule rule = IndexRule::constant(Rational(1));
    std::set<Index> excluded;
    Index coord = 0;
    std::shared_ptr<const Functional> left;
    std::shared_ptr<const Functional> right;
    std::shared_ptr<const LinearMap> map;
    std::shared_ptr<const Subspace> subspace;
  };

  explicit Functional(std::shared_ptr<Body> body) : body_(std::move(body)) {}
  static std::shared_ptr<Body> make(Kind k) {
    auto b = std::make_shared<Body>();
    b->kind = k;
    return b;
  }
  static std::shared_ptr<const Functional> wrap(Functional f) {
    return std::make_shared<const Functional>(std::move(f));
  }

  std::shared_ptr<const Body> body_;
};

/// Exact value of the functional at x.
inline Rational evaluate(const Functional& f, const SparseSeq& x) {
  using Kind = Functional::Kind;
  switch (f.kind()) {
    case Kind::l1: {
      Rational total(0);
      for (const auto& [i, c] : x.entries()) total += abs_val(c);
      return total;
    }
    case Kind::linf: {
      Rational best(0);
      for (const auto& [i, c] : x.entries()) best = std::max(best, abs_val(c));
      return best;
    }
    case Kind::weighted_l1: {
      Rational total(0);
      for (const auto& [i, c] : x.entries()) total += f.rule().at(i) * abs_val(c);
      return total;
    }
    case Kind::rescaled_l1: {
      Rational total(0);
      for (const auto& [i, c] : x.entries())
        if (!f.excluded().contains(i)) total += abs_val(c) / f.rule().at(i);
      return total;
    }
    case Kind::coordinate_abs:
      return abs_val(x.coord(f.coord_index()));
    case Kind::sum:
      return evaluate(f.left(), x) + evaluate(f.right(), x);
    case Kind::pullback:
      return evaluate(f.inner(), apply_map(f.map(), x));
    case Kind::quotient: {
      const Functional& amb = f.ambient();
      const IndexRule* weight =
          amb.kind() == Kind::weighted_l1 ? &amb.rule() : nullptr;
      return solve_distance(*amb.polyhedral_kind(), weight, f.subspace(), x).value;
    }
  }
  throw std::logic_error("evaluate: unknown functional kind");
}

/**
 * Structural test that the functional is a norm, not just a seminorm. A true
 * result is a guarantee; false means only that this test cannot certify it.
 */
inline bool is_norm_candidate(const Functional& f) {
  using Kind = Functional::Kind;
  switch (f.kind()) {
    case Kind::l1:
    case Kind::linf:
      return true;
    case Kind::weighted_l1:
      return f.rule().strictly_positive();
    case Kind::rescaled_l1:
      return f.excluded().empty() && f.rule().strictly_positive();
    case Kind::coordinate_abs:
      return false;
    case Kind::sum:
      return is_norm_candidate(f.left()) || is_norm_candidate(f.right());
    case Kind::pullback:
      return is_norm_candidate(f.inner()) && f.map().structurally_injective();
    case Kind::quotient:
      return false;  // the subspace is a nontrivial kernel
  }
  return false;
}

/// Whether x lies in the kernel. Quotients use exact membership instead of
/// solving the distance program.
inline bool in_kernel(const Functional& f, const SparseSeq& x) {
  if (f.kind() == Functional::Kind::quotient) return f.subspace().contains(x);
  return evaluate(f, x) == 0;
}

}  // namespace seminorm_lab
