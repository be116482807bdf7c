#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "seminorm_lab/index_rule.hpp"
#include "seminorm_lab/lp.hpp"
#include "seminorm_lab/sparse_seq.hpp"
#include "seminorm_lab/subspace.hpp"

namespace seminorm_lab {

/// Ambient norms whose unit balls are polyhedra on any finite support, so
/// distances to finite-dimensional subspaces reduce to exact linear programs.
enum class PolyhedralKind { l1, linf, weighted_l1 };

struct DistanceSolution {
  Rational value;
  std::vector<Rational> combo;  // coefficients on the subspace basis
  LpProblem problem;
  LpOutcome outcome;  // always optimal, kept as a checkable certificate
};

namespace distance_detail {

inline std::vector<Index> joint_support(const Subspace& v, const SparseSeq& u) {
  std::set<Index> sup(v.ambient_support().begin(), v.ambient_support().end());
  for (const auto& [i, c] : u.entries()) sup.insert(i);
  return {sup.begin(), sup.end()};
}

// min sum_r w_r (p_r + q_r)  s.t.  (Vc)_r + p_r - q_r = u_r, c free, p,q >= 0.
// At c = 0 the deviation splits by sign, so {p_r or q_r} is a feasible
// starting basis and phase 1 is never needed.
inline DistanceSolution solve_l1_like(const Subspace& v, const SparseSeq& u,
                                      const IndexRule* weight) {
  const std::vector<Index> sup = joint_support(v, u);
  const std::size_t r_count = sup.size();
  const std::size_t d = v.dim();
  const std::size_t n = d + 2 * r_count;

  LpProblem p;
  p.objective.assign(n, Rational(0));
  p.variable_bounds.assign(n, VarBound::nonneg);
  for (std::size_t j = 0; j < d; ++j) p.variable_bounds[j] = VarBound::free_var;
  p.constraint_matrix.assign(r_count, std::vector<Rational>(n, Rational(0)));
  p.rhs.assign(r_count, Rational(0));
  p.row_kinds.assign(r_count, RowKind::eq);

  std::vector<int> hint;
  hint.reserve(r_count);
  for (std::size_t r = 0; r < r_count; ++r) {
    const Rational w = weight ? weight->at(sup[r]) : Rational(1);
    if (w <= 0) throw std::invalid_argument("distance: weights must be positive");
    p.objective[d + r] = w;
    p.objective[d + r_count + r] = w;
    for (std::size_t j = 0; j < d; ++j) p.constraint_matrix[r][j] = v.basis()[j].coord(sup[r]);
    p.constraint_matrix[r][d + r] = 1;
    p.constraint_matrix[r][d + r_count + r] = -1;
    p.rhs[r] = u.coord(sup[r]);
    hint.push_back(static_cast<int>(p.rhs[r] >= 0 ? d + r : d + r_count + r));
  }

  LpOutcome out = solve(p, hint);
  const LpOptimal* opt = std::get_if<LpOptimal>(&out);
  if (!opt) throw std::logic_error("distance: lp unexpectedly not optimal");
  std::vector<Rational> combo(opt->primal.begin(), opt->primal.begin() + static_cast<long>(d));
  return DistanceSolution{opt->value, std::move(combo), std::move(p), std::move(out)};
}

// min t  s.t.  (Vc)_r + t - sA_r = u_r  and  -(Vc)_r + t - sB_r = -u_r.
// At c = 0, t = max_r |u_r| is feasible with exactly one slack at zero, so
// swapping t for that slack gives a feasible starting basis.
inline DistanceSolution solve_linf(const Subspace& v, const SparseSeq& u) {
  const std::vector<Index> sup = joint_support(v, u);
  const std::size_t r_count = sup.size();
  const std::size_t d = v.dim();
  const std::size_t n = d + 1 + 2 * r_count;
  const std::size_t t_var = d;

  LpProblem p;
  p.objective.assign(n, Rational(0));
  p.objective[t_var] = 1;
  p.variable_bounds.assign(n, VarBound::nonneg);
  for (std::size_t j = 0; j < d; ++j) p.variable_bounds[j] = VarBound::free_var;
  p.constraint_matrix.assign(2 * r_count, std::vector<Rational>(n, Rational(0)));
  p.rhs.assign(2 * r_count, Rational(0));
  p.row_kinds.assign(2 * r_count, RowKind::eq);

  std::size_t star = 0;
  Rational best(-1);
  for (std::size_t r = 0; r < r_count; ++r) {
    const Rational a = abs_val(u.coord(sup[r]));
    if (a > best) {
      best = a;
      star = r;
    }
  }
  for (std::size_t r = 0; r < r_count; ++r) {
    const Rational ur = u.coord(sup[r]);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational vc = v.basis()[j].coord(sup[r]);
      p.constraint_matrix[r][j] = vc;
      p.constraint_matrix[r_count + r][j] = -vc;
    }
    p.constraint_matrix[r][t_var] = 1;
    p.constraint_matrix[r_count + r][t_var] = 1;
    p.constraint_matrix[r][d + 1 + r] = -1;
    p.constraint_matrix[r_count + r][d + 1 + r_count + r] = -1;
    p.rhs[r] = ur;
    p.rhs[r_count + r] = -ur;
  }

  const bool drop_a = u.coord(sup[star]) >= 0;
  std::vector<int> hint;
  hint.reserve(2 * r_count);
  hint.push_back(static_cast<int>(t_var));
  for (std::size_t r = 0; r < r_count; ++r)
    if (!(drop_a && r == star)) hint.push_back(static_cast<int>(d + 1 + r));
  for (std::size_t r = 0; r < r_count; ++r)
    if (!(!drop_a && r == star)) hint.push_back(static_cast<int>(d + 1 + r_count + r));

  LpOutcome out = solve(p, hint);
  const LpOptimal* opt = std::get_if<LpOptimal>(&out);
  if (!opt) throw std::logic_error("distance: lp unexpectedly not optimal");
  std::vector<Rational> combo(opt->primal.begin(), opt->primal.begin() + static_cast<long>(d));
  return DistanceSolution{opt->value, std::move(combo), std::move(p), std::move(out)};
}

}  // namespace distance_detail

/**
 * Distance from u to the span of v in the given polyhedral norm, computed by
 * exact simplex. `weight` is consulted only for weighted_l1 and must produce
 * positive values on the joint support.
 */
inline DistanceSolution solve_distance(PolyhedralKind kind, const IndexRule* weight,
                                       const Subspace& v, const SparseSeq& u) {
  switch (kind) {
    case PolyhedralKind::l1:
      return distance_detail::solve_l1_like(v, u, nullptr);
    case PolyhedralKind::weighted_l1:
      if (!weight) throw std::invalid_argument("distance: weighted_l1 requires a weight rule");
      return distance_detail::solve_l1_like(v, u, weight);
    case PolyhedralKind::linf:
      return distance_detail::solve_linf(v, u);
  }
  throw std::logic_error("distance: unknown norm kind");
}

}  // namespace seminorm_lab
