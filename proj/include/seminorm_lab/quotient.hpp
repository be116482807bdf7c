#pragma once

#include <stdexcept>

#include "seminorm_lab/functional.hpp"

namespace seminorm_lab {

/// Distance computation with its attained minimizer and the LP certificate
/// behind it.
struct DistanceResult {
  Rational value;
  SparseSeq minimizer;  // point of the subspace realizing the distance
  LpProblem problem;
  LpOutcome certificate;
};

/**
 * Distance from u to the subspace in the given ambient norm. The minimum is
 * attained because the subspace is finite-dimensional and the norm is
 * polyhedral on every finite support; the returned minimizer witnesses it.
 */
inline DistanceResult distance(const Functional& ambient, const Subspace& v, const SparseSeq& u) {
  const auto kind = ambient.polyhedral_kind();
  if (!kind) throw UnsupportedNorm("distance: ambient norm must be l1, linf, or weighted_l1");
  const IndexRule* weight =
      ambient.kind() == Functional::Kind::weighted_l1 ? &ambient.rule() : nullptr;
  DistanceSolution sol = solve_distance(*kind, weight, v, u);

  SparseSeq best;
  for (std::size_t j = 0; j < v.dim(); ++j) best = add(best, scale(sol.combo[j], v.basis()[j]));
  if (evaluate(ambient, u - best) != sol.value)
    throw std::logic_error("distance: minimizer does not attain the optimal value");
  return DistanceResult{std::move(sol.value), std::move(best), std::move(sol.problem),
                        std::move(sol.outcome)};
}

/// Value of the quotient seminorm induced by the ambient norm and subspace.
inline Rational quotient_eval(const Functional& ambient, const Subspace& v, const SparseSeq& x) {
  return distance(ambient, v, x).value;
}

}  // namespace seminorm_lab
