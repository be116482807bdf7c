#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seminorm_lab/functional.hpp"
#include "seminorm_lab/grammar.hpp"
#include "seminorm_lab/report.hpp"

namespace seminorm_lab {

/// Raised when a certificate checker is asked about a combination it has no
/// closed forms for.
class UnsupportedWitnessCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parametric sequence families used as witnesses throughout the checkers.
enum class Witness { scaled_basis, canonical_basis, flat_block, geometric_tail };

inline std::string witness_name(Witness w) {
  switch (w) {
    case Witness::scaled_basis:
      return "scaled-basis";
    case Witness::canonical_basis:
      return "canonical-basis";
    case Witness::flat_block:
      return "flat-block";
    case Witness::geometric_tail:
      return "geometric-tail";
  }
  throw std::logic_error("witness_name: unknown family");
}

inline std::optional<Witness> witness_from_string(std::string_view name) {
  for (Witness w : {Witness::scaled_basis, Witness::canonical_basis, Witness::flat_block,
                    Witness::geometric_tail})
    if (witness_name(w) == name) return w;
  return std::nullopt;
}

/// n-th member of the family:
///   scaled-basis     e_n / n
///   canonical-basis  e_n
///   flat-block       (1/n, ..., 1/n, 0, ...) with n leading entries
///   geometric-tail   (1/2, 1/4, ..., 1/2^n, 0, ...)
inline SparseSeq generate(Witness w, Index n) {
  if (n < 1) throw std::invalid_argument("generate: n starts at 1");
  switch (w) {
    case Witness::scaled_basis:
      return scale(rat(1, n), basis_vector(n));
    case Witness::canonical_basis:
      return basis_vector(n);
    case Witness::flat_block: {
      std::vector<std::pair<Index, Rational>> e;
      e.reserve(static_cast<std::size_t>(n));
      for (Index i = 1; i <= n; ++i) e.emplace_back(i, rat(1, n));
      return SparseSeq::from_pairs(e);
    }
    case Witness::geometric_tail: {
      std::vector<std::pair<Index, Rational>> e;
      e.reserve(static_cast<std::size_t>(n));
      for (Index i = 1; i <= n; ++i) e.emplace_back(i, pow2(-i));
      return SparseSeq::from_pairs(e);
    }
  }
  throw std::logic_error("generate: unknown family");
}

/**
 * Claim that `seminorm` is discontinuous at 0 with respect to `norm`: along
 * the witness family, norm(x_n) <= null_bound(n) (a bound shrinking to 0)
 * while seminorm(x_n) >= epsilon. `start` is part of the claim; some claims
 * only hold from the second term on.
 */
struct DiscontinuityClaim {
  Functional seminorm;
  Functional norm;
  Witness witness = Witness::scaled_basis;
  Rational epsilon;
  IndexRule null_bound = IndexRule::reciprocal();
  Index start = 1;

  void validate() const {
    if (epsilon <= 0) throw std::invalid_argument("discontinuity claim: epsilon must be > 0");
    if (!null_bound.strictly_positive())
      throw std::invalid_argument("discontinuity claim: null bound must be positive");
    if (start < 1) throw std::invalid_argument("discontinuity claim: start index must be >= 1");
  }
};

/// Per-n certificate for a discontinuity claim over n in [claim.start, n_max].
inline CertificateReport check_discontinuity(const DiscontinuityClaim& claim, Index n_max) {
  claim.validate();
  if (n_max < claim.start)
    throw std::invalid_argument("check_discontinuity: n_max is before the claim's start index");
  CertificateReport report("discontinuity", "discontinuity witness",
                           {"N(x_n)", "bound", "S(x_n)", "epsilon"});
  report.add_metadata("seminorm", format_functional(claim.seminorm));
  report.add_metadata("norm", format_functional(claim.norm));
  report.add_metadata("family", witness_name(claim.witness));
  report.add_metadata("null_bound", format_rule(claim.null_bound));
  for (Index k = claim.start; k <= n_max; ++k) {
    const SparseSeq x = generate(claim.witness, k);
    const Rational nv = evaluate(claim.norm, x);
    const Rational sv = evaluate(claim.seminorm, x);
    const Rational bound = claim.null_bound.at(k);
    report.add_row(std::to_string(k), {nv, bound, sv, claim.epsilon},
                   nv <= bound && sv >= claim.epsilon);
  }
  return report;
}

/// Claim that beta * n1 <= n2 <= gamma * n1 pointwise.
struct EquivalenceClaim {
  Functional n1;
  Functional n2;
  Rational beta;
  Rational gamma;

  void validate() const {
    if (!(Rational(0) < beta && beta <= gamma))
      throw std::invalid_argument("equivalence claim: need 0 < beta <= gamma");
  }
};

/**
 * Tests the sandwich beta * n1(x_n) <= n2(x_n) <= gamma * n1(x_n) along the
 * family. A failing row is an exact counterexample to the claimed constants;
 * sweeping beta and finding a failure for each exhibits non-equivalence.
 */
inline CertificateReport check_equivalence(const EquivalenceClaim& claim, Witness family,
                                           Index n_max) {
  claim.validate();
  if (n_max < 1) throw std::invalid_argument("check_equivalence: n_max must be >= 1");
  CertificateReport report("equivalence", "equivalence constants",
                           {"N1(x_n)", "N2(x_n)", "lower", "upper"});
  report.add_metadata("n1", format_functional(claim.n1));
  report.add_metadata("n2", format_functional(claim.n2));
  report.add_metadata("family", witness_name(family));
  report.add_metadata("beta", format_rational(claim.beta));
  report.add_metadata("gamma", format_rational(claim.gamma));
  for (Index k = 1; k <= n_max; ++k) {
    const SparseSeq x = generate(family, k);
    const Rational v1 = evaluate(claim.n1, x);
    const Rational v2 = evaluate(claim.n2, x);
    const Rational lower = claim.beta * v1;
    const Rational upper = claim.gamma * v1;
    report.add_row(std::to_string(k), {v1, v2, lower, upper}, lower <= v2 && v2 <= upper);
  }
  return report;
}

namespace witness_detail {

enum class BasicNorm { l1, linf };

inline BasicNorm require_closed_forms(const Functional& n, Witness w, const char* who) {
  if (w != Witness::geometric_tail)
    throw UnsupportedWitnessCheck(std::string(who) +
                                  ": closed forms exist only for the geometric-tail family");
  if (n.kind() == Functional::Kind::l1) return BasicNorm::l1;
  if (n.kind() == Functional::Kind::linf) return BasicNorm::linf;
  throw UnsupportedWitnessCheck(std::string(who) + ": closed forms exist only for l1 and linf");
}

}  // namespace witness_detail

/**
 * For the geometric-tail family x_n and pairs m < n, checks the exact
 * increment n(x_n - x_m) against its closed form and the summable bound that
 * makes the family Cauchy. Supported for l1 and linf only.
 */
inline CertificateReport check_cauchy_modulus(const Functional& n, Witness w,
                                              const std::vector<std::pair<Index, Index>>& pairs) {
  const auto which = witness_detail::require_closed_forms(n, w, "check_cauchy_modulus");
  if (pairs.empty()) throw std::invalid_argument("check_cauchy_modulus: pairs must be nonempty");
  CertificateReport report("cauchy-modulus", "tail increments of the geometric family",
                           {"N(x_n - x_m)", "expected", "bound"}, "m:n");
  report.add_metadata("norm", format_functional(n));
  report.add_metadata("family", witness_name(w));
  for (const auto& [m, k] : pairs) {
    if (m < 1 || k <= m) throw std::invalid_argument("check_cauchy_modulus: need 1 <= m < n");
    const SparseSeq diff = generate(w, k) - generate(w, m);
    const Rational value = evaluate(n, diff);
    Rational expected, bound;
    if (which == witness_detail::BasicNorm::l1) {
      expected = pow2(-m) - pow2(-k);
      bound = pow2(-m);
    } else {
      expected = pow2(-(m + 1));
      bound = expected;
    }
    report.add_row(std::to_string(m) + ":" + std::to_string(k), {value, expected, bound},
                   value == expected && value <= bound);
  }
  return report;
}

/**
 * Certifies that the geometric-tail family escapes y: for every n past the
 * support of y, n(x_n - y) stays at least 2^-(k+1) where k is the largest
 * index y touches. Together with check_cauchy_modulus this witnesses a
 * Cauchy family with no limit among finitely supported sequences. Supported
 * for l1 and linf only.
 */
inline CertificateReport check_escape(const Functional& n, Witness w, const SparseSeq& y,
                                      Index n_max) {
  witness_detail::require_closed_forms(n, w, "check_escape");
  const Index k = y.max_support_index();
  if (n_max <= k) throw std::invalid_argument("check_escape: range must pass the support of y");
  const Rational bound = pow2(-(k + 1));
  CertificateReport report("escape", "no finitely supported limit", {"N(x_n - y)", "bound"});
  report.add_metadata("norm", format_functional(n));
  report.add_metadata("family", witness_name(w));
  report.add_metadata("y", to_term_string(y));
  report.add_metadata("k", std::to_string(k));
  for (Index j = k + 1; j <= n_max; ++j) {
    const Rational value = evaluate(n, generate(w, j) - y);
    report.add_row(std::to_string(j), {value, bound}, value >= bound);
  }
  return report;
}

/// A norm in the family dominating s pointwise: Sum(s, n0). n0 must itself
/// be certified positive-definite by construction.
inline Functional make_dominating_norm(const Functional& s, const Functional& n0) {
  if (!is_norm_candidate(n0))
    throw std::invalid_argument("make_dominating_norm: n0 must be a norm candidate");
  return Functional::sum(s, n0);
}

}  // namespace seminorm_lab
