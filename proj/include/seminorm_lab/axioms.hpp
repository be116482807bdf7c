#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seminorm_lab/functional.hpp"
#include "seminorm_lab/sampling.hpp"

namespace seminorm_lab {

struct AxiomViolation {
  SparseSeq x;
  std::optional<SparseSeq> y;
  std::optional<Rational> scalar;
  std::string detail;
};

/// Result of randomized seminorm axiom checking. All four lists are empty
/// for a genuine seminorm; every recorded violation is an exact witness.
struct AxiomReport {
  std::size_t samples_checked = 0;
  std::vector<AxiomViolation> nonnegativity_violations;
  std::vector<AxiomViolation> homogeneity_violations;
  std::vector<AxiomViolation> subadditivity_violations;
  std::vector<AxiomViolation> reverse_triangle_violations;

  bool pass() const {
    return nonnegativity_violations.empty() && homogeneity_violations.empty() &&
           subadditivity_violations.empty() && reverse_triangle_violations.empty();
  }
};

/**
 * Samples pairs (x, y) and scalars a and checks, exactly:
 *   S(x) >= 0, S(ax) = |a| S(x), S(x+y) <= S(x) + S(y),
 *   |S(x) - S(y)| <= S(x - y).
 * Also checks S(0) = 0 once up front. Deterministic given the rng state.
 */
inline AxiomReport verify_axioms(const Functional& s, SampleRng& rng, std::size_t samples) {
  AxiomReport report;
  report.samples_checked = samples;

  if (evaluate(s, SparseSeq()) != 0)
    report.nonnegativity_violations.push_back({SparseSeq(), {}, {}, "S(0) != 0"});

  for (std::size_t k = 0; k < samples; ++k) {
    const SparseSeq x = random_seq(rng);
    const SparseSeq y = random_seq(rng);
    const Rational a = rng.below(8) == 0 ? Rational(0) : random_coeff(rng);

    const Rational sx = evaluate(s, x);
    const Rational sy = evaluate(s, y);
    if (sx < 0) report.nonnegativity_violations.push_back({x, {}, {}, "S(x) < 0"});
    if (evaluate(s, scale(a, x)) != abs_val(a) * sx)
      report.homogeneity_violations.push_back({x, {}, a, "S(ax) != |a| S(x)"});
    if (evaluate(s, x + y) > sx + sy)
      report.subadditivity_violations.push_back({x, y, {}, "S(x+y) > S(x) + S(y)"});
    if (abs_val(sx - sy) > evaluate(s, x - y))
      report.reverse_triangle_violations.push_back({x, y, {}, "|S(x) - S(y)| > S(x-y)"});
  }
  return report;
}

inline AxiomReport verify_axioms(const Functional& s, std::size_t samples, std::uint64_t seed) {
  SampleRng rng(seed);
  return verify_axioms(s, rng, samples);
}

struct MajorizationReport {
  std::size_t samples_checked = 0;
  std::vector<SparseSeq> violations;  // x with lower(x) > upper(x)
  bool pass() const { return violations.empty(); }
};

/// Samples x and checks lower(x) <= upper(x) exactly.
inline MajorizationReport check_majorization(const Functional& lower, const Functional& upper,
                                             SampleRng& rng, std::size_t samples) {
  MajorizationReport report;
  report.samples_checked = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const SparseSeq x = random_seq(rng);
    if (evaluate(lower, x) > evaluate(upper, x)) report.violations.push_back(x);
  }
  return report;
}

inline MajorizationReport check_majorization(const Functional& lower, const Functional& upper,
                                             std::size_t samples, std::uint64_t seed) {
  SampleRng rng(seed);
  return check_majorization(lower, upper, rng, samples);
}

}  // namespace seminorm_lab
