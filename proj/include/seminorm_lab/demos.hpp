#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "seminorm_lab/axioms.hpp"
#include "seminorm_lab/grammar.hpp"
#include "seminorm_lab/quotient.hpp"
#include "seminorm_lab/report.hpp"
#include "seminorm_lab/sampling.hpp"
#include "seminorm_lab/witnesses.hpp"

namespace seminorm_lab {

/// The named, fixed demo scenarios exposed by the CLI.
enum class DemoId { thm4, thm5, ex1, ex2, ex3, ex4, incomplete };

inline std::string demo_name(DemoId id) {
  switch (id) {
    case DemoId::thm4:
      return "thm4";
    case DemoId::thm5:
      return "thm5";
    case DemoId::ex1:
      return "ex1";
    case DemoId::ex2:
      return "ex2";
    case DemoId::ex3:
      return "ex3";
    case DemoId::ex4:
      return "ex4";
    case DemoId::incomplete:
      return "incomplete";
  }
  throw std::logic_error("demo_name: unknown id");
}

inline std::optional<DemoId> demo_from_string(std::string_view name) {
  for (DemoId id : {DemoId::thm4, DemoId::thm5, DemoId::ex1, DemoId::ex2, DemoId::ex3, DemoId::ex4,
                    DemoId::incomplete})
    if (demo_name(id) == name) return id;
  return std::nullopt;
}

struct DemoOptions {
  Index n_max = 100;
  std::size_t samples = 500;
  std::uint64_t seed = 2026;
};

namespace demo_detail {

inline Rational count(std::size_t n) { return Rational(static_cast<long long>(n)); }

/// Smallest integer >= 1/r for positive rational r.
inline Index ceil_reciprocal(const Rational& r) {
  const Rational inv = 1 / r;
  const Integer num = numerator(inv);
  const Integer den = denominator(inv);
  return static_cast<Index>(((num + den - 1) / den).convert_to<long long>());
}

// One row per named sub-check, value = number of exact violations.
inline void add_count_row(CertificateReport& r, const std::string& label, std::size_t violations) {
  r.add_row(label, {count(violations)}, violations == 0);
}

/// Scaled-basis identities: the three functionals take the values 1/n, 1,
/// and (0 at n=1, else 1) on g_n = e_n / n.
inline std::vector<CertificateReport> demo_thm4(const DemoOptions& opt) {
  const Functional n1 = Functional::l1();
  const Functional nprime = Functional::rescaled_l1(IndexRule::reciprocal(), {});
  const Functional s = Functional::rescaled_l1(IndexRule::reciprocal(), {1});
  CertificateReport report("scaled-basis-identities", "values on the scaled basis g_n = e_n/n",
                           {"N1(g_n)", "Nprime(g_n)", "S(g_n)"});
  report.add_metadata("N1", format_functional(n1));
  report.add_metadata("Nprime", format_functional(nprime));
  report.add_metadata("S", format_functional(s));
  for (Index n = 1; n <= opt.n_max; ++n) {
    const SparseSeq g = generate(Witness::scaled_basis, n);
    const Rational v1 = evaluate(n1, g);
    const Rational vp = evaluate(nprime, g);
    const Rational vs = evaluate(s, g);
    const bool ok = v1 == rat(1, n) && vp == 1 && vs == (n == 1 ? Rational(0) : Rational(1));
    report.add_row(std::to_string(n), {v1, vp, vs}, ok);
  }
  return {std::move(report)};
}

/// Quotient seminorms against a fixed plane: distances attained and
/// certified, then the seminorm laws on random samples.
inline std::vector<CertificateReport> demo_thm5(const DemoOptions& opt) {
  const Subspace v({add(basis_vector(1), basis_vector(2))});
  const std::vector<Functional> ambients = {
      Functional::l1(), Functional::linf(), Functional::weighted_l1(IndexRule::pow_half())};

  CertificateReport dist_report("quotient-distances", "distance from e1 to span{e1+e2}",
                                {"S(e1)", "N(e1 - v*)"}, "ambient");
  const SparseSeq u = basis_vector(1);
  for (const Functional& ambient : ambients) {
    DistanceResult r = distance(ambient, v, u);
    const Rational attained = evaluate(ambient, u - r.minimizer);
    const bool ok = r.value > 0 && attained == r.value &&
                    verify_certificate(r.problem, r.certificate);
    dist_report.add_row(format_functional(ambient), {r.value, attained}, ok);
  }

  CertificateReport law_report("quotient-laws", "seminorm laws of the quotient",
                               {"violations"}, "check");
  law_report.add_metadata("basis", to_term_string(v.basis().front()));
  law_report.add_metadata("samples", std::to_string(opt.samples));
  for (const Functional& ambient : ambients) {
    const std::string name = format_functional(ambient);
    const Functional q = Functional::quotient(ambient, v);

    AxiomReport ax = verify_axioms(q, opt.samples, opt.seed);
    add_count_row(law_report, name + ":axioms",
                  ax.nonnegativity_violations.size() + ax.homogeneity_violations.size() +
                      ax.subadditivity_violations.size() +
                      ax.reverse_triangle_violations.size());

    MajorizationReport mj = check_majorization(q, ambient, opt.samples, opt.seed + 1);
    add_count_row(law_report, name + ":majorized-by-ambient", mj.violations.size());

    SampleRng rng(opt.seed + 2);
    std::size_t kernel_bad = 0;
    for (std::size_t k = 0; k < opt.samples; ++k) {
      const SparseSeq x = random_seq(rng);
      if ((quotient_eval(ambient, v, x) == 0) != v.contains(x)) ++kernel_bad;
    }
    for (const SparseSeq& b : v.basis())
      if (quotient_eval(ambient, v, b) != 0) ++kernel_bad;
    add_count_row(law_report, name + ":kernel-is-subspace", kernel_bad);

    SampleRng rng2(opt.seed + 3);
    std::size_t attain_bad = 0;
    for (std::size_t k = 0; k < 50; ++k) {
      const SparseSeq x = random_seq(rng2);
      DistanceResult r = distance(ambient, v, x);
      if (evaluate(ambient, x - r.minimizer) != r.value ||
          !verify_certificate(r.problem, r.certificate))
        ++attain_bad;
    }
    add_count_row(law_report, name + ":attainment-certified", attain_bad);
  }

  std::vector<CertificateReport> out;
  out.push_back(std::move(dist_report));
  out.push_back(std::move(law_report));
  return out;
}

/// Flat-block values, the coordinate/sup/sum majorization chain, and the
/// lower-constant sweep that shows the two norms are non-equivalent.
inline std::vector<CertificateReport> demo_ex1(const DemoOptions& opt) {
  const Functional s = Functional::coordinate_abs(1);
  const Functional ninf = Functional::linf();
  const Functional n1 = Functional::l1();

  CertificateReport values("flat-block-values", "norms of the flat block x_n",
                           {"N1(x_n)", "Ninf(x_n)"});
  for (Index n = 1; n <= opt.n_max; ++n) {
    const SparseSeq x = generate(Witness::flat_block, n);
    const Rational v1 = evaluate(n1, x);
    const Rational vi = evaluate(ninf, x);
    values.add_row(std::to_string(n), {v1, vi}, v1 == 1 && vi == rat(1, n));
  }

  CertificateReport chain("majorization-chain", "coordinate <= sup <= sum on random samples",
                          {"violations"}, "check");
  chain.add_metadata("samples", std::to_string(opt.samples));
  add_count_row(chain, "coord:1<=linf",
                check_majorization(s, ninf, opt.samples, opt.seed).violations.size());
  add_count_row(chain, "linf<=l1",
                check_majorization(ninf, n1, opt.samples, opt.seed).violations.size());

  CertificateReport sweep("non-equivalence-sweep",
                          "every lower constant fails on the flat block",
                          {"first violating n"}, "beta");
  for (const Rational& beta : {Rational(1), rat(1, 2), rat(1, 10), rat(1, 100)}) {
    // the lower bound beta*N1 <= Ninf breaks once n exceeds 1/beta, so the
    // sweep horizon stretches to cover that witness even for small n_max
    const Index needed = ceil_reciprocal(beta) + 1;
    CertificateReport claim_report = check_equivalence({n1, ninf, beta, Rational(1)},
                                                       Witness::flat_block,
                                                       std::max(opt.n_max, needed));
    const bool found = claim_report.first_failure().has_value();
    const Rational witness_n =
        found ? parse_rational(*claim_report.first_failure()) : Rational(0);
    sweep.add_row(format_rational(beta), {witness_n}, found);
  }

  std::vector<CertificateReport> out;
  out.push_back(std::move(values));
  out.push_back(std::move(chain));
  out.push_back(std::move(sweep));
  return out;
}

/// Discontinuity of the excluded-coordinate seminorm at zero, certified
/// against both the sum and the sup norm.
inline std::vector<CertificateReport> demo_ex2(const DemoOptions& opt) {
  const Functional s = Functional::rescaled_l1(IndexRule::reciprocal(), {1});
  std::vector<CertificateReport> out;
  for (const Functional& norm : {Functional::l1(), Functional::linf()}) {
    DiscontinuityClaim claim{s, norm, Witness::scaled_basis, Rational(1),
                             IndexRule::reciprocal(), 2};
    out.push_back(check_discontinuity(claim, opt.n_max));
  }
  return out;
}

/// Geometric weights: the canonical basis collapses in the weighted norm
/// while staying at height 1 in the sup norm; no lower constant survives.
inline std::vector<CertificateReport> demo_ex3(const DemoOptions& opt) {
  const Functional nprime = Functional::weighted_l1(IndexRule::pow_half());
  const Functional ninf = Functional::linf();

  CertificateReport values("canonical-basis-values", "norms of the canonical basis e_n",
                           {"Nprime(e_n)", "Ninf(e_n)"});
  values.add_metadata("Nprime", format_functional(nprime));
  for (Index n = 1; n <= opt.n_max; ++n) {
    const SparseSeq e = generate(Witness::canonical_basis, n);
    const Rational vp = evaluate(nprime, e);
    const Rational vi = evaluate(ninf, e);
    values.add_row(std::to_string(n), {vp, vi}, vp == pow2(-n) && vi == 1);
  }

  CertificateReport sweep("non-equivalence-sweep",
                          "every lower constant fails on the canonical basis",
                          {"first violating n"}, "beta");
  for (const Rational& beta : {Rational(1), rat(1, 2), rat(1, 10), rat(1, 100)}) {
    // the lower bound breaks once 2^-n < beta; stretch the horizon to there
    Index needed = 1;
    while (pow2(-needed) >= beta) ++needed;
    CertificateReport claim_report = check_equivalence({ninf, nprime, beta, Rational(1)},
                                                       Witness::canonical_basis,
                                                       std::max(opt.n_max, needed));
    const bool found = claim_report.first_failure().has_value();
    const Rational witness_n =
        found ? parse_rational(*claim_report.first_failure()) : Rational(0);
    sweep.add_row(format_rational(beta), {witness_n}, found);
  }

  std::vector<CertificateReport> out;
  out.push_back(std::move(values));
  out.push_back(std::move(sweep));
  return out;
}

/// The first-entry-preserving composite F(x) = R(f(L(x))) + T(x): linear for
/// every f, fixes the first coordinate, and pulls the sup norm back to a
/// majorant of the first-coordinate seminorm.
inline std::vector<CertificateReport> demo_ex4(const DemoOptions& opt) {
  const std::vector<LinearMap> fs = {
      LinearMap::identity(),
      LinearMap::diagonal(IndexRule::reciprocal()),
      LinearMap::finite_table({{1, basis_vector(2)}, {2, basis_vector(1)}}),
      LinearMap::compose(LinearMap::shift_right(), LinearMap::shift_left()),
      LinearMap::sum(LinearMap::diagonal(IndexRule::constant(2)), LinearMap::truncate_first())};

  CertificateReport report("first-entry-composite", "laws of F(x) = R(f(L(x))) + T(x)",
                           {"violations"}, "check");
  report.add_metadata("samples", std::to_string(opt.samples));
  for (const LinearMap& f : fs) {
    const LinearMap big_f = LinearMap::first_entry_preserving(f);
    const std::string name = "f=" + format_map(f);
    const Functional n2 = Functional::pullback(Functional::linf(), big_f);
    const Functional s = Functional::coordinate_abs(1);

    SampleRng rng(opt.seed);
    std::size_t linear_bad = 0, first_bad = 0, major_bad = 0;
    for (std::size_t k = 0; k < opt.samples; ++k) {
      const SparseSeq x = random_seq(rng);
      const SparseSeq y = random_seq(rng);
      const Rational a = random_coeff(rng);
      if (apply_map(big_f, x + y) != apply_map(big_f, x) + apply_map(big_f, y)) ++linear_bad;
      if (apply_map(big_f, scale(a, x)) != scale(a, apply_map(big_f, x))) ++linear_bad;
      if (coord(apply_map(big_f, x), 1) != coord(x, 1)) ++first_bad;
      if (evaluate(s, x) > evaluate(n2, x)) ++major_bad;
    }
    add_count_row(report, name + ":linear", linear_bad);
    add_count_row(report, name + ":first-coordinate", first_bad);
    add_count_row(report, name + ":coord<=pullback", major_bad);
  }

  SampleRng rng(opt.seed + 1);
  std::size_t identity_bad = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const SparseSeq x = random_seq(rng);
    if (add(shift_right(shift_left(x)), truncate_first(x)) != x) ++identity_bad;
  }
  add_count_row(report, "RL+T=identity", identity_bad);

  return {std::move(report)};
}

/// The geometric tail: closed-form norms, exact Cauchy moduli, and the
/// uniform escape bound that rules out any finitely supported limit.
inline std::vector<CertificateReport> demo_incomplete(const DemoOptions& opt) {
  const Functional n1 = Functional::l1();
  const Functional ninf = Functional::linf();

  CertificateReport values("geometric-tail-values", "norms of the geometric tail x_n",
                           {"N1(x_n)", "Ninf(x_n)"});
  for (Index n = 1; n <= opt.n_max; ++n) {
    const SparseSeq x = generate(Witness::geometric_tail, n);
    const Rational v1 = evaluate(n1, x);
    const Rational vi = evaluate(ninf, x);
    values.add_row(std::to_string(n), {v1, vi}, v1 == 1 - pow2(-n) && vi == rat(1, 2));
  }

  const Index pair_max = std::min<Index>(opt.n_max, 30);
  std::vector<std::pair<Index, Index>> pairs;
  for (Index m = 1; m < pair_max; ++m)
    for (Index n = m + 1; n <= pair_max; ++n) pairs.emplace_back(m, n);

  std::vector<CertificateReport> out;
  out.push_back(std::move(values));
  out.push_back(check_cauchy_modulus(n1, Witness::geometric_tail, pairs));
  out.push_back(check_cauchy_modulus(ninf, Witness::geometric_tail, pairs));

  const std::vector<SparseSeq> ys = {SparseSeq(), generate(Witness::geometric_tail, 2),
                                     basis_vector(5)};
  for (const Functional& norm : {n1, ninf})
    for (const SparseSeq& y : ys)
      out.push_back(check_escape(norm, Witness::geometric_tail, y, opt.n_max));
  return out;
}

}  // namespace demo_detail

/// Runs the fixed scenario behind a demo id. Every report row is an exact
/// check; the demo passes iff every report passes.
inline std::vector<CertificateReport> run_demo(DemoId id, const DemoOptions& opt) {
  if (opt.n_max < 2) throw std::invalid_argument("run_demo: n-max must be at least 2");
  switch (id) {
    case DemoId::thm4:
      return demo_detail::demo_thm4(opt);
    case DemoId::thm5:
      return demo_detail::demo_thm5(opt);
    case DemoId::ex1:
      return demo_detail::demo_ex1(opt);
    case DemoId::ex2:
      return demo_detail::demo_ex2(opt);
    case DemoId::ex3:
      return demo_detail::demo_ex3(opt);
    case DemoId::ex4:
      return demo_detail::demo_ex4(opt);
    case DemoId::incomplete:
      return demo_detail::demo_incomplete(opt);
  }
  throw std::logic_error("run_demo: unknown id");
}

enum class Format { table, csv, json };

inline std::optional<Format> format_from_string(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

inline bool all_pass(const std::vector<CertificateReport>& reports) {
  for (const CertificateReport& r : reports)
    if (!r.overall_pass()) return false;
  return true;
}

/// Renders reports plus a final PASS/FAIL line, deterministically.
inline void render_reports(const std::vector<CertificateReport>& reports, Format format,
                           std::ostream& os) {
  switch (format) {
    case Format::table:
      for (const CertificateReport& r : reports) {
        r.render_table(os);
        os << "\n";
      }
      break;
    case Format::csv:
      for (const CertificateReport& r : reports) {
        os << "# " << r.title() << "\n";
        r.render_csv(os);
      }
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const CertificateReport& r : reports) arr.push_back(r.to_json());
      nlohmann::json doc = {
          {"schema", "seminorm-lab/1"}, {"reports", arr}, {"pass", all_pass(reports)}};
      os << doc.dump(2) << "\n";
      break;
    }
  }
  os << (all_pass(reports) ? "PASS" : "FAIL") << "\n";
}

}  // namespace seminorm_lab
