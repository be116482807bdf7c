// Command-line front end for the seminorm_lab library: named demos, generic
// checkers over the functional grammar, and an exact-rational LP solver.
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 usage or input error.
// Output is byte-identical across runs for identical invocations.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seminorm_lab/seminorm_lab.hpp"

namespace sl = seminorm_lab;

namespace {

sl::Rational count_of(std::size_t n) { return sl::Rational(static_cast<long long>(n)); }

/// Writes text to stdout or, when out_path is nonempty, to that file.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  os << text;
  return 0;
}

/// Renders reports in the requested format and maps the verdict to an exit code.
int finish(const std::vector<sl::CertificateReport>& reports, sl::Format format,
           const std::string& out_path) {
  std::ostringstream buf;
  sl::render_reports(reports, format, buf);
  const int rc = emit(buf.str(), out_path);
  if (rc != 0) return rc;
  return sl::all_pass(reports) ? 0 : 1;
}

sl::Format parse_format(const std::string& name) {
  const auto f = sl::format_from_string(name);
  if (!f) throw CLI::ValidationError("--format", "expected one of table, csv, json");
  return *f;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open input file '" + path + "'");
  return nlohmann::json::parse(is);
}

std::string outcome_status(const sl::LpOutcome& o) {
  if (std::holds_alternative<sl::LpOptimal>(o)) return "optimal";
  if (std::holds_alternative<sl::LpInfeasible>(o)) return "infeasible";
  return "unbounded";
}

int cmd_demo(const std::string& id_name, const sl::DemoOptions& opt, const std::string& format,
             const std::string& out_path) {
  const auto id = sl::demo_from_string(id_name);
  if (!id) {
    std::cerr << "error: unknown demo id '" << id_name
              << "' (expected thm4, thm5, ex1, ex2, ex3, ex4, or incomplete)\n";
    return 2;
  }
  return finish(sl::run_demo(*id, opt), parse_format(format), out_path);
}

int cmd_check_axioms(const std::string& spec, std::size_t samples, std::uint64_t seed,
                     const std::string& format, const std::string& out_path) {
  const sl::Functional f = sl::parse_functional(spec);
  const sl::AxiomReport rep = sl::verify_axioms(f, samples, seed);

  sl::CertificateReport report("axiom-check", "seminorm axioms on random samples", {"violations"},
                               "axiom");
  report.add_metadata("spec", sl::format_functional(f));
  report.add_metadata("samples", std::to_string(samples));
  report.add_metadata("seed", std::to_string(seed));
  report.add_row("nonnegativity", {count_of(rep.nonnegativity_violations.size())},
                 rep.nonnegativity_violations.empty());
  report.add_row("homogeneity", {count_of(rep.homogeneity_violations.size())},
                 rep.homogeneity_violations.empty());
  report.add_row("subadditivity", {count_of(rep.subadditivity_violations.size())},
                 rep.subadditivity_violations.empty());
  report.add_row("reverse-triangle", {count_of(rep.reverse_triangle_violations.size())},
                 rep.reverse_triangle_violations.empty());
  return finish({report}, parse_format(format), out_path);
}

int cmd_check_majorize(const std::string& lower_spec, const std::string& upper_spec,
                       std::size_t samples, std::uint64_t seed, const std::string& format,
                       const std::string& out_path) {
  const sl::Functional lower = sl::parse_functional(lower_spec);
  const sl::Functional upper = sl::parse_functional(upper_spec);
  const sl::MajorizationReport rep = sl::check_majorization(lower, upper, samples, seed);

  sl::CertificateReport report("majorization-check", "lower(x) <= upper(x) on random samples",
                               {"violations"}, "relation");
  report.add_metadata("lower", sl::format_functional(lower));
  report.add_metadata("upper", sl::format_functional(upper));
  report.add_metadata("samples", std::to_string(samples));
  report.add_metadata("seed", std::to_string(seed));
  report.add_row("lower <= upper", {count_of(rep.violations.size())}, rep.pass());
  return finish({report}, parse_format(format), out_path);
}

int cmd_check_quotient(const std::string& norm_spec, const std::string& basis_arg,
                       const std::string& point_arg, const std::string& format,
                       const std::string& out_path) {
  // Route the pieces through the grammar so validation (polyhedral ambient,
  // well-formed basis, linear independence) happens in one place.
  const sl::Functional q = sl::parse_functional("quotient:" + norm_spec + ":basis=" + basis_arg);
  const sl::SparseSeq point = sl::parse_seq(point_arg);

  const sl::DistanceResult res = sl::distance(q.ambient(), q.subspace(), point);
  const bool cert_ok = sl::verify_certificate(res.problem, res.certificate);
  const sl::Rational attained = sl::evaluate(q.ambient(), point - res.minimizer);
  const bool member_consistent = (res.value == 0) == q.subspace().contains(point);

  sl::CertificateReport report("quotient-distance", "distance from the point to the subspace",
                               {"value", "N(point - v*)"}, "point");
  report.add_metadata("ambient", sl::format_functional(q.ambient()));
  report.add_metadata("basis", basis_arg);
  report.add_metadata("minimizer", sl::to_term_string(res.minimizer));
  report.add_metadata("lp-certificate", cert_ok ? "verified" : "FAILED");
  report.add_row(sl::to_term_string(point), {res.value, attained},
                 cert_ok && attained == res.value && member_consistent);
  return finish({report}, parse_format(format), out_path);
}

int cmd_check_equivalence(const std::string& n1_spec, const std::string& n2_spec,
                          const std::string& beta_text, const std::string& gamma_text,
                          const std::string& witness_name, sl::Index n_max,
                          const std::string& format, const std::string& out_path) {
  const auto w = sl::witness_from_string(witness_name);
  if (!w) {
    std::cerr << "error: unknown witness family '" << witness_name
              << "' (expected scaled-basis, canonical-basis, flat-block, or geometric-tail)\n";
    return 2;
  }
  sl::EquivalenceClaim claim{sl::parse_functional(n1_spec), sl::parse_functional(n2_spec),
                             sl::parse_rational(beta_text), sl::parse_rational(gamma_text)};
  return finish({sl::check_equivalence(claim, *w, n_max)}, parse_format(format), out_path);
}

int cmd_check_lp(const std::string& path, const std::string& format,
                 const std::string& out_path) {
  const sl::LpProblem p = sl::problem_from_json(load_json_file(path));
  const sl::LpOutcome o = sl::solve(p);
  const bool optimal = sl::is_optimal(o);
  const bool verified = optimal && sl::verify_certificate(p, o);

  sl::CertificateReport report("lp-certificate", "solve outcome and strong-duality certificate",
                               {"value"}, "status");
  report.add_metadata("file", path);
  report.add_metadata("variables", std::to_string(p.objective.size()));
  report.add_metadata("rows", std::to_string(p.rhs.size()));
  report.add_metadata("certificate", optimal ? (verified ? "verified" : "FAILED")
                                             : "not-applicable");
  const sl::Rational value = optimal ? std::get<sl::LpOptimal>(o).value : sl::Rational(0);
  // A decided infeasible/unbounded outcome is a pass; an optimal outcome must
  // carry a verifying certificate.
  report.add_row(outcome_status(o), {value}, !optimal || verified);
  return finish({report}, parse_format(format), out_path);
}

int cmd_lp_solve(const std::string& path, const std::string& out_path) {
  const sl::LpProblem p = sl::problem_from_json(load_json_file(path));
  const sl::LpOutcome o = sl::solve(p);
  const bool optimal = sl::is_optimal(o);
  const bool verified = optimal && sl::verify_certificate(p, o);

  nlohmann::json doc = sl::outcome_to_json(o);
  doc["schema"] = "seminorm-lab/1";
  if (optimal) doc["certificate_verified"] = verified;

  const int rc = emit(doc.dump(2) + "\n", out_path);
  if (rc != 0) return rc;
  return (!optimal || verified) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seminorm laboratory: exact checkers for seminorm constructions on finitely "
               "supported sequences"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  sl::DemoOptions opt;

  // demo <id>
  std::string demo_id;
  CLI::App* demo = app.add_subcommand("demo", "run a named demonstration scenario");
  demo->add_option("id", demo_id, "one of thm4, thm5, ex1, ex2, ex3, ex4, incomplete")
      ->required();
  demo->add_option("--n-max", opt.n_max, "largest index to tabulate (>= 2)")
      ->capture_default_str();
  demo->add_option("--samples", opt.samples, "random samples per sampled check")
      ->capture_default_str();
  demo->add_option("--seed", opt.seed, "seed for the deterministic sampler")
      ->capture_default_str();

  // check <kind>
  CLI::App* check = app.add_subcommand("check", "run a library checker on user-supplied specs");
  check->require_subcommand(1);

  std::string spec;
  std::size_t samples = 500;
  std::uint64_t seed = 2026;
  CLI::App* check_axioms = check->add_subcommand("axioms", "verify the seminorm axioms");
  check_axioms->add_option("--spec", spec, "functional in the norms grammar")->required();
  check_axioms->add_option("--samples", samples, "random samples")->capture_default_str();
  check_axioms->add_option("--seed", seed, "sampler seed")->capture_default_str();

  std::string lower_spec, upper_spec;
  CLI::App* check_majorize =
      check->add_subcommand("majorize", "verify lower(x) <= upper(x) on random samples");
  check_majorize->add_option("--lower", lower_spec, "functional in the norms grammar")->required();
  check_majorize->add_option("--upper", upper_spec, "functional in the norms grammar")->required();
  check_majorize->add_option("--samples", samples, "random samples")->capture_default_str();
  check_majorize->add_option("--seed", seed, "sampler seed")->capture_default_str();

  std::string norm_spec, basis_arg, point_arg;
  CLI::App* check_quotient =
      check->add_subcommand("quotient", "compute a certified distance to a subspace");
  check_quotient->add_option("--norm", norm_spec, "ambient norm (l1, linf, or weighted:RULE)")
      ->required();
  check_quotient->add_option("--basis", basis_arg, "subspace basis, e.g. [e1+e2,e3]")->required();
  check_quotient->add_option("--point", point_arg, "point whose distance is computed")->required();

  std::string n1_spec, n2_spec, beta_text, gamma_text, witness_arg;
  sl::Index eq_n_max = 100;
  CLI::App* check_equivalence = check->add_subcommand(
      "equivalence", "verify beta*N1(x_n) <= N2(x_n) <= gamma*N1(x_n) on a witness family");
  check_equivalence->add_option("--n1", n1_spec, "reference functional")->required();
  check_equivalence->add_option("--n2", n2_spec, "compared functional")->required();
  check_equivalence->add_option("--beta", beta_text, "lower constant (rational)")->required();
  check_equivalence->add_option("--gamma", gamma_text, "upper constant (rational)")->required();
  check_equivalence
      ->add_option("--witness", witness_arg,
                   "witness family: scaled-basis, canonical-basis, flat-block, geometric-tail")
      ->required();
  check_equivalence->add_option("--n-max", eq_n_max, "largest witness index")
      ->capture_default_str();

  std::string lp_file;
  CLI::App* check_lp =
      check->add_subcommand("lp", "solve an LP from JSON and verify its certificate");
  check_lp->add_option("--file", lp_file, "problem file (JSON)")->required();

  // lp solve <file.json>
  CLI::App* lp = app.add_subcommand("lp", "exact-rational linear programming");
  lp->require_subcommand(1);
  std::string solve_file;
  CLI::App* lp_solve = lp->add_subcommand("solve", "solve a problem file and print the outcome");
  lp_solve->add_option("file", solve_file, "problem file (JSON)")->required();

  for (CLI::App* sub : {demo, check_axioms, check_majorize, check_quotient, check_equivalence,
                        check_lp}) {
    sub->add_option("--format", format, "output format: table, csv, json")
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
  }
  lp_solve->add_option("--out", out_path, "write the outcome to a file instead of stdout");

  int rc = 0;
  demo->callback([&] { rc = cmd_demo(demo_id, opt, format, out_path); });
  check_axioms->callback([&] { rc = cmd_check_axioms(spec, samples, seed, format, out_path); });
  check_majorize->callback(
      [&] { rc = cmd_check_majorize(lower_spec, upper_spec, samples, seed, format, out_path); });
  check_quotient->callback(
      [&] { rc = cmd_check_quotient(norm_spec, basis_arg, point_arg, format, out_path); });
  check_equivalence->callback([&] {
    rc = cmd_check_equivalence(n1_spec, n2_spec, beta_text, gamma_text, witness_arg, eq_n_max,
                               format, out_path);
  });
  check_lp->callback([&] { rc = cmd_check_lp(lp_file, format, out_path); });
  lp_solve->callback([&] { rc = cmd_lp_solve(solve_file, out_path); });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const sl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
