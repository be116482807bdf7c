#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seminorm_lab/lp.hpp"
#include "seminorm_lab/rational.hpp"
#include "seminorm_lab/sparse_seq.hpp"

namespace seminorm_lab {

/// {"1": "1/2", "3": "2"} with decimal-string indices and "p/q" values.
inline nlohmann::json seq_to_json(const SparseSeq& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [i, c] : x.entries()) j[std::to_string(i)] = format_rational(c);
  return j;
}

inline SparseSeq seq_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("sequence json: expected an object");
  std::vector<std::pair<Index, Rational>> entries;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const long long idx = std::stoll(key, &used);
    if (used != key.size() || idx < 1)
      throw std::invalid_argument("sequence json: bad index '" + key + "'");
    entries.emplace_back(static_cast<Index>(idx), parse_rational(value.get<std::string>()));
  }
  return SparseSeq::from_pairs(entries);
}

namespace json_detail {

inline nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rational& r : v) a.push_back(format_rational(r));
  return a;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& a, const char* what) {
  if (!a.is_array()) throw std::invalid_argument(std::string("lp json: ") + what + " must be an array");
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(parse_rational(e.get<std::string>()));
  return v;
}

}  // namespace json_detail

inline nlohmann::json problem_to_json(const LpProblem& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : p.constraint_matrix) rows.push_back(json_detail::rationals_to_json(row));
  nlohmann::json kinds = nlohmann::json::array();
  for (RowKind k : p.row_kinds) kinds.push_back(k == RowKind::le ? "<=" : k == RowKind::eq ? "=" : ">=");
  nlohmann::json bounds = nlohmann::json::array();
  for (VarBound b : p.variable_bounds) bounds.push_back(b == VarBound::free_var ? "free" : "nonneg");
  return {{"objective", json_detail::rationals_to_json(p.objective)},
          {"constraint_matrix", rows},
          {"rhs", json_detail::rationals_to_json(p.rhs)},
          {"row_kinds", kinds},
          {"variable_bounds", bounds}};
}

inline LpProblem problem_from_json(const nlohmann::json& j) {
  LpProblem p;
  p.objective = json_detail::rationals_from_json(j.at("objective"), "objective");
  for (const auto& row : j.at("constraint_matrix"))
    p.constraint_matrix.push_back(json_detail::rationals_from_json(row, "constraint row"));
  p.rhs = json_detail::rationals_from_json(j.at("rhs"), "rhs");
  for (const auto& k : j.at("row_kinds")) {
    const std::string s = k.get<std::string>();
    if (s == "<=")
      p.row_kinds.push_back(RowKind::le);
    else if (s == "=")
      p.row_kinds.push_back(RowKind::eq);
    else if (s == ">=")
      p.row_kinds.push_back(RowKind::ge);
    else
      throw std::invalid_argument("lp json: row kind must be one of <=, =, >=");
  }
  for (const auto& b : j.at("variable_bounds")) {
    const std::string s = b.get<std::string>();
    if (s == "free")
      p.variable_bounds.push_back(VarBound::free_var);
    else if (s == "nonneg")
      p.variable_bounds.push_back(VarBound::nonneg);
    else
      throw std::invalid_argument("lp json: variable bound must be free or nonneg");
  }
  p.validate();
  return p;
}

inline nlohmann::json outcome_to_json(const LpOutcome& o) {
  if (const LpOptimal* opt = std::get_if<LpOptimal>(&o)) {
    return {{"status", "optimal"},
            {"value", format_rational(opt->value)},
            {"value_approx", approx(opt->value)},
            {"primal", json_detail::rationals_to_json(opt->primal)},
            {"dual", json_detail::rationals_to_json(opt->dual)}};
  }
  if (std::holds_alternative<LpInfeasible>(o)) return {{"status", "infeasible"}};
  return {{"status", "unbounded"}};
}

}  // namespace seminorm_lab
