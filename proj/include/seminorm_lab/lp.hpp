#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seminorm_lab/rational.hpp"

namespace seminorm_lab {

enum class RowKind { le, eq, ge };
enum class VarBound { free_var, nonneg };

/**
 * A linear program over exact rationals: minimize objective . x subject to
 * one relation per row of the dense constraint matrix, with each variable
 * either free or restricted to be nonnegative.
 */
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> constraint_matrix;
  std::vector<Rational> rhs;
  std::vector<RowKind> row_kinds;
  std::vector<VarBound> variable_bounds;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return constraint_matrix.size(); }

  void validate() const {
    if (constraint_matrix.size() != rhs.size() || constraint_matrix.size() != row_kinds.size())
      throw std::invalid_argument("lp: row count mismatch");
    if (variable_bounds.size() != objective.size())
      throw std::invalid_argument("lp: variable count mismatch");
    for (const auto& row : constraint_matrix)
      if (row.size() != objective.size())
        throw std::invalid_argument("lp: constraint row has wrong length");
  }
};

/// Optimal outcome with both solutions; primal and dual objectives agree
/// exactly (strong duality certificate).
struct LpOptimal {
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};
struct LpInfeasible {};
struct LpUnbounded {};
using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

inline bool is_optimal(const LpOutcome& o) { return std::holds_alternative<LpOptimal>(o); }

namespace lp_detail {

struct Column {
  enum class Kind { structural, slack, artificial } kind;
  int var = -1;   // structural: original variable
  int sign = +1;  // structural: +1 for the positive part, -1 for the negative
  int row = -1;   // slack/artificial: owning row
};

// Dense rational simplex tableau. Both cost rows are carried through every
// pivot so phase 2 can start without repricing.
class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : problem_(p) {
    p.validate();
    build_columns();
  }

  LpOutcome solve_two_phase() {
    normalize_rhs_signs();
    install_initial_basis();
    snapshot_original();
    init_cost_rows();
    run_phase(/*phase1=*/true);
    if (obj1_ != 0) return LpInfeasible{};
    drive_out_artificials();
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (cols_[j].kind == Column::Kind::artificial) enterable_[j] = false;
    if (!run_phase(/*phase1=*/false)) return LpUnbounded{};
    return extract();
  }

  /// Starts phase 2 directly from a caller-supplied basis, given as original
  /// variable indices. Returns nothing when the hint does not describe a
  /// feasible basis; the caller should fall back to the two-phase path.
  std::optional<LpOutcome> solve_with_basis(std::span<const int> hint) {
    if (hint.size() != rows_.size()) return std::nullopt;
    std::vector<int> basis_cols;
    basis_cols.reserve(hint.size());
    for (int v : hint) {
      if (v < 0 || static_cast<std::size_t>(v) >= problem_.num_vars()) return std::nullopt;
      if (problem_.variable_bounds[v] != VarBound::nonneg) return std::nullopt;
      basis_cols.push_back(var_col_[v]);
    }
    if (!reduce_to_basis(basis_cols)) return std::nullopt;
    for (const Rational& bi : b_)
      if (bi < 0) return std::nullopt;
    snapshot_original_from_problem();
    init_cost_rows_from_basis();
    if (!run_phase(/*phase1=*/false)) return LpUnbounded{};
    return extract();
  }

 private:
  const LpProblem& problem_;
  std::vector<Column> cols_;
  std::vector<int> var_col_;                  // first column of each variable
  std::vector<std::vector<Rational>> rows_;   // tableau body
  std::vector<Rational> b_;
  std::vector<int> flip_;                     // +1 / -1 per row
  std::vector<int> basis_;                    // basic column per row
  std::vector<bool> enterable_;
  std::vector<Rational> cost2_;               // phase-2 cost per column
  std::vector<Rational> d1_, d2_;             // reduced costs
  Rational obj1_{0}, obj2_{0};
  std::vector<std::vector<Rational>> orig_;   // pre-pivot tableau, for duals

  void build_columns() {
    const std::size_t n = problem_.num_vars();
    const std::size_t m = problem_.num_rows();
    var_col_.assign(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      var_col_[j] = static_cast<int>(cols_.size());
      cols_.push_back({Column::Kind::structural, static_cast<int>(j), +1, -1});
      if (problem_.variable_bounds[j] == VarBound::free_var)
        cols_.push_back({Column::Kind::structural, static_cast<int>(j), -1, -1});
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (problem_.row_kinds[i] == RowKind::le)
        cols_.push_back({Column::Kind::slack, -1, +1, static_cast<int>(i)});
      else if (problem_.row_kinds[i] == RowKind::ge)
        cols_.push_back({Column::Kind::slack, -1, -1, static_cast<int>(i)});
    }
    rows_.assign(m, std::vector<Rational>(cols_.size(), Rational(0)));
    b_ = problem_.rhs;
    flip_.assign(m, +1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        const Column& c = cols_[j];
        if (c.kind == Column::Kind::structural)
          rows_[i][j] = c.sign > 0 ? problem_.constraint_matrix[i][c.var]
                                   : -problem_.constraint_matrix[i][c.var];
        else if (c.kind == Column::Kind::slack && c.row == static_cast<int>(i))
          rows_[i][j] = Rational(c.sign);
      }
    }
    cost2_.assign(cols_.size(), Rational(0));
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (cols_[j].kind == Column::Kind::structural)
        cost2_[j] = cols_[j].sign > 0 ? problem_.objective[cols_[j].var]
                                      : -problem_.objective[cols_[j].var];
    enterable_.assign(cols_.size(), true);
  }

  void normalize_rhs_signs() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (b_[i] < 0) {
        flip_[i] = -1;
        b_[i] = -b_[i];
        for (auto& a : rows_[i]) a = -a;
      }
    }
  }

  // One basic column per row: the row's slack when it enters with +1,
  // otherwise a fresh artificial column.
  void install_initial_basis() {
    basis_.assign(rows_.size(), -1);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const Column& c = cols_[j];
      if (c.kind == Column::Kind::slack && rows_[c.row][j] == 1) basis_[c.row] = static_cast<int>(j);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] >= 0) continue;
      const int j = static_cast<int>(cols_.size());
      cols_.push_back({Column::Kind::artificial, -1, +1, static_cast<int>(i)});
      cost2_.push_back(Rational(0));
      enterable_.push_back(true);
      for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r].push_back(Rational(r == i ? 1 : 0));
      basis_[i] = j;
    }
  }

  void snapshot_original() { orig_ = rows_; }

  // Hinted path: rows were never flipped or extended, so the problem data is
  // the original tableau.
  void snapshot_original_from_problem() { orig_ = rows_saved_; }

  void init_cost_rows() {
    d1_.assign(cols_.size(), Rational(0));
    d2_ = cost2_;
    obj1_ = 0;
    obj2_ = 0;
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (cols_[j].kind == Column::Kind::artificial) d1_[j] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (cols_[basis_[i]].kind == Column::Kind::artificial) {
        for (std::size_t j = 0; j < cols_.size(); ++j) d1_[j] -= rows_[i][j];
        obj1_ += b_[i];
      }
      // initial basic columns are unit columns with zero phase-2 cost,
      // so d2_ starts equal to cost2_
    }
  }

  void init_cost_rows_from_basis() {
    d1_.assign(cols_.size(), Rational(0));
    d2_ = cost2_;
    obj1_ = 0;
    obj2_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost2_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_.size(); ++j)
        if (rows_[i][j] != 0) d2_[j] -= cb * rows_[i][j];
      obj2_ += cb * b_[i];
    }
  }

  std::vector<std::vector<Rational>> rows_saved_;

  bool reduce_to_basis(const std::vector<int>& basis_cols) {
    rows_saved_ = rows_;
    basis_.assign(rows_.size(), -1);
    std::vector<bool> row_done(rows_.size(), false);
    for (int j : basis_cols) {
      int r = -1;
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!row_done[i] && rows_[i][j] != 0) {
          r = static_cast<int>(i);
          break;
        }
      if (r < 0) return false;  // dependent hint
      pivot_rows(r, j);
      row_done[r] = true;
      basis_[r] = j;
    }
    return true;
  }

  void pivot_rows(int r, int s) {
    std::vector<Rational>& pr = rows_[r];
    const Rational piv = pr[s];
    if (piv != 1) {
      const Rational inv = 1 / piv;
      for (auto& a : pr)
        if (a != 0) a *= inv;
      b_[r] *= inv;
      pr[s] = 1;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const Rational f = rows_[i][s];
      if (f == 0) continue;
      std::vector<Rational>& ri = rows_[i];
      for (std::size_t j = 0; j < ri.size(); ++j)
        if (pr[j] != 0) ri[j] -= f * pr[j];
      ri[s] = 0;
      b_[i] -= f * b_[r];
    }
  }

  void pivot(int r, int s) {
    pivot_rows(r, s);
    const std::vector<Rational>& pr = rows_[r];
    auto update = [&](std::vector<Rational>& d, Rational& obj) {
      const Rational f = d[s];
      if (f == 0) return;
      obj += f * b_[r];
      for (std::size_t j = 0; j < d.size(); ++j)
        if (pr[j] != 0) d[j] -= f * pr[j];
      d[s] = 0;
    };
    update(d1_, obj1_);
    update(d2_, obj2_);
    basis_[r] = s;
  }

  // Bland's rule: entering column is the lowest-index eligible column with a
  // negative reduced cost; the leaving row breaks ratio ties by the lowest
  // basic column index. Guarantees termination.
  bool run_phase(bool phase1) {
    std::vector<Rational>& d = phase1 ? d1_ : d2_;
    for (;;) {
      int s = -1;
      for (std::size_t j = 0; j < cols_.size(); ++j)
        if (enterable_[j] && d[j] < 0) {
          s = static_cast<int>(j);
          break;
        }
      if (s < 0) return true;  // optimal for this phase
      int r = -1;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][s] <= 0) continue;
        Rational ratio = b_[i] / rows_[i][s];
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      if (r < 0) return false;  // unbounded direction
      pivot(r, s);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (cols_[basis_[i]].kind != Column::Kind::artificial) continue;
      int s = -1;
      for (std::size_t j = 0; j < cols_.size(); ++j)
        if (cols_[j].kind != Column::Kind::artificial && rows_[i][j] != 0) {
          s = static_cast<int>(j);
          break;
        }
      if (s < 0) continue;  // redundant row; artificial stays basic at zero
      pivot(static_cast<int>(i), s);
    }
  }

  LpOutcome extract() const {
    std::vector<Rational> x(problem_.num_vars(), Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Column& c = cols_[basis_[i]];
      if (c.kind == Column::Kind::structural) x[c.var] += Rational(c.sign) * b_[i];
    }
    Rational value(0);
    for (std::size_t j = 0; j < problem_.num_vars(); ++j)
      if (x[j] != 0) value += problem_.objective[j] * x[j];

    return LpOptimal{value, std::move(x), extract_duals()};
  }

  // y satisfies y^T B = c_B for the final basis B. Unit columns of the
  // (normalized) input tableau give y components directly through their
  // reduced costs; rows not covered that way fall back to an exact solve.
  std::vector<Rational> extract_duals() const {
    const std::size_t m = rows_.size();
    std::vector<Rational> y(m, Rational(0));
    if (m == 0) return y;
    std::vector<bool> have(m, false);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      int unit_row = -1;
      int sign = 0;
      bool is_unit = true;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& a = orig_[i][j];
        if (a == 0) continue;
        if (unit_row >= 0 || (a != 1 && a != -1)) {
          is_unit = false;
          break;
        }
        unit_row = static_cast<int>(i);
        sign = a == 1 ? +1 : -1;
      }
      if (!is_unit || unit_row < 0 || have[unit_row]) continue;
      y[unit_row] = Rational(sign) * (cost2_[j] - d2_[j]);
      have[unit_row] = true;
    }
    bool all = true;
    for (bool h : have) all = all && h;
    if (!all) y = solve_duals_exactly();
    for (std::size_t i = 0; i < m; ++i)
      if (flip_[i] < 0) y[i] = -y[i];
    return y;
  }

  std::vector<Rational> solve_duals_exactly() const {
    const std::size_t m = rows_.size();
    // solve B^T y = c_B by Gaussian elimination on the original basis columns
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r = 0; r < m; ++r) a[i][r] = orig_[r][basis_[i]];  // row i of B^T
      a[i][m] = cost2_[basis_[i]];
    }
    std::vector<int> pivot_col(m, -1);
    for (std::size_t col = 0, row = 0; col < m && row < m; ++col) {
      std::size_t p = row;
      while (p < m && a[p][col] == 0) ++p;
      if (p == m) continue;
      std::swap(a[p], a[row]);
      const Rational inv = 1 / a[row][col];
      for (auto& v : a[row]) v *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == row || a[i][col] == 0) continue;
        const Rational f = a[i][col];
        for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
      }
      pivot_col[row] = static_cast<int>(col);
      ++row;
    }
    std::vector<Rational> y(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (pivot_col[i] >= 0) y[pivot_col[i]] = a[i][m];
    return y;
  }
};

}  // namespace lp_detail

/// Two-phase exact simplex with Bland's rule. Deterministic; always
/// terminates.
inline LpOutcome solve(const LpProblem& p) {
  lp_detail::Simplex s(p);
  return s.solve_two_phase();
}

/// Simplex warm-started from a known feasible basis, given as indices of
/// nonnegative variables (one per row). Falls back to the two-phase path if
/// the hint is not a feasible basis.
inline LpOutcome solve(const LpProblem& p, std::span<const int> basis_hint) {
  {
    lp_detail::Simplex s(p);
    if (auto out = s.solve_with_basis(basis_hint)) return *out;
  }
  lp_detail::Simplex s(p);
  return s.solve_two_phase();
}

/**
 * Exact certificate check for an optimal outcome: primal feasibility, dual
 * feasibility (sign conditions per row kind, reduced-cost conditions per
 * variable bound), and equality of primal and dual objectives.
 * Throws when the outcome is not optimal.
 */
inline bool verify_certificate(const LpProblem& p, const LpOutcome& o) {
  const LpOptimal* opt = std::get_if<LpOptimal>(&o);
  if (!opt) throw std::invalid_argument("verify_certificate: outcome is not optimal");
  p.validate();
  const std::size_t n = p.num_vars();
  const std::size_t m = p.num_rows();
  if (opt->primal.size() != n || opt->dual.size() != m) return false;

  for (std::size_t j = 0; j < n; ++j)
    if (p.variable_bounds[j] == VarBound::nonneg && opt->primal[j] < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < n; ++j) lhs += p.constraint_matrix[i][j] * opt->primal[j];
    switch (p.row_kinds[i]) {
      case RowKind::le:
        if (lhs > p.rhs[i]) return false;
        break;
      case RowKind::eq:
        if (lhs != p.rhs[i]) return false;
        break;
      case RowKind::ge:
        if (lhs < p.rhs[i]) return false;
        break;
    }
  }

  Rational primal_obj(0);
  for (std::size_t j = 0; j < n; ++j) primal_obj += p.objective[j] * opt->primal[j];
  if (primal_obj != opt->value) return false;

  for (std::size_t i = 0; i < m; ++i) {
    if (p.row_kinds[i] == RowKind::le && opt->dual[i] > 0) return false;
    if (p.row_kinds[i] == RowKind::ge && opt->dual[i] < 0) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational reduced = p.objective[j];
    for (std::size_t i = 0; i < m; ++i) reduced -= opt->dual[i] * p.constraint_matrix[i][j];
    if (p.variable_bounds[j] == VarBound::nonneg && reduced < 0) return false;
    if (p.variable_bounds[j] == VarBound::free_var && reduced != 0) return false;
  }

  Rational dual_obj(0);
  for (std::size_t i = 0; i < m; ++i) dual_obj += p.rhs[i] * opt->dual[i];
  return dual_obj == opt->value;
}

}  // namespace seminorm_lab
