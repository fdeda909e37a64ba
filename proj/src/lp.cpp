#include "clutterlab/lp.hpp"

#include <optional>

#include "clutterlab/error.hpp"

namespace clutterlab {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error("malformed rational '" + text + "'");
  r.canonicalize();
  return r;
}

void LinearProgram::add_constraint(std::vector<Rational> row, Sense sense, Rational value) {
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (rows.size() != senses.size() || rows.size() != rhs.size()) throw Error("LP: constraint arrays differ in length");
  for (const auto& r : rows) {
    if (r.size() != n) throw Error("LP: constraint row length does not match variable count");
  }
  if (!lower_bounds.empty() && lower_bounds.size() != n) throw Error("LP: lower bound vector has wrong length");
}

namespace {

// Dense simplex tableau. Column layout: structural variables, then slack /
// surplus columns, then artificials; the last column is the right-hand side.
// The objective row is minimized.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), cols_(cols), t_(rows + 1, std::vector<Rational>(cols + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  Rational& cost(std::size_t c) { return t_[m_][c]; }
  Rational& objective_value() { return t_[m_][cols_]; }

  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis[r] = c;
  }

  // Bland's rule on the columns in [0, active_cols). Returns false if unbounded.
  bool optimize(std::size_t active_cols) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < active_cols; ++j) {
        if (cost(j) < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, *enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void remove_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  std::size_t rows() const { return m_; }

 private:
  std::size_t m_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
};

}  // namespace

LpResult solve_lp_exact(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_variables();
  const std::size_t m = lp.num_constraints();
  std::vector<Rational> lower = lp.lower_bounds.empty() ? std::vector<Rational>(n) : lp.lower_bounds;

  // Shift x = lower + x', normalize every row to a non-negative right-hand side.
  std::vector<std::vector<Rational>> a = lp.rows;
  std::vector<Rational> b = lp.rhs;
  std::vector<Sense> sense = lp.senses;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i] -= a[i][j] * lower[j];
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
      if (sense[i] == Sense::less_equal) {
        sense[i] = Sense::greater_equal;
      } else if (sense[i] == Sense::greater_equal) {
        sense[i] = Sense::less_equal;
      }
    }
  }

  std::size_t num_slack = 0, num_art = 0;
  for (Sense s : sense) {
    if (s != Sense::equal) ++num_slack;
    if (s != Sense::less_equal) ++num_art;
  }
  const std::size_t art_begin = n + num_slack;
  const std::size_t cols = art_begin + num_art;
  Tableau t(m, cols);
  t.basis.assign(m, 0);

  std::size_t slack = n, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = a[i][j];
    t.rhs(i) = b[i];
    if (sense[i] == Sense::less_equal) {
      t.at(i, slack) = 1;
      t.basis[i] = slack++;
    } else {
      if (sense[i] == Sense::greater_equal) t.at(i, slack++) = -1;
      t.at(i, art) = 1;
      t.basis[i] = art++;
    }
  }

  // Phase 1: minimize the sum of artificials, priced out against the basis.
  if (num_art > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < art_begin) continue;
      for (std::size_t j = 0; j < art_begin; ++j) t.cost(j) -= t.at(i, j);
      t.objective_value() -= t.rhs(i);
    }
    t.optimize(art_begin);
    if (t.objective_value() != 0) return LpInfeasible{};
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis[i] < art_begin) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (t.at(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.remove_row(i);  // redundant equality
      }
    }
  }

  // Phase 2 objective row: c_j - c_B B^-1 A_j over non-artificial columns.
  const Rational sign = lp.direction == Direction::minimize ? 1 : -1;
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j == cols) {
      t.objective_value() = 0;
    } else {
      t.cost(j) = j < n ? sign * lp.objective[j] : Rational(0);
    }
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t bcol = t.basis[i];
    Rational cb = t.cost(bcol);
    if (cb == 0) continue;
    for (std::size_t j = 0; j < art_begin; ++j) t.cost(j) -= cb * t.at(i, j);
    t.objective_value() -= cb * t.rhs(i);
  }
  // Artificial columns stay out of phase 2.
  if (!t.optimize(art_begin)) return LpUnbounded{};

  LpOptimal opt;
  opt.x = lower;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis[i] < n) opt.x[t.basis[i]] += t.rhs(i);
  }
  opt.value = 0;
  for (std::size_t j = 0; j < n; ++j) opt.value += lp.objective[j] * opt.x[j];
  return opt;
}

namespace {

struct BranchAndBound {
  const LinearProgram& root;
  std::size_t node_limit;
  std::size_t nodes = 0;
  std::optional<LpOptimal> incumbent;
  bool unbounded = false;

  bool better(const Rational& a, const Rational& b) const {
    return root.direction == Direction::minimize ? a < b : a > b;
  }

  void solve(const LinearProgram& lp) {
    if (++nodes > node_limit) throw InstanceTooLarge("branch-and-bound node limit exceeded");
    LpResult r = solve_lp_exact(lp);
    if (std::holds_alternative<LpInfeasible>(r)) return;
    if (std::holds_alternative<LpUnbounded>(r)) {
      unbounded = true;
      return;
    }
    auto& opt = std::get<LpOptimal>(r);
    if (incumbent && !better(opt.value, incumbent->value)) return;
    std::optional<std::size_t> frac;
    for (std::size_t j = 0; j < opt.x.size(); ++j) {
      if (!is_integer(opt.x[j])) {
        frac = j;
        break;
      }
    }
    if (!frac) {
      incumbent = std::move(opt);
      return;
    }
    const std::size_t j = *frac;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), opt.x[j].get_num_mpz_t(), opt.x[j].get_den_mpz_t());
    std::vector<Rational> unit(lp.num_variables());
    unit[j] = 1;

    LinearProgram down = lp;
    down.add_constraint(unit, Sense::less_equal, Rational(fl));
    solve(down);
    if (unbounded) return;
    LinearProgram up = lp;
    up.add_constraint(unit, Sense::greater_equal, Rational(fl + 1));
    solve(up);
  }
};

}  // namespace

LpResult solve_ilp_exact(const LinearProgram& lp, std::size_t node_limit) {
  lp.validate();
  BranchAndBound bb{lp, node_limit, 0, std::nullopt, false};
  bb.solve(lp);
  if (bb.unbounded) return LpUnbounded{};
  if (!bb.incumbent) return LpInfeasible{};
  return *bb.incumbent;
}

}  // namespace clutterlab
