#include "demtype/simplex.hpp"

#include <stdexcept>

namespace demtype {

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars()) throw std::invalid_argument("row width does not match variable count");
  rows.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

using Sense = LinearProgram::Sense;

struct Tableau {
  int m = 0;
  int cols = 0;                           // excluding the rhs column
  std::vector<std::vector<mpq_class>> a;  // m rows of cols + 1 entries, rhs last
  std::vector<mpq_class> cost;            // reduced costs; cost[cols] = -objective
  std::vector<int> basis;
  int pivots = 0;

  void pivot(int r, int e) {
    ++pivots;
    auto& pr = a[r];
    const mpq_class inv = 1 / pr[e];
    for (auto& x : pr) {
      if (sgn(x) != 0) x *= inv;
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      const mpq_class factor = row[e];
      if (sgn(factor) == 0) return;
      for (int j = 0; j <= cols; ++j) {
        if (sgn(pr[j]) != 0) row[j] -= factor * pr[j];
      }
    };
    for (int i = 0; i < m; ++i) {
      if (i != r) eliminate(a[i]);
    }
    eliminate(cost);
    basis[r] = e;
  }

  void set_objective(const std::vector<mpq_class>& c) {
    cost.assign(cols + 1, 0);
    for (int j = 0; j < cols; ++j) cost[j] = c[j];
    for (int i = 0; i < m; ++i) {
      const mpq_class& cb = c[basis[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= cols; ++j) cost[j] -= cb * a[i][j];
    }
  }

  // Bland's rule: lowest improving column enters, lowest basic index leaves
  // among ratio ties. Returns false when the objective is unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      int e = -1;
      for (int j = 0; j < cols && e < 0; ++j) {
        if (allowed[j] && sgn(cost[j]) > 0) e = j;
      }
      if (e < 0) return true;
      int r = -1;
      mpq_class best;
      for (int i = 0; i < m; ++i) {
        if (sgn(a[i][e]) <= 0) continue;
        mpq_class ratio = a[i][cols] / a[i][e];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r < 0) return false;
      pivot(r, e);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const int nv = lp.num_vars();
  const int m = static_cast<int>(lp.rows.size());

  // Columns: structural (free variables split into a +/- pair), one slack or
  // surplus per inequality, one artificial per = or >= row.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int cols = 0;
  for (int v = 0; v < nv; ++v) {
    pos_col[v] = cols++;
    if (lp.free[v]) neg_col[v] = cols++;
  }

  // Rows are negated where needed so every rhs is nonnegative.
  std::vector<int> sign(m, 1);
  std::vector<Sense> sense(m);
  for (int i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs.sign() < 0) {
      sign[i] = -1;
      if (sense[i] == Sense::LessEq) sense[i] = Sense::GreaterEq;
      else if (sense[i] == Sense::GreaterEq) sense[i] = Sense::LessEq;
    }
  }
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (sense[i] != Sense::Equal) slack_col[i] = cols++;
  }
  const int first_art = cols;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != Sense::LessEq) art_col[i] = cols++;
  }

  Tableau t;
  t.m = m;
  t.cols = cols;
  t.a.assign(m, std::vector<mpq_class>(cols + 1, 0));
  t.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    auto& tr = t.a[i];
    for (int v = 0; v < nv; ++v) {
      const mpq_class coef = sign[i] * row.coeffs[v].raw();
      tr[pos_col[v]] = coef;
      if (neg_col[v] >= 0) tr[neg_col[v]] = -coef;
    }
    tr[cols] = sign[i] * row.rhs.raw();
    if (sense[i] == Sense::LessEq) {
      tr[slack_col[i]] = 1;
      t.basis[i] = slack_col[i];
    } else {
      if (sense[i] == Sense::GreaterEq) tr[slack_col[i]] = -1;
      tr[art_col[i]] = 1;
      t.basis[i] = art_col[i];
    }
  }

  LpResult result;
  std::vector<bool> allowed(cols, true);

  if (first_art < cols) {
    std::vector<mpq_class> phase1(cols, 0);
    for (int j = first_art; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.run(allowed);
    if (sgn(t.cost[cols]) != 0) {
      result.status = LpResult::Status::Infeasible;
      result.pivots = t.pivots;
      return result;
    }
    // Pivot zero-level artificials out of the basis; a row with no usable
    // column is redundant and is dropped.
    for (int i = 0; i < t.m;) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      int e = -1;
      for (int j = 0; j < first_art && e < 0; ++j) {
        if (sgn(t.a[i][j]) != 0) e = j;
      }
      if (e >= 0) {
        t.pivot(i, e);
        ++i;
      } else {
        t.a.erase(t.a.begin() + i);
        t.basis.erase(t.basis.begin() + i);
        --t.m;
      }
    }
    for (int j = first_art; j < cols; ++j) allowed[j] = false;
  }

  std::vector<mpq_class> phase2(cols, 0);
  for (int v = 0; v < nv; ++v) {
    phase2[pos_col[v]] = lp.objective[v].raw();
    if (neg_col[v] >= 0) phase2[neg_col[v]] = -lp.objective[v].raw();
  }
  t.set_objective(phase2);
  const bool bounded = t.run(allowed);
  result.pivots = t.pivots;
  if (!bounded) {
    result.status = LpResult::Status::Unbounded;
    return result;
  }

  std::vector<mpq_class> colval(cols, 0);
  for (int i = 0; i < t.m; ++i) colval[t.basis[i]] = t.a[i][cols];
  result.status = LpResult::Status::Optimal;
  for (int v = 0; v < nv; ++v) {
    mpq_class x = colval[pos_col[v]];
    if (neg_col[v] >= 0) x -= colval[neg_col[v]];
    result.x.emplace_back(std::move(x));
  }
  result.value = Rational(mpq_class(-t.cost[cols]));
  return result;
}

}  // namespace demtype
