#pragma once

#include <vector>

#include "demtype/rational.hpp"

namespace demtype {

/// Dense linear program over the rationals: maximize c.x subject to rows
/// a.x (<=, =, >=) b. Variables are nonnegative unless marked free.
struct LinearProgram {
  enum class Sense { LessEq, Equal, GreaterEq };
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense = Sense::LessEq;
    Rational rhs;
  };

  explicit LinearProgram(int num_vars) : objective(static_cast<std::size_t>(num_vars)), free(static_cast<std::size_t>(num_vars), false) {}

  int num_vars() const { return static_cast<int>(objective.size()); }
  void add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs);

  std::vector<Rational> objective;
  std::vector<bool> free;
  std::vector<Row> rows;
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
  int pivots = 0;
};

/// Two-phase primal simplex with Bland's rule; exact, so it terminates and
/// never misjudges feasibility.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace demtype
