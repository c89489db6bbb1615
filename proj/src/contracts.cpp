#include "demtype/contracts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace demtype {

Rational agent_utility(const SetFunction& f, const CostVector& c, const Rational& alpha, Bundle s) {
  return alpha * f(s) - cost_of(c, s);
}

Rational principal_utility(const SetFunction& f, const Rational& alpha, Bundle s) { return (Rational(1) - alpha) * f(s); }

namespace {

void check_inputs(const SetFunction& f, const CostVector& c) {
  if (c.size() != f.n()) throw ValidationError("cost vector dimension does not match the set function");
}

}  // namespace

Bundle best_response(const SetFunction& f, const CostVector& c, const Rational& alpha) {
  check_inputs(f, c);
  if (alpha.sign() < 0 || alpha > Rational(1)) throw ValidationError("contract parameter must lie in [0,1], got " + alpha.str());
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  std::vector<Rational> costs(size);
  Bundle best;
  Rational best_u;  // u(empty) = 0
  for (std::uint32_t w = 1; w < size; ++w) {
    costs[w] = costs[w & (w - 1)] + c[std::countr_zero(w) + 1];
    const Bundle s(w);
    Rational u = alpha * f(s) - costs[w];
    if (u > best_u || (u == best_u && f(s) > f(best))) {
      best = s;
      best_u = std::move(u);
    }
  }
  return best;
}

CriticalValues critical_values(const SetFunction& f, const CostVector& c) {
  check_inputs(f, c);
  CriticalValues out;
  auto br = [&](const Rational& alpha) {
    ++out.best_response_queries;
    return best_response(f, c, alpha);
  };
  out.at_zero = br(Rational(0));
  const Bundle at_one = br(Rational(1));

  std::function<void(const Rational&, Bundle, const Rational&, Bundle)> solve =
      [&](const Rational& lo, Bundle s_lo, const Rational& hi, Bundle s_hi) {
        if (s_lo == s_hi) return;
        const Rational df = f(s_hi) - f(s_lo);
        // Equal slopes here force identical lines: no breakpoint.
        if (df.is_zero()) return;
        const Rational alpha = (cost_of(c, s_hi) - cost_of(c, s_lo)) / df;
        const Bundle mid = br(alpha);
        const Rational tie = agent_utility(f, c, alpha, s_lo);
        if (agent_utility(f, c, alpha, mid) == tie) {
          out.points.push_back({alpha, s_lo, s_hi, tie});
          return;
        }
        solve(lo, s_lo, alpha, mid);
        solve(alpha, mid, hi, s_hi);
      };
  solve(Rational(0), out.at_zero, Rational(1), at_one);
  return out;
}

ContractSolution optimal_contract(const SetFunction& f, const CostVector& c) {
  const CriticalValues cv = critical_values(f, c);
  ContractSolution sol;
  sol.alpha_star = Rational(0);
  sol.bundle = cv.at_zero;
  sol.principal_utility = principal_utility(f, sol.alpha_star, sol.bundle);
  for (const auto& p : cv.points) {
    Rational up = principal_utility(f, p.alpha, p.set_after);
    if (up > sol.principal_utility) {
      sol.alpha_star = p.alpha;
      sol.bundle = p.set_after;
      sol.principal_utility = std::move(up);
    }
  }
  sol.agent_utility = agent_utility(f, c, sol.alpha_star, sol.bundle);
  sol.criticals = cv.points;
  sol.best_response_queries = cv.best_response_queries;
  return sol;
}

PotentialAudit audit_potential(const SetFunction& f, const CostVector& c) {
  return audit_potential(f, c, critical_values(f, c));
}

PotentialAudit audit_potential(const SetFunction& f, const CostVector& c, const CriticalValues& cv) {
  check_inputs(f, c);
  const int n = f.n();
  PotentialAudit audit;
  audit.relabel.resize(static_cast<std::size_t>(n));
  std::iota(audit.relabel.begin(), audit.relabel.end(), 1);
  std::stable_sort(audit.relabel.begin(), audit.relabel.end(), [&](int a, int b) { return c[a] < c[b]; });
  std::vector<long> rank(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) rank[static_cast<std::size_t>(audit.relabel[static_cast<std::size_t>(k)])] = k + 1;
  for (int k = 1; k < n; ++k) {
    if (c[audit.relabel[static_cast<std::size_t>(k - 1)]] == c[audit.relabel[static_cast<std::size_t>(k)]]) audit.costs_distinct = false;
  }
  auto phi = [&](Bundle s) {
    long total = 0;
    for (int i : s.items()) total += rank[static_cast<std::size_t>(i)];
    return Rational(total);
  };

  audit.critical_count = cv.points.size();
  audit.bound = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
  audit.potentials.push_back(phi(cv.at_zero));

  auto fail = [&](const char* which, std::string detail) {
    audit.passed = false;
    if (audit.first_violation.empty()) {
      audit.first_violation = which;
      audit.detail = std::move(detail);
    }
  };

  for (const auto& p : cv.points) {
    const std::string where = "at alpha=" + p.alpha.str() + " (" + p.set_before.str() + " -> " + p.set_after.str() + ")";
    if (cost_of(c, p.set_after) < cost_of(c, p.set_before)) {
      audit.cost_monotone = false;
      fail("cost", "cost decreases " + where);
    }
    if (f(p.set_after) < f(p.set_before)) {
      audit.value_monotone = false;
      fail("value", "value decreases " + where);
    }
    const Rational before = phi(p.set_before);
    const Rational after = phi(p.set_after);
    audit.potentials.push_back(after);
    if (!(after > before)) {
      audit.potential_increasing = false;
      fail("potential", "potential " + before.str() + " -> " + after.str() + " " + where);
    }
  }
  if (audit.critical_count > audit.bound) {
    audit.within_bound = false;
    fail("bound", std::to_string(audit.critical_count) + " critical values exceed n(n+1)/2 = " + std::to_string(audit.bound));
  }
  return audit;
}

}  // namespace demtype
