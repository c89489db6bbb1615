#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demtype/set_function.hpp"

namespace demtype {

/// alpha f(S) - c(S).
Rational agent_utility(const SetFunction& f, const CostVector& c, const Rational& alpha, Bundle s);
/// (1 - alpha) f(S).
Rational principal_utility(const SetFunction& f, const Rational& alpha, Bundle s);

/// Agent's best response at alpha in [0,1]: maximize alpha f(S) - c(S), break
/// ties toward larger f(S) (the principal's preference), then lowest word. At
/// alpha = 0 this is the cheapest set with the same tie rule.
Bundle best_response(const SetFunction& f, const CostVector& c, const Rational& alpha);

struct CriticalPoint {
  Rational alpha;
  Bundle set_before;
  Bundle set_after;
  Rational agent_utility_at;
};

struct CriticalValues {
  std::vector<CriticalPoint> points;  // ascending alpha, all in (0,1]
  Bundle at_zero;                     // best response at alpha = 0
  std::size_t best_response_queries = 0;
};

/// Eisner-Severance recursion over the upper envelope of the agent's utility
/// lines, seeded with the best responses at 0 and 1.
CriticalValues critical_values(const SetFunction& f, const CostVector& c);

struct ContractSolution {
  Rational alpha_star;
  Bundle bundle;
  Rational principal_utility;
  Rational agent_utility;
  std::vector<CriticalPoint> criticals;
  std::size_t best_response_queries = 0;
};

/// Best linear contract: the principal's utility is maximized at alpha = 0 or
/// at a critical value. Exact ties go to the lowest alpha.
ContractSolution optimal_contract(const SetFunction& f, const CostVector& c);

struct PotentialAudit {
  bool passed = true;
  /// relabel[k] = original item (1-based) that gets rank k+1 in ascending cost
  /// order; equal costs keep original order.
  std::vector<int> relabel;
  std::vector<Rational> potentials;  // Phi of S_0 and of each set_after
  std::size_t critical_count = 0;
  std::size_t bound = 0;  // n(n+1)/2
  bool cost_monotone = true;
  bool value_monotone = true;
  bool potential_increasing = true;
  bool within_bound = true;
  bool costs_distinct = true;
  /// First violated check ("cost", "value", "potential", "bound"), empty if none.
  std::string first_violation;
  std::string detail;
};

/// Walks the critical values and checks cost and value monotonicity of the
/// best response, strict increase of Phi(S) = sum of cost ranks, and the
/// n(n+1)/2 count bound.
PotentialAudit audit_potential(const SetFunction& f, const CostVector& c);
PotentialAudit audit_potential(const SetFunction& f, const CostVector& c, const CriticalValues& criticals);

}  // namespace demtype
