#pragma once

#include <vector>

#include "demtype/set_function.hpp"

namespace demtype {

/// D_f(p) with every maximizer listed in ascending bundle-word order.
struct DemandResult {
  PriceVector prices;
  std::vector<Bundle> maximizers;
  Rational max_utility;

  bool contains(Bundle s) const;
};

enum class TieRule { LowestWord, MaxValueThenLowestWord };

/// f(S) - sum_{i in S} p_i.
Rational buyer_utility(const SetFunction& f, const PriceVector& p, Bundle s);

/// Exhaustive enumeration over all 2^n bundles.
DemandResult demand_set(const SetFunction& f, const PriceVector& p);

Bundle demand_query_brute(const SetFunction& f, const PriceVector& p, TieRule rule);

}  // namespace demtype
