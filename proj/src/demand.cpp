#include "demtype/demand.hpp"

#include <algorithm>

namespace demtype {

bool DemandResult::contains(Bundle s) const {
  return std::binary_search(maximizers.begin(), maximizers.end(), s);
}

Rational buyer_utility(const SetFunction& f, const PriceVector& p, Bundle s) { return f(s) - p.total(s); }

DemandResult demand_set(const SetFunction& f, const PriceVector& p) {
  if (p.size() != f.n()) throw ValidationError("price vector has " + std::to_string(p.size()) + " entries, expected " + std::to_string(f.n()));
  DemandResult out;
  out.prices = p;
  out.max_utility = Rational(0);
  out.maximizers.push_back(Bundle());
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  // Incremental price totals: total(w) = total(w without lowest bit) + price of that bit.
  std::vector<Rational> totals(size);
  for (std::uint32_t w = 1; w < size; ++w) {
    const int low = std::countr_zero(w);
    totals[w] = totals[w & (w - 1)] + p[low + 1];
    Rational u = f(Bundle(w)) - totals[w];
    if (u > out.max_utility) {
      out.max_utility = std::move(u);
      out.maximizers.assign(1, Bundle(w));
    } else if (u == out.max_utility) {
      out.maximizers.push_back(Bundle(w));
    }
  }
  return out;
}

Bundle demand_query_brute(const SetFunction& f, const PriceVector& p, TieRule rule) {
  const DemandResult d = demand_set(f, p);
  if (rule == TieRule::LowestWord) return d.maximizers.front();
  Bundle best = d.maximizers.front();
  for (Bundle s : d.maximizers) {
    if (f(s) > f(best)) best = s;
  }
  return best;
}

}  // namespace demtype
