#include "demtype/walkquery.hpp"

#include "demtype/demand.hpp"

namespace demtype {

CoverViolation::CoverViolation(int step, Bundle from, const std::string& detail)
    : std::runtime_error("cover violation at step " + std::to_string(step) + " from " + from.str() + ": " + detail),
      step_(step),
      from_(from) {}

std::size_t walk_query_bound(const DemandCover& cover) {
  return adjacent_bundles(cover, Bundle()).size() + static_cast<std::size_t>(cover.n()) * (cover.size() + 1);
}

WalkResult demand_query_walk(const DemandCover& cover, const ValueOracle& oracle, const PriceVector& p,
                             WalkOptions options) {
  const int n = oracle.n();
  if (cover.n() != n) throw ValidationError("cover dimension does not match the set function");
  if (p.size() != n) throw ValidationError("price vector dimension does not match the set function");

  const std::size_t start_count = oracle.query_count();
  WalkResult result;
  WalkTrace& trace = result.trace;

  // M >= 0 keeps the empty bundle optimal among its neighbours at p^0 even
  // when every neighbour has negative value.
  Rational m(0);
  for (Bundle t : adjacent_bundles(cover, Bundle())) {
    if (t.empty()) continue;
    Rational v = oracle.query(t);
    if (v > m) m = std::move(v);
  }
  trace.M = m;

  PriceVector prices = PriceVector::uniform(n, m);
  Bundle current;
  trace.waypoints.push_back({prices, current});

  for (int i = 1; i <= n; ++i) {
    prices[i] = p[i];
    Bundle best = current;
    Rational best_u;
    bool first = true;
    for (Bundle t : adjacent_bundles(cover, current)) {
      Rational u = oracle.query(t) - prices.total(t);
      if (first || u > best_u) {
        best = t;
        best_u = std::move(u);
        first = false;
      }
    }
    if (options.validate) {
      const DemandResult truth = demand_set(oracle.function(), prices);
      if (best_u != truth.max_utility) {
        throw CoverViolation(i, current,
                             "best adjacent utility " + best_u.str() + " below demand utility " + truth.max_utility.str());
      }
    }
    current = best;
    trace.waypoints.push_back({prices, current});
  }

  trace.value_query_count = oracle.query_count() - start_count;
  result.bundle = current;
  return result;
}

}  // namespace demtype
