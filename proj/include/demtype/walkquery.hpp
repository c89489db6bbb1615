#pragma once

#include <stdexcept>
#include <vector>

#include "demtype/covers.hpp"
#include "demtype/set_function.hpp"

namespace demtype {

/// Raised in validation mode when no adjacent bundle reaches the true demand
/// utility, meaning f is not covered by the cover passed to the walk.
class CoverViolation : public std::runtime_error {
 public:
  CoverViolation(int step, Bundle from, const std::string& detail);
  int step() const { return step_; }
  Bundle from() const { return from_; }

 private:
  int step_;
  Bundle from_;
};

struct WalkTrace {
  struct Waypoint {
    PriceVector prices;
    Bundle bundle;
  };
  Rational M;
  std::vector<Waypoint> waypoints;  // index i holds (p^i, S_i), i = 0..n
  std::size_t value_query_count = 0;
};

struct WalkResult {
  Bundle bundle;
  WalkTrace trace;
};

struct WalkOptions {
  /// Compare each step against exhaustive demand. Test use only: it reads the
  /// whole table behind the oracle.
  bool validate = false;
};

/// Demand query using only value queries. Starting from the all-M price vector
/// where the empty bundle is demanded, prices are lowered to their targets one
/// coordinate at a time and the demanded bundle is tracked through adjacent
/// bundles of the cover. Exact whenever the cover contains V(f).
WalkResult demand_query_walk(const DemandCover& cover, const ValueOracle& oracle, const PriceVector& p,
                             WalkOptions options = {});

/// Upper bound on value queries: |A(empty)| + n(|V|+1).
std::size_t walk_query_bound(const DemandCover& cover);

}  // namespace demtype
