#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "demtype/covers.hpp"
#include "demtype/set_function.hpp"

namespace demtype {

class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Prices at which the demand set is exactly {S, T}.
struct StrictFeasibilityWitness {
  Bundle s;
  Bundle t;
  PriceVector prices;
  /// u(S) minus the best utility of any other bundle at `prices`; positive.
  Rational margin;
};

/// Decides whether some p has D_f(p) = {S, T} by maximizing the slack eps of
/// u(S) = u(T) >= u(U) + eps over every other U (eps <= 1). Bundles are added
/// to the program lazily as the current optimizer violates them; a cheap
/// exchange condition rejects most impossible pairs before any pivoting.
std::optional<StrictFeasibilityWitness> strict_two_set_feasible(const SetFunction& f, Bundle s, Bundle t);

/// Necessary condition for D_f(p) = {S, T}: every other pair U, W with
/// chi_U + chi_W = chi_S + chi_T has f(U) + f(W) < f(S) + f(T).
bool passes_exchange_filter(const SetFunction& f, Bundle s, Bundle t);

struct MinimalCover {
  DemandCover cover;
  /// Keyed by v; the witness has chi_{w.s} - chi_{w.t} = v.
  std::map<CoverVector, StrictFeasibilityWitness> witnesses;
};

/// V(f): all chi_S - chi_T over pairs with a strict two-set witness.
MinimalCover minimal_cover(const SetFunction& f);

struct ClassFlags {
  bool gs = false;
  bool gc = false;
  bool gsc = false;
  std::optional<std::pair<Bundle, Bundle>> gsc_partition;
  bool gsc_plus = false;
  bool asc = false;
  int min_delta = 1;
  bool supermodular = false;
  bool ultra = false;
  bool monotone = false;
};

/// Class memberships read off V(f), with supermodularity and ultra also
/// checked from their definitions. Throws InconsistencyError when the two
/// views disagree.
ClassFlags classify(const SetFunction& f);
ClassFlags classify(const SetFunction& f, const DemandCover& minimal);

/// f(j|S) <= f(j|T) for all S subset of T, j not in T.
bool is_supermodular_def(const SetFunction& f);
/// For |S| <= |T| and x in S\T some y in T\S satisfies
/// f(S) + f(T) <= f(S - x + y) + f(T - y + x).
bool is_ultra_def(const SetFunction& f);

struct PiercingReport {
  bool piercing = true;
  enum class Violation { None, MultiFacet, PersistentTie };
  Violation violation = Violation::None;
  std::optional<Rational> alpha;  // where the violation was found
  std::vector<Bundle> tied;       // demand set there
  Rational tied_agent_utility;    // common alpha f(S) - c(S) of the tied bundles
  bool alpha_one_included = true;
};

/// Whether the ray {x c : x >= 1} meets the indifference locus one facet at a
/// time: demand of size 2 at every envelope breakpoint in (0,1] and size 1
/// strictly between breakpoints. Throws ValidationError for c = 0.
PiercingReport facet_piercing(const SetFunction& f, const CostVector& c);
/// Reference procedure: demand at every pairwise tie alpha in (0,1], and at
/// points between consecutive tie alphas.
PiercingReport facet_piercing_pairwise(const SetFunction& f, const CostVector& c);

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct FacetSegment2D {
  Point2 from;
  Point2 to;
  CoverVector normal;  // chi_S - chi_T
  Bundle s;
  Bundle t;
};

struct ClipBox {
  Rational lo = Rational(0);
  Rational hi = Rational(4);
};

/// Facet segments of the indifference locus of a two-item function inside the
/// square [lo, hi]^2. Degenerate (single point) pieces are dropped.
std::vector<FacetSegment2D> lip2d(const SetFunction& f, const ClipBox& box = {});

}  // namespace demtype
