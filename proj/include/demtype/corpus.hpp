#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "demtype/covers.hpp"
#include "demtype/set_function.hpp"

namespace demtype {

/// Expected outcomes attached to a named instance. Unset fields carry no
/// claim.
struct Expectations {
  std::optional<bool> gs, gc, gsc, gsc_plus, asc, supermodular, ultra;
  std::optional<DemandCover> cover;
  std::optional<std::vector<Rational>> critical_alphas;
  /// Best responses S_0, then the set after each critical value.
  std::optional<std::vector<Bundle>> transitions;
  std::optional<std::size_t> critical_count;
  std::optional<bool> facet_piercing;
  std::optional<Rational> alpha_star;
  std::optional<Bundle> optimal_bundle;
  std::optional<Rational> principal_utility;
};

struct NamedInstance {
  std::string name;
  std::string description;
  SetFunction f;
  std::optional<CostVector> costs;
  Expectations expected;
};

std::vector<std::string> named_instance_names();
/// Throws ValidationError for an unknown name.
NamedInstance make_named(std::string_view name);

/// f(S) = sum of w_u over elements u covered by some item of S. `covers[i]`
/// lists the 0-based elements of item i+1.
SetFunction make_coverage(const std::vector<Rational>& weights, const std::vector<std::vector<int>>& covers);

struct GridConstruction {
  SetFunction f;
  PriceVector prices;  // demand at these prices is {P, N}
  Bundle positive;
  Bundle negative;
};

/// Coverage function on the grid P x N with uniform weights: item p in P
/// covers row {p} x N, item q in N covers column P x {q}, other items cover
/// nothing. Throws ValidationError if P and N overlap or either is empty.
GridConstruction make_coverage_grid(Bundle positive, Bundle negative, int n);

/// f(S) = min(B, sum_{j in S} w_j).
SetFunction make_budget_additive(const std::vector<Rational>& weights, const Rational& budget);

struct BudgetConstruction {
  SetFunction f;
  PriceVector prices;  // demand at these prices is {Q, R}
  Bundle q_set;
  Bundle r_set;
};

/// Q = {1..q}, R = {q+1..q+r}; weights 1/q on Q, 1/r on R, 0 elsewhere;
/// budget 1; prices (1 - 1/(2qr)) w_i on Q and R, 2 elsewhere.
BudgetConstruction make_budget_additive_breadth(int q, int r, int n);

struct WitnessConstruction {
  SetFunction f;
  PriceVector prices;  // demand at these prices is {s, t}
  Bundle s;            // positive support of v
  Bundle t;            // negative support of v
};

/// A function f with v in V(f), together with prices where demand is
/// {positives of v, negatives of v}. Throws ValidationError unless v lies in
/// gen_cover(family, n).
WitnessConstruction make_witness_construction(const CoverFamily& family, const CoverVector& v, int n);
SetFunction make_witness(const CoverFamily& family, const CoverVector& v, int n);

enum class TransitionKind { Insertion, OneSubstitution, TwoSubstitution };
std::string transition_name(TransitionKind kind);

/// Classifies S -> T: insertion adds one item; a costly 1-substitution adds a
/// and removes b < a; a costly 2-substitution adds a, b and removes c, d with
/// b, c, d < a. Returns nothing for any other change.
std::optional<TransitionKind> classify_transition(Bundle from, Bundle to);

struct CounterSequence {
  int n = 0;
  int bits = 0;  // floor(sqrt(n))
  std::size_t states = 0;  // 2^bits
  std::vector<Bundle> sets;  // sets[0] is empty
  std::vector<TransitionKind> kinds;  // kinds[i] describes sets[i] -> sets[i+1]
  std::size_t insertion_prefix = 0;
};

/// Binary counter over floor(sqrt(n)) bits: bit j occupies positions
/// (j-1)l .. jl-1 (0-based, item label = position + 1) and is on when its one
/// selected item sits at the top position. Each increment is a carry chain of
/// costly 2-substitutions followed by one costly 1-substitution (omitted when
/// the carried bit is the top bit). The counter is preceded by inserting the
/// initial state one item at a time. Requires n >= 4.
CounterSequence make_counter_sequence(int n);

struct SuperpolyInstance {
  NamedInstance instance;
  CounterSequence sequence;
  std::vector<Rational> alphas;  // alpha_i = i/(k+1)
};

/// Costs c_i = 2^i; f(S_i) chosen so the ray crosses from S_{i-1} to S_i at
/// alpha_i, completed by f(S) = max over S_i inside S. Requires 4 <= n <= 16.
SuperpolyInstance make_superpoly(int n);
NamedInstance make_superpoly_instance(int n);

enum class RandomKind { Monotone, Supermodular, Symmetric, UnitDemandMax, AscFiltered };
RandomKind parse_random_kind(std::string_view text);
std::string random_kind_name(RandomKind kind);

/// Deterministic generator: the same (kind, n, seed) always yields the same
/// table.
///  - Monotone: each value is the best subset-minus-one value plus a random
///    nonnegative increment.
///  - Supermodular: sums of nonnegative interaction terms over subsets, which
///    makes every marginal nondecreasing.
///  - Symmetric: a random nondecreasing profile of |S|.
///  - UnitDemandMax: max of random item values.
///  - AscFiltered: draws from a mix of dense monotone, sparse monotone and
///    max-of-bundle-bids functions, kept only when V(f) lies in the ASC cover
///    (n <= 5).
SetFunction random_instance(RandomKind kind, int n, std::uint64_t seed);

/// Random positive rational costs, redrawn until facet-piercing for f.
CostVector random_generic_costs(const SetFunction& f, std::uint64_t seed);

/// mt19937_64 with integer draws done by hand: the engine's output is fixed by
/// the standard, the distribution classes are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi] (modulo bias is irrelevant at these ranges).
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace demtype
