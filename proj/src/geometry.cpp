#include "demtype/geometry.hpp"

#include <algorithm>
#include <unordered_set>

#include "demtype/contracts.hpp"
#include "demtype/demand.hpp"
#include "demtype/simplex.hpp"

namespace demtype {

namespace {

// Buyer utilities of every bundle at p.
std::vector<Rational> all_utilities(const SetFunction& f, const PriceVector& p) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  std::vector<Rational> totals(size);
  std::vector<Rational> u(size);
  for (std::uint32_t w = 1; w < size; ++w) {
    totals[w] = totals[w & (w - 1)] + p[std::countr_zero(w) + 1];
    u[w] = f(Bundle(w)) - totals[w];
  }
  return u;
}

constexpr std::size_t kMaxCutsPerRound = 32;

}  // namespace

bool passes_exchange_filter(const SetFunction& f, Bundle s, Bundle t) {
  const std::uint32_t d = s.word() ^ t.word();
  const std::uint32_t common = s.word() & t.word();
  const Rational target = f(s) + f(t);
  const std::uint32_t s_only = s.word() & ~t.word();
  const std::uint32_t t_only = t.word() & ~s.word();
  for (std::uint32_t x = d;; x = (x - 1) & d) {
    if (x != s_only && x != t_only) {
      if (f(Bundle(common | x)) + f(Bundle(common | (d & ~x))) >= target) return false;
    }
    if (x == 0) break;
  }
  return true;
}

std::optional<StrictFeasibilityWitness> strict_two_set_feasible(const SetFunction& f, Bundle s, Bundle t) {
  const int n = f.n();
  if (s == t) throw std::invalid_argument("strict_two_set_feasible needs two distinct bundles");
  if (!s.fits(n) || !t.fits(n)) throw ValidationError("bundle outside [n]");
  if (!passes_exchange_filter(f, s, t)) return std::nullopt;

  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  std::vector<std::uint32_t> active;
  std::vector<char> in_program(size, 0);
  in_program[s.word()] = in_program[t.word()] = 1;
  auto activate = [&](std::uint32_t w) {
    if (w < size && !in_program[w]) {
      in_program[w] = 1;
      active.push_back(w);
    }
  };
  activate(0);
  activate(s.word() | t.word());
  activate(s.word() & t.word());
  for (int i = 0; i < n; ++i) {
    activate(s.word() ^ (1u << i));
    activate(t.word() ^ (1u << i));
  }

  // Variables: p_1..p_n, eps (index n), all free.
  for (;;) {
    LinearProgram lp(n + 1);
    for (int i = 0; i <= n; ++i) lp.free[i] = true;
    lp.objective[n] = Rational(1);
    {
      std::vector<Rational> row(n + 1);
      row[n] = Rational(1);
      lp.add_row(std::move(row), LinearProgram::Sense::LessEq, Rational(1));
    }
    {
      std::vector<Rational> row(n + 1);
      for (int i = 1; i <= n; ++i) row[i - 1] = Rational(static_cast<long>(t.contains(i)) - static_cast<long>(s.contains(i)));
      lp.add_row(std::move(row), LinearProgram::Sense::Equal, f(t) - f(s));
    }
    for (std::uint32_t w : active) {
      const Bundle u(w);
      std::vector<Rational> row(n + 1);
      for (int i = 1; i <= n; ++i) row[i - 1] = Rational(static_cast<long>(u.contains(i)) - static_cast<long>(s.contains(i)));
      row[n] = Rational(-1);
      lp.add_row(std::move(row), LinearProgram::Sense::GreaterEq, f(u) - f(s));
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpResult::Status::Optimal || res.value.sign() <= 0) return std::nullopt;

    PriceVector p(std::vector<Rational>(res.x.begin(), res.x.begin() + n));
    const Rational& eps = res.value;
    const auto u = all_utilities(f, p);
    const Rational& us = u[s.word()];

    std::vector<std::uint32_t> violated;
    std::optional<Rational> best_other;
    for (std::uint32_t w = 0; w < size; ++w) {
      if (w == s.word() || w == t.word()) continue;
      if (!best_other || u[w] > *best_other) best_other = u[w];
      if (us - u[w] < eps) violated.push_back(w);
    }
    if (!best_other || *best_other < us) {
      StrictFeasibilityWitness wit{s, t, std::move(p), best_other ? us - *best_other : eps};
      return wit;
    }
    std::sort(violated.begin(), violated.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (u[a] != u[b]) return u[a] > u[b];
      return a < b;
    });
    if (violated.size() > kMaxCutsPerRound) violated.resize(kMaxCutsPerRound);
    for (std::uint32_t w : violated) activate(w);
  }
}

MinimalCover minimal_cover(const SetFunction& f) {
  const int n = f.n();
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  MinimalCover out;
  std::unordered_set<std::uint64_t> found;
  auto key = [](std::uint32_t plus, std::uint32_t minus) { return (static_cast<std::uint64_t>(plus) << 32) | minus; };
  std::vector<CoverVector> vectors;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      // v = chi_a - chi_b
      const std::uint32_t plus = a & ~b;
      const std::uint32_t minus = b & ~a;
      if (found.count(key(plus, minus))) continue;
      auto wit = strict_two_set_feasible(f, Bundle(a), Bundle(b));
      if (!wit) continue;
      found.insert(key(plus, minus));
      found.insert(key(minus, plus));
      CoverVector v(n, Bundle(plus), Bundle(minus));
      StrictFeasibilityWitness swapped{wit->t, wit->s, wit->prices, wit->margin};
      out.witnesses.emplace(v.negated(), std::move(swapped));
      out.witnesses.emplace(v, std::move(*wit));
      vectors.push_back(v.negated());
      vectors.push_back(std::move(v));
    }
  }
  out.cover = DemandCover(n, std::move(vectors));
  return out;
}

bool is_supermodular_def(const SetFunction& f) {
  const int n = f.n();
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  for (std::uint32_t t = 0; t < size; ++t) {
    for (std::uint32_t s = t;; s = (s - 1) & t) {
      if (s != t) {
        for (int j = 0; j < n; ++j) {
          const std::uint32_t bit = 1u << j;
          if (t & bit) continue;
          if (f(Bundle(s | bit)) - f(Bundle(s)) > f(Bundle(t | bit)) - f(Bundle(t))) return false;
        }
      }
      if (s == 0) break;
    }
  }
  return true;
}

bool is_ultra_def(const SetFunction& f) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  for (std::uint32_t s = 0; s < size; ++s) {
    for (std::uint32_t t = 0; t < size; ++t) {
      if (std::popcount(s) > std::popcount(t)) continue;
      const Rational base = f(Bundle(s)) + f(Bundle(t));
      for (std::uint32_t xs = s & ~t; xs != 0; xs &= xs - 1) {
        const std::uint32_t x = xs & (~xs + 1);
        bool ok = false;
        for (std::uint32_t ys = t & ~s; ys != 0 && !ok; ys &= ys - 1) {
          const std::uint32_t y = ys & (~ys + 1);
          ok = base <= f(Bundle((s & ~x) | y)) + f(Bundle((t & ~y) | x));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

ClassFlags classify(const SetFunction& f) { return classify(f, minimal_cover(f).cover); }

ClassFlags classify(const SetFunction& f, const DemandCover& minimal) {
  const int n = f.n();
  if (minimal.n() != n) throw ValidationError("cover dimension does not match the set function");
  ClassFlags flags;
  flags.supermodular = is_supermodular_def(f);
  flags.ultra = is_ultra_def(f);
  flags.monotone = f.is_monotone();
  if (n == 0) {
    flags.gs = flags.gc = flags.gsc = flags.gsc_plus = flags.asc = true;
    flags.gsc_partition = std::make_pair(Bundle(), Bundle());
    return flags;
  }
  flags.gs = cover_contains(gen_cover(CoverFamily::gs(), n), minimal);
  flags.gc = cover_contains(gen_cover(CoverFamily::gc(), n), minimal);
  flags.gsc_plus = cover_contains(gen_cover(CoverFamily::gsc_plus(), n), minimal);
  flags.asc = cover_contains(gen_cover(CoverFamily::asc(), n), minimal);
  for (const auto& v : minimal.vectors()) flags.min_delta = std::max({flags.min_delta, v.positives(), v.negatives()});

  // Item 1 is fixed in the first part; the trivial split is included.
  const std::uint32_t all = Bundle::full(n).word();
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)) && !flags.gsc; ++rest) {
    const Bundle a1((rest << 1) | 1u);
    const Bundle a2(all & ~a1.word());
    if (cover_contains(gen_cover(CoverFamily::gsc(a1, a2), n), minimal)) {
      flags.gsc = true;
      flags.gsc_partition = std::make_pair(a1, a2);
    }
  }

  if (flags.supermodular != flags.gc) {
    throw InconsistencyError(std::string("supermodularity from the definition is ") + (flags.supermodular ? "true" : "false") +
                             " but gross-complements cover containment is " + (flags.gc ? "true" : "false"));
  }
  if (flags.ultra && !flags.asc) throw InconsistencyError("ultra by definition but V(f) is not inside the ASC cover");
  return flags;
}

namespace {

PiercingReport violation_at(const SetFunction& f, const CostVector& c, const Rational& alpha, const DemandResult& d,
                            PiercingReport::Violation kind) {
  PiercingReport r;
  r.piercing = false;
  r.violation = kind;
  r.alpha = alpha;
  r.tied = d.maximizers;
  r.tied_agent_utility = agent_utility(f, c, alpha, d.maximizers.front());
  return r;
}

void check_cost_input(const SetFunction& f, const CostVector& c) {
  if (c.size() != f.n()) throw ValidationError("cost vector dimension does not match the set function");
  if (c.is_zero()) throw ValidationError("facet-piercing is undefined for the zero cost vector");
}

// Checks |D| <= 2 at each breakpoint and |D| = 1 strictly between, walking
// `breaks` (ascending, in (0,1]) from left to right.
PiercingReport sweep(const SetFunction& f, const CostVector& c, const std::vector<Rational>& breaks) {
  Rational prev(0);
  auto check_between = [&](const Rational& lo, const Rational& hi) -> std::optional<PiercingReport> {
    const Rational mid = (lo + hi) / Rational(2);
    const DemandResult d = demand_set(f, c.prices_at(mid));
    if (d.maximizers.size() >= 2) return violation_at(f, c, mid, d, PiercingReport::Violation::PersistentTie);
    return std::nullopt;
  };
  for (const Rational& a : breaks) {
    if (a > prev) {
      if (auto r = check_between(prev, a)) return *r;
    }
    const DemandResult d = demand_set(f, c.prices_at(a));
    if (d.maximizers.size() >= 3) return violation_at(f, c, a, d, PiercingReport::Violation::MultiFacet);
    prev = a;
  }
  if (prev < Rational(1)) {
    if (auto r = check_between(prev, Rational(1))) return *r;
    const DemandResult d = demand_set(f, c.prices_at(Rational(1)));
    if (d.maximizers.size() >= 3) return violation_at(f, c, Rational(1), d, PiercingReport::Violation::MultiFacet);
  }
  return PiercingReport{};
}

}  // namespace

PiercingReport facet_piercing(const SetFunction& f, const CostVector& c) {
  check_cost_input(f, c);
  const CriticalValues cv = critical_values(f, c);
  std::vector<Rational> breaks;
  for (const auto& p : cv.points) breaks.push_back(p.alpha);
  return sweep(f, c, breaks);
}

PiercingReport facet_piercing_pairwise(const SetFunction& f, const CostVector& c) {
  check_cost_input(f, c);
  const std::uint32_t size = static_cast<std::uint32_t>(f.table_size());
  std::vector<Rational> breaks;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      const Rational df = f(Bundle(a)) - f(Bundle(b));
      if (df.is_zero()) continue;
      Rational alpha = (cost_of(c, Bundle(a)) - cost_of(c, Bundle(b))) / df;
      if (alpha.sign() > 0 && alpha <= Rational(1)) breaks.push_back(std::move(alpha));
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return sweep(f, c, breaks);
}

namespace {

struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty = false;

  // Intersects with {t : k + m t >= 0}.
  void require(const Rational& k, const Rational& m) {
    if (m.is_zero()) {
      if (k.sign() < 0) empty = true;
      return;
    }
    const Rational bound = -k / m;
    if (m.sign() > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
};

}  // namespace

std::vector<FacetSegment2D> lip2d(const SetFunction& f, const ClipBox& box) {
  if (f.n() != 2) throw ValidationError("lip2d needs a two-item set function");
  if (!(box.lo < box.hi)) throw ValidationError("clip box must have lo < hi");
  std::vector<FacetSegment2D> out;
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = a + 1; b < 4; ++b) {
      const Bundle s(a);
      const Bundle t(b);
      const CoverVector normal = CoverVector::difference(2, s, t);
      const Rational a1(normal[1]);
      const Rational a2(normal[2]);
      const Rational rhs = f(s) - f(t);
      // Line a . p = rhs, parametrized as p0 + t d.
      const Point2 p0 = !a1.is_zero() ? Point2{rhs / a1, Rational(0)} : Point2{Rational(0), rhs / a2};
      const Point2 d{-a2, a1};
      Interval iv;
      iv.require(p0.x - box.lo, d.x);
      iv.require(box.hi - p0.x, -d.x);
      iv.require(p0.y - box.lo, d.y);
      iv.require(box.hi - p0.y, -d.y);
      for (std::uint32_t w = 0; w < 4; ++w) {
        if (w == a || w == b) continue;
        const Bundle u(w);
        // u(S) - u(U) = f(S) - f(U) - g . p with g = chi_S - chi_U.
        const CoverVector g = CoverVector::difference(2, s, u);
        const Rational g1(g[1]);
        const Rational g2(g[2]);
        iv.require(f(s) - f(u) - g1 * p0.x - g2 * p0.y, -(g1 * d.x + g2 * d.y));
      }
      if (iv.empty || !iv.lo || !iv.hi || !(*iv.lo < *iv.hi)) continue;
      Point2 from{p0.x + *iv.lo * d.x, p0.y + *iv.lo * d.y};
      Point2 to{p0.x + *iv.hi * d.x, p0.y + *iv.hi * d.y};
      if (std::tie(to.x, to.y) < std::tie(from.x, from.y)) std::swap(from, to);
      out.push_back({from, to, normal, s, t});
    }
  }
  return out;
}

}  // namespace demtype
