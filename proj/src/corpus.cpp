#include "demtype/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "demtype/demand.hpp"
#include "demtype/geometry.hpp"

namespace demtype {

namespace {

Rational size_squared(Bundle s) { return Rational(static_cast<long>(s.size()) * s.size()); }

DemandCover pm_cover(int n, std::initializer_list<std::vector<int>> rows) {
  std::vector<CoverVector> vs;
  for (const auto& r : rows) vs.emplace_back(r);
  return DemandCover(n, std::move(vs)).pm_closure();
}

SetFunction table(int n, std::initializer_list<Rational> values) { return SetFunction(n, std::vector<Rational>(values)); }

NamedInstance named(std::string name, std::string description, SetFunction f) {
  NamedInstance inst;
  inst.name = std::move(name);
  inst.description = std::move(description);
  inst.f = std::move(f);
  return inst;
}

using Builder = std::function<NamedInstance()>;

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> entries = [] {
    std::vector<std::pair<std::string, Builder>> r;
    const SetFunction f1 = table(2, {0, 2, 3, 4});
    const SetFunction f2 = table(2, {0, 3, 3, 4});
    const SetFunction f3 = table(2, {0, 1, 1, 4});
    const DemandCover gs2 = pm_cover(2, {{1, 0}, {0, 1}, {1, -1}});
    const DemandCover gc2 = pm_cover(2, {{1, 0}, {0, 1}, {1, 1}});

    r.emplace_back("fig2_f1", [=] {
      auto inst = named("fig2_f1", "two items, values 0,2,3,4; gross substitutes", f1);
      inst.expected.gs = true;
      inst.expected.gc = false;
      inst.expected.asc = true;
      inst.expected.cover = gs2;
      return inst;
    });
    r.emplace_back("fig2_f2", [=] {
      auto inst = named("fig2_f2", "two items, values 0,3,3,4; same cover as fig2_f1", f2);
      inst.expected.gs = true;
      inst.expected.asc = true;
      inst.expected.cover = gs2;
      return inst;
    });
    r.emplace_back("fig2_f3", [=] {
      auto inst = named("fig2_f3", "two items, values 0,1,1,4; complements", f3);
      inst.expected.gs = false;
      inst.expected.gc = true;
      inst.expected.asc = true;
      inst.expected.cover = gc2;
      return inst;
    });
    r.emplace_back("fig4", [=] {
      auto inst = named("fig4", "fig2_f1 with costs (7/10, 7/6); three critical values", f1);
      inst.costs = CostVector{Rational(7, 10), Rational(7, 6)};
      inst.expected.critical_alphas = std::vector<Rational>{Rational(7, 20), Rational(7, 15), Rational(7, 10)};
      inst.expected.transitions = std::vector<Bundle>{Bundle(), Bundle::of({1}), Bundle::of({2}), Bundle::of({1, 2})};
      inst.expected.critical_count = 3;
      inst.expected.alpha_star = Rational(7, 15);
      inst.expected.optimal_bundle = Bundle::of({2});
      inst.expected.principal_utility = Rational(8, 5);
      return inst;
    });
    r.emplace_back("fig5a", [=] {
      auto inst = named("fig5a", "fig2_f1 with costs (1/2, 1); the ray meets a vertex", f1);
      inst.costs = CostVector{Rational(1, 2), Rational(1)};
      inst.expected.facet_piercing = false;
      return inst;
    });
    r.emplace_back("fig5b", [=] {
      auto inst = named("fig5b", "fig2_f2 with costs (1/10, 1/10); the ray meets several facets at once", f2);
      inst.costs = CostVector{Rational(1, 10), Rational(1, 10)};
      inst.expected.facet_piercing = false;
      return inst;
    });
    r.emplace_back("fig5c", [=] {
      auto inst = named("fig5c", "fig2_f3 with costs (2, 1); facet-piercing", f3);
      inst.costs = CostVector{Rational(2), Rational(1)};
      inst.expected.facet_piercing = true;
      return inst;
    });

    // Three-item tables are listed by word: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}.
    r.emplace_back("B1_asc_only", [] {
      auto inst = named("B1_asc_only", "ASC but not ultra, supermodular or GSC+",
                        table(3, {0, 1, 1, Rational(3, 2), 1, 2, Rational(3, 2), 10}));
      inst.expected.asc = true;
      inst.expected.ultra = false;
      inst.expected.supermodular = false;
      inst.expected.gsc_plus = false;
      return inst;
    });
    const SetFunction sym0011 = tabulate(3, [](Bundle s) { return Rational(s.size() >= 2 ? 1 : 0); });
    r.emplace_back("B2_ultra_only", [=] {
      auto inst = named("B2_ultra_only", "symmetric profile 0,0,1,1: ultra but not GSC or supermodular", sym0011);
      inst.expected.asc = true;
      inst.expected.ultra = true;
      inst.expected.gsc = false;
      inst.expected.supermodular = false;
      return inst;
    });
    r.emplace_back("B3_gsc_only", [] {
      auto inst = named("B3_gsc_only", "GSC with parts {1,2}|{3}, not supermodular or ultra",
                        table(3, {0, 1, 1, Rational(3, 2), 1, 2, 3, 4}));
      inst.expected.asc = true;
      inst.expected.gsc = true;
      inst.expected.supermodular = false;
      inst.expected.ultra = false;
      return inst;
    });
    r.emplace_back("B4_supermod_only", [] {
      auto inst = named("B4_supermod_only", "|S|^2 plus 1/100 on {2,3}: supermodular, not ultra or GSC",
                        tabulate(3, [](Bundle s) {
                          return size_squared(s) + (s == Bundle::of({2, 3}) ? Rational(1, 100) : Rational(0));
                        }));
      inst.expected.asc = true;
      inst.expected.supermodular = true;
      inst.expected.ultra = false;
      inst.expected.gsc = false;
      return inst;
    });
    r.emplace_back("B5_gsc_supermod", [] {
      auto inst = named("B5_gsc_supermod", "GSC and supermodular, not ultra", table(3, {0, 1, 1, 2, 1, 2, 3, 4}));
      inst.expected.asc = true;
      inst.expected.gsc = true;
      inst.expected.supermodular = true;
      inst.expected.ultra = false;
      return inst;
    });
    r.emplace_back("B6_ultra_supermod", [] {
      auto inst = named("B6_ultra_supermod", "|S|^2: ultra and supermodular, not GSC", tabulate(3, size_squared));
      inst.expected.asc = true;
      inst.expected.ultra = true;
      inst.expected.supermodular = true;
      inst.expected.gsc = false;
      return inst;
    });
    r.emplace_back("B7_triple_not_gs", [] {
      auto inst = named("B7_triple_not_gs", "|S n {1,2}| doubled when 3 in S: ultra, supermodular, GSC, not GS",
                        tabulate(3, [](Bundle s) {
                          const long base = s.contains(1) + s.contains(2);
                          return Rational(base * (s.contains(3) ? 2 : 1));
                        }));
      inst.expected.asc = true;
      inst.expected.ultra = true;
      inst.expected.supermodular = true;
      inst.expected.gsc = true;
      inst.expected.gs = false;
      return inst;
    });
    r.emplace_back("B8_ultra_gsc", [] {
      auto inst = named("B8_ultra_gsc", "1[S meets {1,2}] doubled when 3 in S: ultra and GSC, not supermodular or GS",
                        tabulate(3, [](Bundle s) {
                          const long base = (s.contains(1) || s.contains(2)) ? 1 : 0;
                          return Rational(base * (s.contains(3) ? 2 : 1));
                        }));
      inst.expected.asc = true;
      inst.expected.ultra = true;
      inst.expected.gsc = true;
      inst.expected.supermodular = false;
      inst.expected.gs = false;
      return inst;
    });
    r.emplace_back("EX_gscplus_not_gsc", [=] {
      auto inst = named("EX_gscplus_not_gsc", "symmetric profile 0,0,1,1: GSC+ but not GSC", sym0011);
      inst.expected.asc = true;
      inst.expected.gsc_plus = true;
      inst.expected.gsc = false;
      return inst;
    });
    return r;
  }();
  return entries;
}

}  // namespace

std::vector<std::string> named_instance_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

NamedInstance make_named(std::string_view name) {
  for (const auto& [key, build] : registry()) {
    if (key == name) return build();
  }
  throw ValidationError("unknown instance name '" + std::string(name) + "'");
}

SetFunction make_coverage(const std::vector<Rational>& weights, const std::vector<std::vector<int>>& covers) {
  const int n = static_cast<int>(covers.size());
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw ValidationError("coverage weights must be positive");
  }
  for (const auto& c : covers) {
    for (int u : c) {
      if (u < 0 || u >= static_cast<int>(weights.size())) throw ValidationError("coverage element index out of range");
    }
  }
  std::vector<char> covered(weights.size());
  return tabulate(n, [&](Bundle s) {
    std::fill(covered.begin(), covered.end(), 0);
    for (int i : s.items()) {
      for (int u : covers[static_cast<std::size_t>(i - 1)]) covered[static_cast<std::size_t>(u)] = 1;
    }
    Rational total;
    for (std::size_t u = 0; u < weights.size(); ++u) {
      if (covered[u]) total += weights[u];
    }
    return total;
  });
}

GridConstruction make_coverage_grid(Bundle positive, Bundle negative, int n) {
  if (positive.empty() || negative.empty()) throw ValidationError("grid construction needs nonempty P and N");
  if (!(positive & negative).empty()) throw ValidationError("P and N must be disjoint");
  if (!positive.fits(n) || !negative.fits(n)) throw ValidationError("P and N must lie in [n]");
  const auto ps = positive.items();
  const auto ns = negative.items();
  const int np = static_cast<int>(ps.size());
  const int nn = static_cast<int>(ns.size());
  const long u = static_cast<long>(np) * nn;
  std::vector<Rational> weights(static_cast<std::size_t>(u), Rational(1, u));
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < nn; ++b) {
      covers[static_cast<std::size_t>(ps[static_cast<std::size_t>(a)] - 1)].push_back(a * nn + b);
      covers[static_cast<std::size_t>(ns[static_cast<std::size_t>(b)] - 1)].push_back(a * nn + b);
    }
  }
  GridConstruction g{make_coverage(weights, covers), {}, positive, negative};
  std::vector<Rational> prices(static_cast<std::size_t>(n), Rational(2));
  for (int i : ns) prices[static_cast<std::size_t>(i - 1)] = g.f(Bundle::of({i})) - Rational(1, 2 * nn * u);
  for (int i : ps) prices[static_cast<std::size_t>(i - 1)] = g.f(Bundle::of({i})) - Rational(1, 2 * np * u);
  g.prices = PriceVector(std::move(prices));
  return g;
}

SetFunction make_budget_additive(const std::vector<Rational>& weights, const Rational& budget) {
  for (const auto& w : weights) {
    if (w.sign() < 0) throw ValidationError("budget-additive weights must be nonnegative");
  }
  if (budget.sign() < 0) throw ValidationError("budget must be nonnegative");
  const int n = static_cast<int>(weights.size());
  return tabulate(n, [&](Bundle s) {
    Rational total;
    for (int i : s.items()) total += weights[static_cast<std::size_t>(i - 1)];
    return total < budget ? total : budget;
  });
}

BudgetConstruction make_budget_additive_breadth(int q, int r, int n) {
  if (q < 1 || r < 1 || q + r > n) throw ValidationError("need q, r >= 1 and q + r <= n");
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  std::vector<Rational> p(static_cast<std::size_t>(n), Rational(2));
  const Rational shrink = Rational(1) - Rational(1, 2L * q * r);
  Bundle qs;
  Bundle rs;
  for (int i = 1; i <= q + r; ++i) {
    const bool in_q = i <= q;
    w[static_cast<std::size_t>(i - 1)] = in_q ? Rational(1, q) : Rational(1, r);
    p[static_cast<std::size_t>(i - 1)] = shrink * w[static_cast<std::size_t>(i - 1)];
    if (in_q) {
      qs = qs.with(i);
    } else {
      rs = rs.with(i);
    }
  }
  return {make_budget_additive(w, Rational(1)), PriceVector(std::move(p)), qs, rs};
}

WitnessConstruction make_witness_construction(const CoverFamily& family, const CoverVector& v, int n) {
  if (v.n() != n) throw ValidationError("vector dimension does not match n");
  if (!gen_cover(family, n).contains(v)) {
    throw ValidationError("vector " + v.str() + " is not in the " + family.name() + " cover");
  }
  const Bundle s = v.plus();
  const Bundle t = v.minus();
  const bool same_sign = s.empty() || t.empty();
  std::vector<Rational> prices(static_cast<std::size_t>(n));
  auto fill = [&](Bundle on, const Rational& inside, const Rational& outside) {
    for (int i = 1; i <= n; ++i) prices[static_cast<std::size_t>(i - 1)] = on.contains(i) ? inside : outside;
  };
  SetFunction f;

  if (same_sign) {
    const Bundle support = s | t;
    const long k = support.size();
    if (family.kind == CoverFamily::Kind::GC) {
      f = tabulate(n, size_squared);
      fill(support, Rational(k), Rational(2L * n * n));
    } else if (family.kind == CoverFamily::Kind::GSC && k == 2) {
      f = tabulate(n, [&](Bundle x) { return Rational(support.subset_of(x) ? 1 : 0); });
      fill(support, Rational(1, 2), Rational(2));
    } else {
      f = tabulate(n, [&](Bundle x) { return Rational(x.size() >= k ? 1 : 0); });
      fill(support, Rational(1, k), Rational(2));
    }
  } else if (s.size() == 1 && t.size() == 1) {
    f = tabulate(n, [](Bundle x) { return Rational(x.empty() ? 0 : 1); });
    fill(s | t, Rational(1, 10), Rational(11, 10));
  } else {
    f = tabulate(n, [&](Bundle x) { return Rational(s.subset_of(x) || t.subset_of(x) ? 1 : 0); });
    fill(Bundle(), Rational(0), Rational(2));
    for (int i : s.items()) prices[static_cast<std::size_t>(i - 1)] = Rational(1, 2L * s.size());
    for (int i : t.items()) prices[static_cast<std::size_t>(i - 1)] = Rational(1, 2L * t.size());
  }
  return {std::move(f), PriceVector(std::move(prices)), s, t};
}

SetFunction make_witness(const CoverFamily& family, const CoverVector& v, int n) {
  return make_witness_construction(family, v, n).f;
}

std::string transition_name(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::Insertion: return "insertion";
    case TransitionKind::OneSubstitution: return "1-substitution";
    case TransitionKind::TwoSubstitution: return "2-substitution";
  }
  return "?";
}

std::optional<TransitionKind> classify_transition(Bundle from, Bundle to) {
  const auto added = to.minus(from).items();
  const auto removed = from.minus(to).items();
  if (added.size() == 1 && removed.empty()) return TransitionKind::Insertion;
  if (added.size() == 1 && removed.size() == 1 && removed[0] < added[0]) return TransitionKind::OneSubstitution;
  if (added.size() == 2 && removed.size() == 2) {
    const int a = added[1];  // items() is ascending
    if (added[0] < a && removed[0] < a && removed[1] < a) return TransitionKind::TwoSubstitution;
  }
  return std::nullopt;
}

CounterSequence make_counter_sequence(int n) {
  if (n < 4 || n > kMaxItems) throw ValidationError("counter construction needs 4 <= n <= 20");
  CounterSequence seq;
  seq.n = n;
  int l = 1;
  while ((l + 1) * (l + 1) <= n) ++l;
  seq.bits = l;
  seq.states = std::size_t{1} << l;

  // Positions are 0-based; item label = position + 1.
  auto item = [](int pos) { return pos + 1; };
  auto state = [&](std::size_t value) {
    Bundle b;
    for (int j = 1; j <= l; ++j) {
      const bool on = (value >> (j - 1)) & 1u;
      b = b.with(item(on ? j * l - 1 : (j - 1) * l));
    }
    return b;
  };
  auto push = [&](Bundle next, TransitionKind expected) {
    const auto kind = classify_transition(seq.sets.back(), next);
    if (!kind || *kind != expected) {
      throw std::logic_error("counter construction produced an invalid step " + seq.sets.back().str() + " -> " + next.str());
    }
    seq.sets.push_back(next);
    seq.kinds.push_back(*kind);
  };

  seq.sets.push_back(Bundle());
  for (int i : state(0).items()) push(seq.sets.back().with(i), TransitionKind::Insertion);
  seq.insertion_prefix = seq.kinds.size();

  for (std::size_t value = 1; value < seq.states; ++value) {
    const int jstar = std::countr_zero(value) + 1;
    int pos = (jstar - 1) * l;
    for (int k = 1; k < jstar; ++k) {
      // Carry: the j* element moves up one position while bit k resets.
      Bundle next = seq.sets.back().without(item(pos)).with(item(pos + 1)).without(item(k * l - 1)).with(item((k - 1) * l));
      ++pos;
      push(next, TransitionKind::TwoSubstitution);
    }
    if (pos != jstar * l - 1) push(seq.sets.back().without(item(pos)).with(item(jstar * l - 1)), TransitionKind::OneSubstitution);
    if (seq.sets.back() != state(value)) throw std::logic_error("counter construction lost track of state " + std::to_string(value));
  }
  return seq;
}

SuperpolyInstance make_superpoly(int n) {
  if (n < 4 || n > 16) throw ValidationError("superpolynomial construction needs 4 <= n <= 16");
  SuperpolyInstance out;
  out.sequence = make_counter_sequence(n);
  const auto& sets = out.sequence.sets;
  const long k = static_cast<long>(sets.size()) - 1;

  std::vector<Rational> costs;
  for (int i = 1; i <= n; ++i) costs.push_back(pow2(i));
  const CostVector c(costs);

  std::vector<Rational> fs(static_cast<std::size_t>(k) + 1);
  for (long i = 1; i <= k; ++i) {
    out.alphas.emplace_back(i, k + 1);
    const Rational dc = cost_of(c, sets[static_cast<std::size_t>(i)]) - cost_of(c, sets[static_cast<std::size_t>(i - 1)]);
    fs[static_cast<std::size_t>(i)] = fs[static_cast<std::size_t>(i - 1)] + dc / out.alphas.back();
  }
  SetFunction f = tabulate(n, [&](Bundle s) {
    Rational best;
    for (std::size_t i = 1; i < sets.size(); ++i) {
      if (sets[i].subset_of(s) && fs[i] > best) best = fs[i];
    }
    return best;
  });

  NamedInstance& inst = out.instance;
  inst.name = "superpoly_" + std::to_string(n);
  inst.description = "binary-counter crossing sequence over " + std::to_string(out.sequence.bits) + " bits";
  inst.f = std::move(f);
  inst.costs = c;
  inst.expected.critical_count = static_cast<std::size_t>(k);
  inst.expected.critical_alphas = out.alphas;
  inst.expected.transitions = sets;
  return out;
}

NamedInstance make_superpoly_instance(int n) { return make_superpoly(n).instance; }

RandomKind parse_random_kind(std::string_view text) {
  if (text == "monotone") return RandomKind::Monotone;
  if (text == "supermodular") return RandomKind::Supermodular;
  if (text == "symmetric") return RandomKind::Symmetric;
  if (text == "unit-demand-max") return RandomKind::UnitDemandMax;
  if (text == "asc") return RandomKind::AscFiltered;
  throw ValidationError("unknown random kind '" + std::string(text) +
                        "' (expected monotone, supermodular, symmetric, unit-demand-max or asc)");
}

std::string random_kind_name(RandomKind kind) {
  switch (kind) {
    case RandomKind::Monotone: return "monotone";
    case RandomKind::Supermodular: return "supermodular";
    case RandomKind::Symmetric: return "symmetric";
    case RandomKind::UnitDemandMax: return "unit-demand-max";
    case RandomKind::AscFiltered: return "asc";
  }
  return "?";
}

namespace {

// Each value is the best value one item down plus a random increment; with
// `sparse` most increments are zero.
SetFunction random_monotone(int n, Rng& rng, bool sparse = false) {
  const std::uint32_t size = 1u << n;
  std::vector<Rational> v(size);
  for (std::uint32_t w = 1; w < size; ++w) {
    Rational best;
    for (std::uint32_t r = w; r != 0; r &= r - 1) {
      const std::uint32_t sub = w & ~(r & (~r + 1));
      if (v[sub] > best) best = v[sub];
    }
    const long step = sparse ? (rng.uniform(0, 3) == 0 ? rng.uniform(1, 4) : 0) : rng.uniform(0, 4);
    v[w] = best + Rational(step);
  }
  return SetFunction(n, std::move(v));
}

// Max over a few random bundle bids.
SetFunction random_bids(int n, Rng& rng) {
  const int count = static_cast<int>(rng.uniform(2, 3));
  std::vector<std::pair<std::uint32_t, long>> bids;
  for (int k = 0; k < count; ++k) bids.emplace_back(static_cast<std::uint32_t>(rng.uniform(1, (1L << n) - 1)), rng.uniform(1, 9));
  return tabulate(n, [&](Bundle s) {
    long best = 0;
    for (const auto& [mask, value] : bids) {
      if ((mask & ~s.word()) == 0) best = std::max(best, value);
    }
    return Rational(best);
  });
}

}  // namespace

SetFunction random_instance(RandomKind kind, int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw ValidationError("random instances need 1 <= n <= 12");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(kind) * 131 + static_cast<std::uint64_t>(n));
  const std::uint32_t size = 1u << n;
  switch (kind) {
    case RandomKind::Monotone:
      return random_monotone(n, rng);
    case RandomKind::Supermodular: {
      // Nonnegative interaction terms, summed over subsets.
      std::vector<Rational> m(size);
      for (std::uint32_t w = 1; w < size; ++w) {
        const int k = std::popcount(w);
        if (k == 1) {
          m[w] = Rational(rng.uniform(0, 6));
        } else if (rng.uniform(0, (k == 2) ? 1 : 3) == 0) {
          m[w] = Rational(rng.uniform(1, k == 2 ? 3 : 2));
        }
      }
      for (int i = 0; i < n; ++i) {
        for (std::uint32_t w = 0; w < size; ++w) {
          if (w & (1u << i)) m[w] += m[w ^ (1u << i)];
        }
      }
      return SetFunction(n, std::move(m));
    }
    case RandomKind::Symmetric: {
      std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
      for (int k = 1; k <= n; ++k) g[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k - 1)] + Rational(rng.uniform(0, 5));
      return tabulate(n, [&](Bundle s) { return g[static_cast<std::size_t>(s.size())]; });
    }
    case RandomKind::UnitDemandMax: {
      std::vector<Rational> w;
      for (int i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, 20));
      return tabulate(n, [&](Bundle s) {
        Rational best;
        for (int i : s.items()) {
          if (w[static_cast<std::size_t>(i - 1)] > best) best = w[static_cast<std::size_t>(i - 1)];
        }
        return best;
      });
    }
    case RandomKind::AscFiltered: {
      if (n > 5) throw ValidationError("ASC-filtered instances are limited to n <= 5");
      const DemandCover asc = gen_cover(CoverFamily::asc(), n);
      for (int attempt = 0; attempt < 100000; ++attempt) {
        const long proposal = rng.uniform(0, 2);
        SetFunction f = proposal == 2 ? random_bids(n, rng) : random_monotone(n, rng, proposal == 1);
        if (cover_contains(asc, minimal_cover(f).cover)) return f;
      }
      throw std::runtime_error("no ASC-covered draw found");
    }
  }
  throw ValidationError("unknown random kind");
}

CostVector random_generic_costs(const SetFunction& f, std::uint64_t seed) {
  Rng rng(seed ^ 0xC0575EEDULL);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> c;
    for (int i = 0; i < f.n(); ++i) c.emplace_back(rng.uniform(1, 97), rng.uniform(1, 13));
    CostVector cv(std::move(c));
    if (facet_piercing(f, cv).piercing) return cv;
  }
  throw std::runtime_error("no facet-piercing cost vector found");
}

}  // namespace demtype
