// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "demtype/contracts.hpp"
#include "demtype/corpus.hpp"
#include "demtype/demand.hpp"
#include "demtype/geometry.hpp"
#include "demtype/walkquery.hpp"
#include "oracles.hpp"

using namespace demtype;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

DemandCover pm(int n, std::initializer_list<std::vector<int>> rows) {
  std::vector<CoverVector> out;
  for (const auto& r : rows) {
    out.emplace_back(r);
    out.push_back(CoverVector(r).negated());
  }
  return DemandCover(n, out);
}

std::string bundles_str(const std::vector<Bundle>& xs) {
  std::string s;
  for (Bundle b : xs) s += (s.empty() ? "" : " ") + b.str();
  return s;
}

// Efficiency samples collected by criteria 2, 4 and 9 for criterion 10.
struct QuerySample {
  std::string where;
  std::size_t queries;
  std::size_t criticals;
};
std::vector<QuerySample> query_samples;

void record_queries(const std::string& where, const CriticalValues& cv) {
  query_samples.push_back({where, cv.best_response_queries, cv.points.size()});
}

Verdict criterion1() {
  Verdict v;
  const DemandCover gs_like = pm(2, {{1, 0}, {0, 1}, {1, -1}});
  const DemandCover gc_like = pm(2, {{1, 0}, {0, 1}, {1, 1}});
  const std::pair<const char*, const DemandCover*> cases[] = {
      {"fig2_f1", &gs_like}, {"fig2_f2", &gs_like}, {"fig2_f3", &gc_like}};
  for (const auto& [name, expected] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const DemandCover got = minimal_cover(make_named(name).f).cover;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!(got == *expected)) v.fail(std::string(name) + " cover differs");
    if (s >= 1.0) v.fail(std::string(name) + " took over 1 s");
  }
  if (v.ok) v.detail = "f1, f2 = +-{(1,0),(0,1),(1,-1)}; f3 = +-{(1,0),(0,1),(1,1)}";
  return v;
}

Verdict criterion2() {
  Verdict v;
  const NamedInstance inst = make_named("fig4");
  const CostVector& c = *inst.costs;
  const CriticalValues cv = critical_values(inst.f, c);
  record_queries("fig4", cv);
  const std::vector<Rational> alphas{Rational(7, 20), Rational(7, 15), Rational(7, 10)};
  const std::vector<Bundle> sets{Bundle(), Bundle::of({1}), Bundle::of({2}), Bundle::of({1, 2})};
  std::vector<Rational> got_alphas;
  std::vector<Bundle> got_sets{cv.at_zero};
  for (const auto& p : cv.points) {
    got_alphas.push_back(p.alpha);
    got_sets.push_back(p.set_after);
  }
  if (got_alphas != alphas) v.fail("critical values differ");
  if (got_sets != sets) v.fail("transitions differ: " + bundles_str(got_sets));

  const auto sweep = testing::dense_sweep(inst.f, c);
  std::vector<Rational> sweep_alphas;
  for (const auto& p : sweep) sweep_alphas.push_back(p.alpha);
  if (sweep_alphas != alphas) v.fail("dense sweep disagrees");

  const ContractSolution sol = optimal_contract(inst.f, c);
  if (sol.alpha_star != Rational(7, 15) || sol.bundle != Bundle::of({2}) || sol.principal_utility != Rational(8, 5)) {
    v.fail("optimum is " + sol.alpha_star.str() + " " + sol.bundle.str() + " " + sol.principal_utility.str());
  }
  if (v.ok) v.detail = "criticals 7/20, 7/15, 7/10; optimum 7/15 on {2} with u_P = 8/5; sweep agrees";
  return v;
}

Verdict criterion3() {
  Verdict v;
  const RandomKind kinds[] = {RandomKind::Monotone, RandomKind::Supermodular, RandomKind::Symmetric,
                              RandomKind::UnitDemandMax};
  const std::vector<CoverFamily> families{CoverFamily::gs(),          CoverFamily::gc(),   CoverFamily::gsc_plus(),
                                          CoverFamily::delta_sub(2),  CoverFamily::asc(),  CoverFamily::full()};
  Rng rng(2024);
  std::size_t pairs = 0, family_runs = 0;
  for (int k = 0; k < 250; ++k) {
    const int n = 1 + k % 5;
    const SetFunction f = random_instance(kinds[k % 4], n, 10000 + static_cast<std::uint64_t>(k));
    const DemandCover vf = minimal_cover(f).cover;
    std::vector<DemandCover> covers{vf};
    for (const auto& family : families) {
      DemandCover g = gen_cover(family, n);
      if (cover_contains(g, vf)) covers.push_back(std::move(g));
    }
    for (int j = 0; j < 4; ++j) {
      std::vector<Rational> p;
      for (int i = 0; i < n; ++i) p.push_back(Rational(rng.uniform(0, 60), rng.uniform(1, 8)));
      const PriceVector prices(p);
      const Rational best = demand_set(f, prices).max_utility;
      ++pairs;
      for (std::size_t ci = 0; ci < covers.size(); ++ci) {
        const ValueOracle oracle(f);
        const WalkResult r = demand_query_walk(covers[ci], oracle, prices);
        family_runs += ci > 0;
        if (buyer_utility(f, prices, r.bundle) != best) {
          v.fail("instance " + std::to_string(k) + " cover #" + std::to_string(ci) + " returned " + r.bundle.str());
        }
      }
    }
  }
  if (v.ok) {
    v.detail = std::to_string(pairs) + " (f,p) pairs under V(f), plus " + std::to_string(family_runs) +
               " runs under containing family covers, zero mismatches";
  }
  return v;
}

Verdict criterion4() {
  Verdict v;
  const std::pair<RandomKind, int> groups[] = {{RandomKind::Supermodular, 10},
                                               {RandomKind::UnitDemandMax, 10},
                                               {RandomKind::Symmetric, 10},
                                               {RandomKind::AscFiltered, 5}};
  std::ostringstream summary;
  for (const auto& [kind, max_n] : groups) {
    std::size_t most = 0;
    for (int k = 0; k < 100; ++k) {
      const int n = 1 + k % max_n;
      const std::uint64_t seed = 20000 + static_cast<std::uint64_t>(k);
      const SetFunction f = random_instance(kind, n, seed);
      const CostVector c = random_generic_costs(f, seed);
      const CriticalValues cv = critical_values(f, c);
      record_queries(random_kind_name(kind) + " seed " + std::to_string(seed), cv);
      const PotentialAudit a = audit_potential(f, c, cv);
      most = std::max(most, cv.points.size());
      if (!a.passed) v.fail(random_kind_name(kind) + " n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " + a.detail);
    }
    summary << random_kind_name(kind) << " max " << most << "; ";
  }
  if (v.ok) v.detail = "400 instances, zero violations (" + summary.str().substr(0, summary.str().size() - 2) + ")";
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& name : named_instance_names()) {
    const NamedInstance inst = make_named(name);
    const MinimalCover mc = minimal_cover(inst.f);
    const ClassFlags flags = classify(inst.f, mc.cover);
    const Expectations& e = inst.expected;
    const std::pair<const char*, std::pair<const std::optional<bool>*, bool>> rows[] = {
        {"GS", {&e.gs, flags.gs}},         {"GC", {&e.gc, flags.gc}},
        {"GSC", {&e.gsc, flags.gsc}},      {"GSC+", {&e.gsc_plus, flags.gsc_plus}},
        {"ASC", {&e.asc, flags.asc}},      {"supermodular", {&e.supermodular, flags.supermodular}},
        {"ultra", {&e.ultra, flags.ultra}}};
    for (const auto& [flag, pair] : rows) {
      const auto& [expected, actual] = pair;
      if (!expected->has_value()) continue;
      ++checked;
      if (**expected != actual) {
        v.fail(name + " " + flag + " expected " + (**expected ? "true" : "false") + ", got " + (actual ? "true" : "false"));
      }
    }
    if (e.cover && !(*e.cover == mc.cover)) v.fail(name + " cover differs");
  }
  if (v.ok) v.detail = std::to_string(checked) + " flags across " + std::to_string(named_instance_names().size()) + " instances";
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::vector<CoverFamily> families{CoverFamily::gs(),         CoverFamily::gc(),         CoverFamily::gsc_plus(),
                                    CoverFamily::delta_sub(1), CoverFamily::delta_sub(2), CoverFamily::delta_sub(3),
                                    CoverFamily::delta_sub(4), CoverFamily::asc(),        CoverFamily::full()};
  for (std::uint32_t a1 = 1; a1 < 16; a1 += 2) families.push_back(CoverFamily::gsc(Bundle(a1), Bundle(15 & ~a1)));
  std::size_t certified = 0;
  for (const auto& family : families) {
    const DemandCover cover = gen_cover(family, 4);
    for (const auto& vec : cover.vectors()) {
      const WitnessConstruction w = make_witness_construction(family, vec, 4);
      const auto cert = strict_two_set_feasible(w.f, vec.plus(), vec.minus());
      if (!cert) {
        v.fail(family.name() + " " + vec.str() + ": no strict witness");
        continue;
      }
      const auto d = demand_set(w.f, cert->prices).maximizers;
      std::vector<Bundle> want{vec.plus(), vec.minus()};
      std::sort(want.begin(), want.end());
      if (d != want) v.fail(family.name() + " " + vec.str() + ": witness prices give " + bundles_str(d));
      if (demand_set(w.f, w.prices).maximizers != want) v.fail(family.name() + " " + vec.str() + ": construction prices");
      ++certified;
    }
  }
  if (v.ok) v.detail = std::to_string(certified) + " vectors over " + std::to_string(families.size()) + " families at n=4";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::size_t mixed = 0;
  const DemandCover cover = gen_cover(CoverFamily::full(), 4);
  for (const auto& vec : cover.vectors()) {
    if (vec.plus().empty() || vec.minus().empty()) continue;
    ++mixed;
    const GridConstruction g = make_coverage_grid(vec.plus(), vec.minus(), 4);
    std::vector<Bundle> want{vec.plus(), vec.minus()};
    std::sort(want.begin(), want.end());
    if (demand_set(g.f, g.prices).maximizers != want) v.fail(vec.str() + ": grid prices do not give {P, N}");
    if (!strict_two_set_feasible(g.f, vec.plus(), vec.minus())) v.fail(vec.str() + ": not in V(f)");
  }
  const BudgetConstruction b = make_budget_additive_breadth(2, 3, 5);
  const auto d = demand_set(b.f, b.prices).maximizers;
  if (d != std::vector<Bundle>{Bundle::of({1, 2}), Bundle::of({3, 4, 5})}) v.fail("budget-additive demand is " + bundles_str(d));
  if (v.ok) v.detail = std::to_string(mixed) + " mixed-sign vectors certified; budget-additive D = {1,2} {3,4,5}";
  return v;
}

Verdict criterion8() {
  Verdict v;
  const struct {
    const char* name;
    bool piercing;
    std::vector<Bundle> tied;
  } cases[] = {{"fig5a", false, {Bundle::of({1}), Bundle::of({2}), Bundle::of({1, 2})}},
               {"fig5b", false, {Bundle(), Bundle::of({1}), Bundle::of({2})}},
               {"fig5c", true, {}}};
  std::string detail;
  for (const auto& c : cases) {
    const NamedInstance inst = make_named(c.name);
    const PiercingReport r = facet_piercing(inst.f, *inst.costs);
    if (r.piercing != c.piercing) v.fail(std::string(c.name) + " classified wrongly");
    if (!c.piercing && r.tied != c.tied) v.fail(std::string(c.name) + " tied set is " + bundles_str(r.tied));
    if (facet_piercing_pairwise(inst.f, *inst.costs).piercing != c.piercing) v.fail(std::string(c.name) + " pairwise sweep disagrees");
    detail += std::string(c.name) + (r.piercing ? " true" : " false at " + r.alpha->str() + " {" + bundles_str(r.tied) + "}") + "; ";
  }
  if (v.ok) v.detail = detail.substr(0, detail.size() - 2);
  return v;
}

Verdict criterion9() {
  Verdict v;
  const SuperpolyInstance sp = make_superpoly(9);
  const CostVector& c = *sp.instance.costs;
  const auto sweep = testing::dense_sweep(sp.instance.f, c);
  const CriticalValues cv = critical_values(sp.instance.f, c);
  record_queries("superpoly_9", cv);
  const std::size_t transitions = sp.sequence.kinds.size();
  if (sweep.size() != transitions) {
    v.fail("brute-force count " + std::to_string(sweep.size()) + " vs " + std::to_string(transitions) + " transitions");
  }
  if (cv.points.size() != sweep.size()) v.fail("recursion count differs from brute force");
  const DemandCover asc = gen_cover(CoverFamily::asc(), 9);
  std::size_t outside = 0;
  for (const auto& p : sweep) outside += !asc.contains(CoverVector::difference(9, p.after, p.before));
  if (outside == 0) v.fail("every transition normal lies in the ASC cover");
  if (v.ok) {
    v.detail = std::to_string(sweep.size()) + " criticals = " + std::to_string(transitions) + " transitions; " +
               std::to_string(outside) + " normals outside ASC (asymptotic regime not reproducible at n=9)";
  }
  return v;
}

Verdict criterion10() {
  Verdict v;
  std::size_t worst_slack = ~std::size_t{0};
  for (const auto& s : query_samples) {
    const std::size_t limit = 4 * s.criticals + 4;
    if (s.queries > limit) {
      v.fail(s.where + ": " + std::to_string(s.queries) + " queries for " + std::to_string(s.criticals) + " criticals");
    }
    worst_slack = std::min(worst_slack, limit >= s.queries ? limit - s.queries : 0);
  }
  if (query_samples.size() < 402) v.fail("missing samples from criteria 2, 4 or 9");
  if (v.ok) v.detail = std::to_string(query_samples.size()) + " instances within 4K+4 (tightest slack " + std::to_string(worst_slack) + ")";
  return v;
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* title;
    double limit_s;
    std::function<Verdict()> run;
  } criteria[] = {
      {1, "two-item minimal covers", 3.0, criterion1},
      {2, "three-critical contract pipeline", 1.0, criterion2},
      {3, "walk demand query equals exhaustive demand", 60.0, criterion3},
      {4, "critical count bound and potential audit", 300.0, criterion4},
      {5, "named instance class matrix", 30.0, criterion5},
      {6, "witness soundness at n=4", 120.0, criterion6},
      {7, "coverage and budget-additive breadth", 60.0, criterion7},
      {8, "facet-piercing classifications", 1.0, criterion8},
      {9, "binary counter construction at n=9", 60.0, criterion9},
      {10, "best-response query efficiency", 1e9, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= c.limit_s) v.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    failures += !v.ok;
    std::printf("criterion %2d %s  %-44s %7.2fs  %s\n", c.id, v.ok ? "PASS" : "FAIL", c.title, s, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
