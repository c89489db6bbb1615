#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "demtype/contracts.hpp"
#include "demtype/corpus.hpp"
#include "demtype/covers.hpp"
#include "demtype/demand.hpp"
#include "demtype/geometry.hpp"
#include "demtype/walkquery.hpp"

namespace demtype::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

Json bundle_json(Bundle s) {
  Json a = Json::array();
  for (int i : s.items()) a.push_back(i);
  return a;
}

Json rationals_json(std::span<const Rational> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json vector_json(const CoverVector& v) { return Json(v.entries()); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> xs;
  for (const auto& part : split(text, ',')) {
    try {
      xs.push_back(Rational::parse(part));
    } catch (const ParseError& e) {
      throw ValidationError(e.what());
    }
  }
  return xs;
}

std::optional<int> superpoly_size(const std::string& name) {
  const std::string prefix = "superpoly_";
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
  return std::stoi(digits);
}

NamedInstance named_or_superpoly(const std::string& name) {
  if (auto n = superpoly_size(name)) {
    if (*n < 4 || *n > 16) throw ValidationError("superpoly instances need 4 <= n <= 16");
    return make_superpoly_instance(*n);
  }
  return make_named(name);
}

/// Loaded instance plus the bytes it came from, for the report digest.
struct Input {
  Instance instance;
  std::string bytes;
};

// A path that exists is read as an instance file; anything else is looked up
// in the named registry.
Input load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    Input in;
    in.bytes = read_file(arg);
    in.instance = load_instance(in.bytes);
    return in;
  }
  const auto names = named_instance_names();
  if (std::find(names.begin(), names.end(), arg) == names.end() && !superpoly_size(arg)) {
    throw ValidationError("'" + arg + "' is neither an instance file nor a registered instance name");
  }
  NamedInstance named = named_or_superpoly(arg);
  Input in;
  in.instance.name = named.name;
  in.instance.f = named.f;
  in.instance.costs = named.costs;
  in.bytes = dump_instance(in.instance);
  return in;
}

const CostVector& require_costs(const Instance& inst) {
  if (!inst.costs) throw ValidationError("instance has no 'costs' field");
  if (inst.costs->size() != inst.f.n()) throw ValidationError("cost vector length differs from n");
  return *inst.costs;
}

DemandCover resolve_cover(const std::string& arg, int n) {
  if (std::filesystem::exists(arg)) return cover_from_json(read_file(arg), n);
  return gen_cover(CoverFamily::parse(arg), n);
}

Json cover_json(const DemandCover& cover) {
  Json vectors = Json::array();
  for (const auto& v : cover.vectors()) vectors.push_back(vector_json(v));
  Json doc;
  doc["n"] = cover.n();
  doc["vectors"] = std::move(vectors);
  return doc;
}

Json flags_json(const ClassFlags& flags) {
  Json doc;
  doc["GS"] = flags.gs;
  doc["GC"] = flags.gc;
  doc["GSC"] = flags.gsc;
  if (flags.gsc_partition) {
    doc["GSC_partition"] = Json::array({bundle_json(flags.gsc_partition->first), bundle_json(flags.gsc_partition->second)});
  } else {
    doc["GSC_partition"] = nullptr;
  }
  doc["GSC+"] = flags.gsc_plus;
  doc["ASC"] = flags.asc;
  doc["min_delta"] = flags.min_delta;
  doc["supermodular"] = flags.supermodular;
  doc["ultra"] = flags.ultra;
  doc["monotone"] = flags.monotone;
  return doc;
}

std::string violation_name(PiercingReport::Violation v) {
  switch (v) {
    case PiercingReport::Violation::None: return "none";
    case PiercingReport::Violation::MultiFacet: return "multi_facet";
    case PiercingReport::Violation::PersistentTie: return "persistent_tie";
  }
  return "none";
}

struct Piece {
  Rational from;
  Rational to;
  Bundle bundle;
};

std::vector<Piece> envelope_pieces(const CriticalValues& cv) {
  std::vector<Piece> pieces;
  Rational left(0);
  Bundle current = cv.at_zero;
  for (const auto& p : cv.points) {
    if (p.alpha > left) pieces.push_back({left, p.alpha, current});
    left = p.alpha;
    current = p.set_after;
  }
  if (left < Rational(1)) pieces.push_back({left, Rational(1), current});
  return pieces;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

constexpr double kCanvas = 400.0;
constexpr double kMargin = 20.0;

std::string svg_open() {
  const std::string size = fmt(kCanvas + 2 * kMargin);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
         size + " " + size + "\">\n<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
         fmt(kCanvas) + "\" height=\"" + fmt(kCanvas) + "\" fill=\"none\" stroke=\"#999\"/>\n";
}

std::string lip_svg(const std::vector<FacetSegment2D>& segments, const ClipBox& box) {
  const double lo = box.lo.to_double();
  const double span = (box.hi - box.lo).to_double();
  auto px = [&](const Rational& x) { return kMargin + (x.to_double() - lo) / span * kCanvas; };
  auto py = [&](const Rational& y) { return kMargin + kCanvas - (y.to_double() - lo) / span * kCanvas; };
  std::string svg = svg_open();
  for (const auto& seg : segments) {
    svg += "<path d=\"M " + fmt(px(seg.from.x)) + " " + fmt(py(seg.from.y)) + " L " + fmt(px(seg.to.x)) + " " +
           fmt(py(seg.to.y)) + "\" stroke=\"black\" stroke-width=\"2\" fill=\"none\"><title>" + seg.s.str() + " | " +
           seg.t.str() + " normal " + seg.normal.str() + "</title></path>\n";
  }
  return svg + "</svg>\n";
}

std::string envelope_svg(const std::vector<Piece>& pieces, const SetFunction& f, const CostVector& c) {
  Rational ymin(0), ymax(0);
  for (const auto& piece : pieces) {
    for (const auto& a : {piece.from, piece.to}) {
      const Rational u = agent_utility(f, c, a, piece.bundle);
      ymin = std::min(ymin, u);
      ymax = std::max(ymax, u);
    }
  }
  const double yspan = ymax == ymin ? 1.0 : (ymax - ymin).to_double();
  auto px = [&](const Rational& a) { return kMargin + a.to_double() * kCanvas; };
  auto py = [&](const Rational& u) { return kMargin + kCanvas - (u - ymin).to_double() / yspan * kCanvas; };
  std::string svg = svg_open();
  for (const auto& piece : pieces) {
    svg += "<path d=\"M " + fmt(px(piece.from)) + " " + fmt(py(agent_utility(f, c, piece.from, piece.bundle))) +
           " L " + fmt(px(piece.to)) + " " + fmt(py(agent_utility(f, c, piece.to, piece.bundle))) +
           "\" stroke=\"black\" stroke-width=\"2\" fill=\"none\"><title>" + piece.bundle.str() + "</title></path>\n";
  }
  return svg + "</svg>\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

struct BenchRow {
  int n;
  std::uint64_t seed;
  std::size_t criticals;
  std::size_t bound;
};

std::vector<BenchRow> run_bench(RandomKind kind, const std::vector<int>& sizes, std::uint64_t seeds, int threads) {
  std::vector<std::pair<int, std::uint64_t>> jobs;
  for (int n : sizes) {
    for (std::uint64_t s = 0; s < seeds; ++s) jobs.emplace_back(n, s);
  }
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto [n, seed] = jobs[i];
      const SetFunction f = random_instance(kind, n, seed);
      const CostVector c = random_generic_costs(f, seed);
      const CriticalValues cv = critical_values(f, c);
      rows[i] = {n, seed, cv.points.size(), static_cast<std::size_t>(n * (n + 1) / 2)};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

/// Output of one command: the primary text plus the counters that go into a
/// run report.
struct Outcome {
  std::string text;
  std::map<std::string, std::size_t> counters;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Demand types, demand queries and linear contracts on explicit set functions", "demtype"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, report_path;
  app.add_option("--out", out_path, "Write the primary output to this file");
  app.add_option("--report", report_path, "Write a run report (digests, timing, counters) to this file");

  std::string input, prices_text, cover_text, set_text, alpha_text, svg_path, family_text, of_path;
  std::string kind_text = "supermodular", n_text = "4", corpus_action, corpus_name;
  bool trace = false;
  int family_n = 0, threads = 1;
  std::uint64_t seed = 0, seeds = 10;

  auto* eval = app.add_subcommand("eval", "Value of a bundle");
  eval->add_option("instance", input, "Instance file or registered name")->required();
  eval->add_option("--set", set_text, "Items of the bundle, e.g. 1,3 (empty for the empty set)")->required();

  auto* demand = app.add_subcommand("demand", "Demand set at prices, or a walk-based demand query with --cover");
  demand->add_option("instance", input)->required();
  demand->add_option("--prices", prices_text, "Comma separated rationals")->required();
  demand->add_option("--cover", cover_text, "Cover family (GS, GC, GSC:1,2|3, GSC+, DELTA_SUB:k, ASC, FULL) or cover file");
  demand->add_flag("--trace", trace, "Include the walk trace");

  auto* cover = app.add_subcommand("cover", "Minimal demand cover of an instance, or a family cover");
  cover->add_option("--of", of_path, "Instance file or registered name");
  cover->add_option("--family", family_text, "Cover family to generate");
  cover->add_option("--n", family_n, "Item count for --family");

  auto* classify_cmd = app.add_subcommand("classify", "Class memberships");
  classify_cmd->add_option("instance", input)->required();

  auto* critical = app.add_subcommand("critical", "Critical values of the linear contract ray");
  critical->add_option("instance", input)->required();
  critical->add_option("--alpha", alpha_text, "Also report the best response at this contract");

  auto* optimal = app.add_subcommand("optimal", "Optimal linear contract");
  optimal->add_option("instance", input)->required();

  auto* piercing = app.add_subcommand("piercing", "Facet-piercing check of the cost vector");
  piercing->add_option("instance", input)->required();

  auto* lip = app.add_subcommand("lip2d", "Indifference locus of a two-item function");
  lip->add_option("instance", input)->required();
  lip->add_option("--svg", svg_path, "Write an SVG plot");

  auto* envelope = app.add_subcommand("envelope", "Upper envelope of agent utility over alpha");
  envelope->add_option("instance", input)->required();
  envelope->add_option("--svg", svg_path, "Write an SVG plot");

  auto* corpus = app.add_subcommand("corpus", "Registered and random instances");
  corpus->add_option("action", corpus_action, "list or gen")->required()->check(CLI::IsMember({"list", "gen"}));
  corpus->add_option("name", corpus_name, "Registered name, superpoly_<n>, or random");
  corpus->add_option("--kind", kind_text, "Random kind for 'gen random'");
  corpus->add_option("--n", n_text, "Item count for 'gen random'");
  corpus->add_option("--seed", seed, "Seed for 'gen random'");

  auto* bench = app.add_subcommand("bench", "Critical-value counts over random instances with generic costs");
  bench->add_option("--kind", kind_text, "monotone, supermodular, symmetric, unit-demand-max or asc");
  bench->add_option("--n", n_text, "Item count, or a comma separated list");
  bench->add_option("--seeds", seeds, "Seeds 0 .. seeds-1");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Json doc;
    doc["error"] = "usage";
    doc["message"] = e.what();
    err << doc.dump() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string digest_source;
  std::string command = app.get_subcommands().front()->get_name();
  Outcome result;

  try {
    auto load = [&](const std::string& arg) {
      Input in = load_input(arg);
      digest_source += in.bytes;
      return in.instance;
    };

    if (*eval) {
      const Instance inst = load(input);
      std::vector<int> items;
      for (const auto& part : split(set_text, ',')) {
        if (part.empty()) continue;
        try {
          items.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw ValidationError("malformed item '" + part + "'");
        }
      }
      Bundle s;
      try {
        s = Bundle::of(items);
      } catch (const std::out_of_range& e) {
        throw ValidationError(e.what());
      }
      if (!s.fits(inst.f.n())) throw ValidationError("bundle " + s.str() + " has items beyond n");
      Json doc;
      doc["bundle"] = bundle_json(s);
      doc["value"] = value_query(inst.f, s).str();
      result.text = doc.dump();
    } else if (*demand) {
      const Instance inst = load(input);
      const PriceVector p(parse_rationals(prices_text));
      if (p.size() != inst.f.n()) throw ValidationError("expected " + std::to_string(inst.f.n()) + " prices");
      Json doc;
      doc["prices"] = rationals_json(p.entries());
      if (cover_text.empty()) {
        const DemandResult d = demand_set(inst.f, p);
        Json sets = Json::array();
        for (Bundle s : d.maximizers) sets.push_back(bundle_json(s));
        doc["demand"] = std::move(sets);
        doc["max_utility"] = d.max_utility.str();
      } else {
        const DemandCover v = resolve_cover(cover_text, inst.f.n());
        const ValueOracle oracle(inst.f);
        const WalkResult w = demand_query_walk(v, oracle, p);
        doc["cover_size"] = v.size();
        doc["bundle"] = bundle_json(w.bundle);
        doc["utility"] = buyer_utility(inst.f, p, w.bundle).str();
        doc["value_queries"] = w.trace.value_query_count;
        doc["query_bound"] = walk_query_bound(v);
        result.counters["value_queries"] = w.trace.value_query_count;
        if (trace) {
          Json t;
          t["M"] = w.trace.M.str();
          Json steps = Json::array();
          for (std::size_t i = 0; i < w.trace.waypoints.size(); ++i) {
            Json step;
            step["i"] = i;
            step["prices"] = rationals_json(w.trace.waypoints[i].prices.entries());
            step["bundle"] = bundle_json(w.trace.waypoints[i].bundle);
            steps.push_back(std::move(step));
          }
          t["waypoints"] = std::move(steps);
          doc["trace"] = std::move(t);
        }
      }
      result.text = doc.dump();
    } else if (*cover) {
      if (of_path.empty() == family_text.empty()) throw UsageError("cover needs exactly one of --of or --family");
      if (!family_text.empty()) {
        if (family_n < 0 || family_n > kMaxItems) throw ValidationError("--n must lie in [0, 20]");
        digest_source = family_text + "/" + std::to_string(family_n);
        result.text = cover_json(gen_cover(CoverFamily::parse(family_text), family_n)).dump();
      } else {
        const Instance inst = load(of_path);
        const MinimalCover mc = minimal_cover(inst.f);
        Json doc = cover_json(mc.cover);
        Json witnesses = Json::array();
        for (const auto& [v, w] : mc.witnesses) {
          Json row;
          row["vector"] = vector_json(v);
          row["s"] = bundle_json(w.s);
          row["t"] = bundle_json(w.t);
          row["prices"] = rationals_json(w.prices.entries());
          row["margin"] = w.margin.str();
          witnesses.push_back(std::move(row));
        }
        doc["witnesses"] = std::move(witnesses);
        result.text = doc.dump();
      }
    } else if (*classify_cmd) {
      const Instance inst = load(input);
      result.text = flags_json(classify(inst.f)).dump();
    } else if (*critical) {
      const Instance inst = load(input);
      const CostVector& c = require_costs(inst);
      const CriticalValues cv = critical_values(inst.f, c);
      Json doc;
      doc["at_zero"] = bundle_json(cv.at_zero);
      Json points = Json::array();
      for (const auto& p : cv.points) {
        Json row;
        row["alpha"] = p.alpha.str();
        row["from"] = bundle_json(p.set_before);
        row["to"] = bundle_json(p.set_after);
        row["agent_utility"] = p.agent_utility_at.str();
        points.push_back(std::move(row));
      }
      doc["criticals"] = std::move(points);
      doc["count"] = cv.points.size();
      doc["bound"] = inst.f.n() * (inst.f.n() + 1) / 2;
      doc["best_response_queries"] = cv.best_response_queries;
      result.counters["best_response_queries"] = cv.best_response_queries;
      if (!alpha_text.empty()) {
        Rational alpha;
        try {
          alpha = Rational::parse(alpha_text);
        } catch (const ParseError& e) {
          throw ValidationError(e.what());
        }
        if (alpha.sign() < 0 || alpha > Rational(1)) throw ValidationError("--alpha must lie in [0, 1]");
        Json br;
        br["alpha"] = alpha.str();
        br["bundle"] = bundle_json(best_response(inst.f, c, alpha));
        doc["best_response"] = std::move(br);
      }
      result.text = doc.dump();
    } else if (*optimal) {
      const Instance inst = load(input);
      const ContractSolution sol = optimal_contract(inst.f, require_costs(inst));
      Json doc;
      doc["alpha"] = sol.alpha_star.str();
      doc["bundle"] = bundle_json(sol.bundle);
      doc["principal_utility"] = sol.principal_utility.str();
      result.counters["best_response_queries"] = sol.best_response_queries;
      result.text = doc.dump();
    } else if (*piercing) {
      const Instance inst = load(input);
      const PiercingReport rep = facet_piercing(inst.f, require_costs(inst));
      Json doc;
      doc["facet_piercing"] = rep.piercing;
      doc["violation"] = violation_name(rep.violation);
      doc["alpha"] = rep.alpha ? Json(rep.alpha->str()) : Json(nullptr);
      Json tied = Json::array();
      for (Bundle s : rep.tied) tied.push_back(bundle_json(s));
      doc["tied"] = std::move(tied);
      if (!rep.piercing) doc["tied_agent_utility"] = rep.tied_agent_utility.str();
      result.text = doc.dump();
    } else if (*lip) {
      const Instance inst = load(input);
      if (inst.f.n() != 2) throw ValidationError("lip2d needs a two-item instance");
      const ClipBox box;
      const auto segments = lip2d(inst.f, box);
      Json rows = Json::array();
      for (const auto& seg : segments) {
        Json row;
        row["from"] = Json::array({seg.from.x.str(), seg.from.y.str()});
        row["to"] = Json::array({seg.to.x.str(), seg.to.y.str()});
        row["normal"] = vector_json(seg.normal);
        row["s"] = bundle_json(seg.s);
        row["t"] = bundle_json(seg.t);
        rows.push_back(std::move(row));
      }
      Json doc;
      doc["clip"] = Json::array({box.lo.str(), box.hi.str()});
      doc["segments"] = std::move(rows);
      if (!svg_path.empty()) write_text(svg_path, lip_svg(segments, box));
      result.text = doc.dump();
    } else if (*envelope) {
      const Instance inst = load(input);
      const CostVector& c = require_costs(inst);
      const CriticalValues cv = critical_values(inst.f, c);
      const auto pieces = envelope_pieces(cv);
      Json rows = Json::array();
      for (const auto& piece : pieces) {
        Json row;
        row["from"] = piece.from.str();
        row["to"] = piece.to.str();
        row["bundle"] = bundle_json(piece.bundle);
        row["slope"] = inst.f(piece.bundle).str();
        row["intercept"] = (-cost_of(c, piece.bundle)).str();
        rows.push_back(std::move(row));
      }
      Json doc;
      doc["pieces"] = std::move(rows);
      if (!svg_path.empty()) write_text(svg_path, envelope_svg(pieces, inst.f, c));
      result.text = doc.dump();
    } else if (*corpus) {
      if (corpus_action == "list") {
        Json rows = Json::array();
        for (const auto& name : named_instance_names()) {
          const NamedInstance inst = make_named(name);
          Json row;
          row["name"] = name;
          row["n"] = inst.f.n();
          row["costs"] = inst.costs.has_value();
          row["description"] = inst.description;
          rows.push_back(std::move(row));
        }
        result.text = rows.dump();
      } else {
        if (corpus_name.empty()) throw UsageError("corpus gen needs an instance name");
        Instance inst;
        if (corpus_name == "random") {
          const RandomKind kind = parse_random_kind(kind_text);
          int n = 0;
          try {
            n = std::stoi(n_text);
          } catch (const std::exception&) {
            throw ValidationError("malformed --n '" + n_text + "'");
          }
          inst.f = random_instance(kind, n, seed);
          inst.costs = random_generic_costs(inst.f, seed);
          inst.name = random_kind_name(kind) + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
        } else {
          const NamedInstance named = named_or_superpoly(corpus_name);
          inst.name = named.name;
          inst.f = named.f;
          inst.costs = named.costs;
        }
        result.text = dump_instance(inst);
      }
    } else if (*bench) {
      const RandomKind kind = parse_random_kind(kind_text);
      std::vector<int> sizes;
      for (const auto& part : split(n_text, ',')) {
        try {
          sizes.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw ValidationError("malformed --n '" + n_text + "'");
        }
      }
      std::ostringstream csv;
      csv << "n,seed,kind,criticals,bound,within_bound\n";
      std::size_t total = 0;
      for (const auto& row : run_bench(kind, sizes, seeds, threads)) {
        csv << row.n << ',' << row.seed << ',' << random_kind_name(kind) << ',' << row.criticals << ',' << row.bound
            << ',' << (row.criticals <= row.bound ? "true" : "false") << '\n';
        total += row.criticals;
      }
      result.counters["criticals"] = total;
      digest_source = kind_text + "/" + n_text + "/" + std::to_string(seeds);
      result.text = csv.str();
    }
  } catch (const UsageError& e) {
    Json doc;
    doc["error"] = "usage";
    doc["message"] = e.what();
    err << doc.dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    Json doc;
    doc["error"] = "validation";
    doc["message"] = e.what();
    err << doc.dump() << "\n";
    return kExitValidation;
  }

  if (!result.text.empty() && result.text.back() != '\n') result.text += '\n';
  try {
    if (out_path.empty()) {
      out << result.text;
    } else {
      write_text(out_path, result.text);
    }
    if (!report_path.empty()) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      Json report;
      report["command"] = command;
      report["inputs_digest"] = hex64(fnv1a(digest_source));
      report["outputs_digest"] = hex64(fnv1a(result.text));
      report["timing_ms"] = ms;
      report["counters"] = result.counters;
      write_text(report_path, report.dump() + "\n");
    }
  } catch (const std::exception& e) {
    Json doc;
    doc["error"] = "validation";
    doc["message"] = e.what();
    err << doc.dump() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace demtype::cli
