#include "demtype/covers.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include <json.hpp>

namespace demtype {

CoverVector::CoverVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() > static_cast<std::size_t>(kMaxItems)) throw ValidationError("cover vector too long");
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int e = entries_[i];
    if (e == 1) {
      p |= 1u << i;
    } else if (e == -1) {
      m |= 1u << i;
    } else if (e != 0) {
      throw ValidationError("cover vector entries must lie in {-1,0,1}, got " + std::to_string(e));
    }
  }
  plus_ = Bundle(p);
  minus_ = Bundle(m);
}

CoverVector::CoverVector(int n, Bundle plus, Bundle minus)
    : entries_(static_cast<std::size_t>(n), 0), plus_(plus), minus_(minus) {
  if (!(plus & minus).empty()) throw ValidationError("positive and negative supports overlap");
  if (!plus.fits(n) || !minus.fits(n)) throw ValidationError("support exceeds dimension");
  for (int i : plus.items()) entries_[static_cast<std::size_t>(i - 1)] = 1;
  for (int i : minus.items()) entries_[static_cast<std::size_t>(i - 1)] = -1;
}

CoverVector CoverVector::difference(int n, Bundle t, Bundle s) { return CoverVector(n, t.minus(s), s.minus(t)); }

CoverVector CoverVector::unit(int n, int item, int sign) {
  const Bundle b = Bundle().with(item);
  return sign > 0 ? CoverVector(n, b, Bundle()) : CoverVector(n, Bundle(), b);
}

std::string CoverVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

DemandCover::DemandCover(int n, std::vector<CoverVector> vectors) : n_(n), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.n() != n) throw ValidationError("cover vector " + v.str() + " does not have dimension " + std::to_string(n));
    if (v.is_zero()) throw ValidationError("cover vectors must be nonzero");
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool DemandCover::contains(const CoverVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

bool DemandCover::is_pm_closed() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [&](const CoverVector& v) { return contains(v.negated()); });
}

bool DemandCover::has_all_units() const {
  for (int i = 1; i <= n_; ++i) {
    if (!contains(CoverVector::unit(n_, i, 1)) || !contains(CoverVector::unit(n_, i, -1))) return false;
  }
  return true;
}

DemandCover DemandCover::pm_closure() const {
  std::vector<CoverVector> out = vectors_;
  for (const auto& v : vectors_) out.push_back(v.negated());
  return DemandCover(n_, std::move(out));
}

namespace {

std::vector<int> parse_item_list(std::string_view s) {
  std::vector<int> items;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw ValidationError("malformed item label '" + std::string(tok) + "'");
    }
    items.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return items;
}

std::string item_list(Bundle b) {
  std::string s;
  for (int i : b.items()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

// Calls fn on every submask of `mask` with popcount at most k.
void for_small_submasks(std::uint32_t mask, int k, const std::function<void(std::uint32_t)>& fn) {
  std::function<void(std::uint32_t, std::uint32_t, int)> rec = [&](std::uint32_t rest, std::uint32_t acc, int left) {
    fn(acc);
    if (left == 0) return;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const std::uint32_t bit = r & (~r + 1);
      // Only extend with bits above the current one so each submask appears once.
      rec(r & ~bit, acc | bit, left - 1);
    }
  };
  rec(mask, 0, k);
}

}  // namespace

CoverFamily CoverFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  auto no_arg = [&](CoverFamily f) {
    if (colon != std::string_view::npos) throw ValidationError("family " + std::string(head) + " takes no parameter");
    return f;
  };
  if (head == "GS") return no_arg(gs());
  if (head == "GC") return no_arg(gc());
  if (head == "GSC_PLUS" || head == "GSC+") return no_arg(gsc_plus());
  if (head == "ASC") return no_arg(asc());
  if (head == "FULL") return no_arg(full());
  if (head == "DELTA_SUB") {
    int d = 0;
    const auto res = std::from_chars(arg.data(), arg.data() + arg.size(), d);
    if (arg.empty() || res.ec != std::errc() || res.ptr != arg.data() + arg.size() || d < 1) {
      throw ValidationError("DELTA_SUB needs a positive integer parameter, e.g. DELTA_SUB:2");
    }
    return delta_sub(d);
  }
  if (head == "GSC") {
    const auto bar = arg.find('|');
    if (bar == std::string_view::npos) throw ValidationError("GSC needs a partition, e.g. GSC:1,2|3");
    const auto a = parse_item_list(arg.substr(0, bar));
    const auto b = parse_item_list(arg.substr(bar + 1));
    Bundle a1;
    Bundle a2;
    try {
      a1 = Bundle::of(std::span<const int>(a));
      a2 = Bundle::of(std::span<const int>(b));
    } catch (const std::out_of_range& e) {
      throw ValidationError(e.what());
    }
    return gsc(a1, a2);
  }
  throw ValidationError("unknown cover family '" + std::string(text) + "'");
}

std::string CoverFamily::name() const {
  switch (kind) {
    case Kind::GS: return "GS";
    case Kind::GC: return "GC";
    case Kind::GSC: return "GSC:" + item_list(part1) + "|" + item_list(part2);
    case Kind::GSC_PLUS: return "GSC_PLUS";
    case Kind::DELTA_SUB: return "DELTA_SUB:" + std::to_string(delta);
    case Kind::ASC: return "ASC";
    case Kind::FULL: return "FULL";
  }
  return "?";
}

DemandCover gen_cover(const CoverFamily& family, int n) {
  if (n < 1 || n > kMaxItems) throw ValidationError("cover dimension must lie in [1, 20]");
  const std::uint32_t all = Bundle::full(n).word();
  std::vector<CoverVector> out;
  auto add = [&](std::uint32_t p, std::uint32_t m) {
    if (p == 0 && m == 0) return;
    out.emplace_back(n, Bundle(p), Bundle(m));
  };
  // Pairs (plus, minus) with |plus| <= kp and |minus| <= km.
  auto bounded = [&](int kp, int km) {
    for_small_submasks(all, kp, [&](std::uint32_t p) {
      for_small_submasks(all & ~p, km, [&](std::uint32_t m) { add(p, m); });
    });
  };
  auto same_sign = [&] {
    for (std::uint32_t s = 1; s <= all; ++s) {
      add(s, 0);
      add(0, s);
    }
  };

  switch (family.kind) {
    case CoverFamily::Kind::GS:
      bounded(1, 1);
      break;
    case CoverFamily::Kind::GC:
      same_sign();
      break;
    case CoverFamily::Kind::GSC: {
      const std::uint32_t a1 = family.part1.word();
      const std::uint32_t a2 = family.part2.word();
      if ((a1 & a2) != 0 || (a1 | a2) != all) {
        throw ValidationError("partition " + family.name() + " does not split [" + std::to_string(n) + "]");
      }
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bi = 1u << i;
        add(bi, 0);
        add(0, bi);
        for (int j = i + 1; j < n; ++j) {
          const std::uint32_t bj = 1u << j;
          const bool same = ((a1 & bi) != 0) == ((a1 & bj) != 0);
          if (same) {
            add(bi, bj);
            add(bj, bi);
          } else {
            add(bi | bj, 0);
            add(0, bi | bj);
          }
        }
      }
      break;
    }
    case CoverFamily::Kind::GSC_PLUS:
      for_small_submasks(all, 2, [&](std::uint32_t support) {
        // Every sign pattern on a support of size <= 2.
        for (std::uint32_t p = support;; p = (p - 1) & support) {
          add(p, support & ~p);
          if (p == 0) break;
        }
      });
      break;
    case CoverFamily::Kind::DELTA_SUB:
      if (family.delta < 1) throw ValidationError("DELTA_SUB requires delta >= 1");
      bounded(family.delta, family.delta);
      break;
    case CoverFamily::Kind::ASC:
      same_sign();
      bounded(1, 1);
      break;
    case CoverFamily::Kind::FULL:
      bounded(n, n);
      break;
  }
  return DemandCover(n, std::move(out));
}

std::vector<Bundle> adjacent_bundles(const DemandCover& cover, Bundle s) {
  std::vector<Bundle> out;
  out.reserve(cover.size() + 1);
  out.push_back(s);
  for (const auto& v : cover.vectors()) {
    if ((v.plus() & s).empty() && v.minus().subset_of(s)) out.push_back(s.minus(v.minus()) | v.plus());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool cover_contains(const DemandCover& outer, const DemandCover& inner) {
  if (outer.n() != inner.n()) {
    throw ValidationError("cover dimensions differ: " + std::to_string(outer.n()) + " vs " + std::to_string(inner.n()));
  }
  return std::all_of(inner.vectors().begin(), inner.vectors().end(),
                     [&](const CoverVector& v) { return outer.contains(v); });
}

std::string cover_to_json(const DemandCover& cover) {
  auto arr = nlohmann::json::array();
  for (const auto& v : cover.vectors()) arr.push_back(v.entries());
  return arr.dump();
}

DemandCover cover_from_json(std::string_view document, std::optional<int> n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("cover is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("vectors")) {
    if (!n && doc.contains("n") && doc["n"].is_number_integer()) n = doc["n"].get<int>();
    doc = doc["vectors"];
  }
  if (!doc.is_array()) throw ValidationError("cover must be a JSON list of integer arrays");
  std::vector<CoverVector> vectors;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ValidationError("cover entries must be integer arrays");
    std::vector<int> e;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ValidationError("cover entries must be integers");
      e.push_back(x.get<int>());
    }
    vectors.emplace_back(std::move(e));
  }
  if (!n) {
    if (vectors.empty()) throw ValidationError("cannot infer dimension of an empty cover");
    n = vectors.front().n();
  }
  return DemandCover(*n, std::move(vectors));
}

}  // namespace demtype
