#include "demtype/set_function.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace demtype {

Bundle Bundle::of(std::initializer_list<int> items) {
  return of(std::span<const int>(items.begin(), items.size()));
}

Bundle Bundle::of(std::span<const int> items) {
  std::uint32_t w = 0;
  for (int i : items) {
    if (i < 1 || i > kMaxItems) throw std::out_of_range("item label out of range: " + std::to_string(i));
    w |= 1u << (i - 1);
  }
  return Bundle(w);
}

std::vector<int> Bundle::items() const {
  std::vector<int> out;
  for (std::uint32_t w = word_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

std::string Bundle::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : items()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

SetFunction::SetFunction(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (n < 0 || n > kMaxItems) throw ValidationError("item count must lie in [0, 20], got " + std::to_string(n));
  if (values_.size() != (std::size_t{1} << n)) {
    throw ValidationError("expected " + std::to_string(std::size_t{1} << n) + " values for n=" +
                          std::to_string(n) + ", got " + std::to_string(values_.size()));
  }
  empty_offset_ = values_[0];
  if (!empty_offset_.is_zero()) {
    for (auto& v : values_) v -= empty_offset_;
  }
}

bool SetFunction::is_monotone() const {
  for (std::uint32_t w = 0; w < values_.size(); ++w) {
    for (int i = 0; i < n_; ++i) {
      const std::uint32_t bit = 1u << i;
      if ((w & bit) == 0 && values_[w | bit] < values_[w]) return false;
    }
  }
  return true;
}

Rational SetFunction::max_value() const {
  Rational best = values_[0];
  for (const auto& v : values_) {
    if (v > best) best = v;
  }
  return best;
}

Rational PriceVector::total(Bundle s) const {
  Rational sum;
  for (std::uint32_t w = s.word(); w != 0; w &= w - 1) sum += entries_[static_cast<std::size_t>(std::countr_zero(w))];
  return sum;
}

PriceVector PriceVector::scaled(const Rational& factor) const {
  std::vector<Rational> out(entries_);
  for (auto& x : out) x *= factor;
  return PriceVector(std::move(out));
}

CostVector::CostVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& c : entries_) {
    if (c.sign() < 0) throw ValidationError("cost entries must be nonnegative, got " + c.str());
  }
}

bool CostVector::is_zero() const {
  for (const auto& c : entries_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

PriceVector CostVector::prices_at(const Rational& alpha) const {
  if (alpha.sign() <= 0) throw std::domain_error("contract parameter must be positive to form prices");
  std::vector<Rational> out(entries_);
  for (auto& x : out) x /= alpha;
  return PriceVector(std::move(out));
}

Rational cost_of(const CostVector& c, Bundle s) {
  Rational sum;
  for (std::uint32_t w = s.word(); w != 0; w &= w - 1) sum += c[std::countr_zero(w) + 1];
  return sum;
}

Rational value_query(const SetFunction& f, Bundle s) { return f(s); }

namespace {

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ParseError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ValidationError(where + ": expected a rational string, got " + j.dump());
}

}  // namespace

Instance load_instance(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ValidationError("instance requires integer field 'n'");
  const long n = doc["n"].get<long>();
  if (n < 0 || n > kMaxItems) throw ValidationError("'n' must lie in [0, 20]");
  if (!doc.contains("values") || !doc["values"].is_array()) throw ValidationError("instance requires array field 'values'");

  const auto& raw = doc["values"];
  const std::size_t expected = std::size_t{1} << n;
  if (raw.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) + " values for n=" + std::to_string(n) + ", got " +
                          std::to_string(raw.size()));
  }
  std::vector<Rational> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < raw.size(); ++i) values.push_back(rational_from_json(raw[i], "values[" + std::to_string(i) + "]"));

  Instance inst;
  inst.f = SetFunction(static_cast<int>(n), std::move(values));
  if (doc.contains("name") && doc["name"].is_string()) inst.name = doc["name"].get<std::string>();
  if (doc.contains("monotone")) {
    if (!doc["monotone"].is_boolean()) throw ValidationError("'monotone' must be a boolean");
    inst.monotone_flag = doc["monotone"].get<bool>();
  }
  if (inst.monotone_flag) {
    for (std::size_t i = 0; i < inst.f.table_size(); ++i) {
      if (inst.f(Bundle(static_cast<std::uint32_t>(i))).sign() < 0) {
        throw ValidationError("values[" + std::to_string(i) + "] is negative after normalization but 'monotone' is set");
      }
    }
    if (!inst.f.is_monotone()) throw ValidationError("'monotone' is set but the values are not monotone");
  }
  if (doc.contains("costs") && !doc["costs"].is_null()) {
    const auto& rc = doc["costs"];
    if (!rc.is_array() || rc.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("'costs' must be an array of " + std::to_string(n) + " rationals");
    }
    std::vector<Rational> costs;
    for (std::size_t i = 0; i < rc.size(); ++i) costs.push_back(rational_from_json(rc[i], "costs[" + std::to_string(i) + "]"));
    inst.costs = CostVector(std::move(costs));
  }
  return inst;
}

SetFunction load_set_function(std::string_view document) { return load_instance(document).f; }

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string dump_instance(const Instance& instance) {
  nlohmann::ordered_json doc;
  if (!instance.name.empty()) doc["name"] = instance.name;
  doc["n"] = instance.f.n();
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : instance.f.values()) values.push_back(v.str());
  doc["values"] = std::move(values);
  if (instance.costs) {
    auto costs = nlohmann::ordered_json::array();
    for (const auto& c : instance.costs->entries()) costs.push_back(c.str());
    doc["costs"] = std::move(costs);
  }
  return doc.dump();
}

}  // namespace demtype
