#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "demtype/rational.hpp"

namespace demtype {

inline constexpr int kMaxItems = 20;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset of [n], stored as its characteristic word. Item i (1-based)
/// occupies bit i-1.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint32_t word) : word_(word) {}

  static Bundle of(std::initializer_list<int> items);
  static Bundle of(std::span<const int> items);
  static constexpr Bundle full(int n) { return Bundle(n >= 32 ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t word() const { return word_; }
  constexpr bool empty() const { return word_ == 0; }
  constexpr int size() const { return std::popcount(word_); }
  constexpr bool contains(int item) const { return (word_ >> (item - 1)) & 1u; }
  constexpr bool subset_of(Bundle other) const { return (word_ & ~other.word_) == 0; }
  constexpr bool fits(int n) const { return (word_ & ~full(n).word_) == 0; }

  constexpr Bundle with(int item) const { return Bundle(word_ | (1u << (item - 1))); }
  constexpr Bundle without(int item) const { return Bundle(word_ & ~(1u << (item - 1))); }
  constexpr Bundle operator|(Bundle o) const { return Bundle(word_ | o.word_); }
  constexpr Bundle operator&(Bundle o) const { return Bundle(word_ & o.word_); }
  constexpr Bundle minus(Bundle o) const { return Bundle(word_ & ~o.word_); }

  /// 1-based item labels in ascending order.
  std::vector<int> items() const;
  /// "{1,3}" style rendering; "{}" for the empty bundle.
  std::string str() const;

  friend constexpr bool operator==(Bundle, Bundle) = default;
  friend constexpr auto operator<=>(Bundle a, Bundle b) { return a.word_ <=> b.word_; }

 private:
  std::uint32_t word_ = 0;
};

/// Explicit table f : 2^[n] -> Q indexed by bundle word.
///
/// The constructor normalizes f(empty) to 0 by shifting every value; the
/// original empty-set value is kept as metadata. Demand sets are invariant
/// under the shift.
class SetFunction {
 public:
  SetFunction() = default;
  SetFunction(int n, std::vector<Rational> values);

  int n() const { return n_; }
  std::size_t table_size() const { return values_.size(); }
  const Rational& operator()(Bundle s) const { return values_[s.word()]; }
  std::span<const Rational> values() const { return values_; }
  const Rational& original_empty_value() const { return empty_offset_; }

  /// f(S) <= f(T) for all S subset of T, via single-item extensions.
  bool is_monotone() const;
  Rational max_value() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_ = 0;
  std::vector<Rational> values_{Rational(0)};
  Rational empty_offset_;
};

/// Builds a table by evaluating `fn` on every bundle of [n].
template <typename Fn>
SetFunction tabulate(int n, Fn&& fn) {
  std::vector<Rational> values;
  values.reserve(std::size_t{1} << n);
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) values.push_back(fn(Bundle(w)));
  return SetFunction(n, std::move(values));
}

/// Price vector p in Q^n.
class PriceVector {
 public:
  PriceVector() = default;
  explicit PriceVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  PriceVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  static PriceVector uniform(int n, const Rational& value) {
    return PriceVector(std::vector<Rational>(static_cast<std::size_t>(n), value));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int item) const { return entries_[static_cast<std::size_t>(item - 1)]; }
  Rational& operator[](int item) { return entries_[static_cast<std::size_t>(item - 1)]; }
  std::span<const Rational> entries() const { return entries_; }
  Rational total(Bundle s) const;
  PriceVector scaled(const Rational& factor) const;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Nonnegative additive cost vector c in [0, inf)^n.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::vector<Rational> entries);
  CostVector(std::initializer_list<Rational> entries) : CostVector(std::vector<Rational>(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int item) const { return entries_[static_cast<std::size_t>(item - 1)]; }
  std::span<const Rational> entries() const { return entries_; }
  bool is_zero() const;
  /// The price vector alpha^-1 * c seen by the agent under contract alpha > 0.
  PriceVector prices_at(const Rational& alpha) const;

  friend bool operator==(const CostVector&, const CostVector&) = default;

 private:
  std::vector<Rational> entries_;
};

Rational cost_of(const CostVector& c, Bundle s);
Rational value_query(const SetFunction& f, Bundle s);

/// Counting value-oracle view of a set function. The walk-based demand query
/// reaches f only through this interface.
class ValueOracle {
 public:
  explicit ValueOracle(const SetFunction& f) : f_(&f) {}

  int n() const { return f_->n(); }
  Rational query(Bundle s) const {
    ++queries_;
    return (*f_)(s);
  }
  std::size_t query_count() const { return queries_; }
  void reset_count() const { queries_ = 0; }
  /// Direct table access, reserved for test-time validation.
  const SetFunction& function() const { return *f_; }

 private:
  const SetFunction* f_;
  mutable std::size_t queries_ = 0;
};

/// Parsed instance file: a set function with optional costs.
struct Instance {
  std::string name;
  SetFunction f;
  std::optional<CostVector> costs;
  bool monotone_flag = false;
};

/// Parses the JSON instance schema
/// {"n": int, "values": [string x 2^n], "costs": [string x n]?, "monotone": bool?}.
/// Throws ValidationError on schema or value problems.
Instance load_instance(std::string_view document);
SetFunction load_set_function(std::string_view document);
Instance load_instance_file(const std::string& path);
std::string dump_instance(const Instance& instance);

}  // namespace demtype
