#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demtype/set_function.hpp"

namespace demtype {

/// Sign vector in {-1,0,1}^n. The positive and negative supports are kept as
/// bundle masks so adjacency tests are two word operations.
class CoverVector {
 public:
  CoverVector() = default;
  explicit CoverVector(std::vector<int> entries);
  CoverVector(int n, Bundle plus, Bundle minus);

  /// chi_T - chi_S.
  static CoverVector difference(int n, Bundle t, Bundle s);
  static CoverVector unit(int n, int item, int sign = 1);

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int item) const { return entries_[static_cast<std::size_t>(item - 1)]; }
  Bundle plus() const { return plus_; }
  Bundle minus() const { return minus_; }
  int positives() const { return plus_.size(); }
  int negatives() const { return minus_.size(); }
  int support_size() const { return plus_.size() + minus_.size(); }
  bool is_zero() const { return plus_.empty() && minus_.empty(); }
  CoverVector negated() const { return CoverVector(n(), minus_, plus_); }

  /// "(1,-1,0)".
  std::string str() const;

  friend bool operator==(const CoverVector& a, const CoverVector& b) { return a.entries_ == b.entries_; }
  /// Lexicographic over entries with -1 < 0 < 1.
  friend std::strong_ordering operator<=>(const CoverVector& a, const CoverVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  Bundle plus_;
  Bundle minus_;
};

/// A set of sign vectors, deduplicated and kept in canonical order.
class DemandCover {
 public:
  DemandCover() = default;
  DemandCover(int n, std::vector<CoverVector> vectors);

  int n() const { return n_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<CoverVector>& vectors() const { return vectors_; }
  bool contains(const CoverVector& v) const;

  bool is_pm_closed() const;
  bool has_all_units() const;
  /// Adds -v for every v.
  DemandCover pm_closure() const;

  friend bool operator==(const DemandCover&, const DemandCover&) = default;

 private:
  int n_ = 0;
  std::vector<CoverVector> vectors_;
};

struct CoverFamily {
  enum class Kind { GS, GC, GSC, GSC_PLUS, DELTA_SUB, ASC, FULL };

  Kind kind = Kind::GS;
  /// GSC only: the two parts of the bipartition.
  Bundle part1;
  Bundle part2;
  /// DELTA_SUB only.
  int delta = 1;

  static CoverFamily gs() { return make(Kind::GS); }
  static CoverFamily gc() { return make(Kind::GC); }
  static CoverFamily gsc(Bundle a1, Bundle a2) {
    CoverFamily f = make(Kind::GSC);
    f.part1 = a1;
    f.part2 = a2;
    return f;
  }
  static CoverFamily gsc_plus() { return make(Kind::GSC_PLUS); }
  static CoverFamily delta_sub(int d) {
    CoverFamily f = make(Kind::DELTA_SUB);
    f.delta = d;
    return f;
  }
  static CoverFamily asc() { return make(Kind::ASC); }
  static CoverFamily full() { return make(Kind::FULL); }

  /// Accepts GS, GC, GSC:1,2|3, GSC_PLUS (or GSC+), DELTA_SUB:k, ASC, FULL.
  static CoverFamily parse(std::string_view text);
  std::string name() const;

 private:
  static CoverFamily make(Kind k) {
    CoverFamily f;
    f.kind = k;
    return f;
  }
};

/// The exact vector set of a family at dimension n. Throws ValidationError on
/// a partition that does not split [n] or on delta < 1.
DemandCover gen_cover(const CoverFamily& family, int n);

/// {T : chi_T - chi_S in V} together with S itself, ascending by word.
std::vector<Bundle> adjacent_bundles(const DemandCover& cover, Bundle s);

/// True iff every vector of `inner` lies in `outer`. Throws ValidationError on
/// dimension mismatch.
bool cover_contains(const DemandCover& outer, const DemandCover& inner);

/// JSON list of integer arrays.
std::string cover_to_json(const DemandCover& cover);
/// Parses a JSON list of integer arrays; `n` is needed only for an empty list.
DemandCover cover_from_json(std::string_view document, std::optional<int> n = std::nullopt);

}  // namespace demtype
