#pragma once

#include "hbox/bits.hpp"
#include "hbox/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hbox {

// A string over {0,1,*}. Positions are 0-based; position 0 is the leftmost
// symbol. Stored as two masks in BitString bit order: care marks the
// positions holding 0 or 1, value holds those bits.
class Pattern {
public:
  Pattern(unsigned dim, std::uint64_t care, std::uint64_t value);
  static Pattern parse(std::string_view text);
  static Pattern all_stars(unsigned dim) { return Pattern(dim, 0, 0); }
  static Pattern from_bits(const BitString& b) { return Pattern(b.dim(), mask(b.dim()), b.code()); }

  unsigned dim() const { return dim_; }
  std::uint64_t care() const { return care_; }
  std::uint64_t value() const { return value_; }
  std::uint64_t stars() const { return ~care_ & mask(dim_); }
  // '0', '1' or '*'.
  char symbol(unsigned pos) const;
  unsigned star_count() const;
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  // Lexicographic with 0 < 1 < *.
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);

  static std::uint64_t mask(unsigned dim) { return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1; }

private:
  unsigned dim_;
  std::uint64_t care_;
  std::uint64_t value_;
};

bool matches(const BitString& eps, const Pattern& rho);

// Duplicate-free set of equal-length patterns. Insertion order is kept
// (minimalize removes in that order); equality is set equality.
class PatternSet {
public:
  explicit PatternSet(unsigned dim) : dim_(dim) {}
  PatternSet(unsigned dim, std::vector<Pattern> patterns);
  static PatternSet parse(std::span<const std::string> texts);

  unsigned dim() const { return dim_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  // False when p was already present.
  bool insert(const Pattern& p);
  bool contains(const Pattern& p) const;
  PatternSet without(std::size_t index) const;
  std::vector<Pattern> sorted() const;
  std::string str() const;

  friend bool operator==(const PatternSet& a, const PatternSet& b) {
    return a.dim_ == b.dim_ && a.sorted() == b.sorted();
  }

private:
  unsigned dim_;
  std::vector<Pattern> patterns_;
};

// Coverage questions enumerate all 2^d strings.
inline constexpr unsigned max_cover_dim = 24;

struct CoverCheck {
  bool is_cover = false;
  // Lexicographically least string matching no pattern.
  std::optional<BitString> uncovered;
};

CoverCheck is_cover(const PatternSet& c);
bool is_minimal_cover(const PatternSet& c);
// Drops patterns in input order while the rest still covers.
PatternSet minimalize(const PatternSet& c);

enum class Relation { StrictlyLess, Equal, Greater };
std::string to_string(Relation r);

struct Lemma3Class {
  Relation relation = Relation::StrictlyLess;
  // For Equal/Greater: which listed exceptional cover this is ("{*}",
  // "{**}", "{0,1}^d", "{0*,1*}", "{*0,*1}"), or "unlisted".
  std::string case_id;
};

struct CoverReport {
  bool is_cover = false;
  bool is_minimal = false;
  // Symbols occurring at each position, in the order 0, 1, *.
  std::vector<std::string> position_sets;
  // Positions holding only stars.
  std::vector<unsigned> star_positions;
  unsigned s = 0;
  std::size_t size = 0;
  // Every position set is {*}, {0,1} or {0,1,*}, and size <= 2^(d-s).
  bool lemma1_ok = false;
  bool size_equals_bound = false;
  // size == 2^(d-s) exactly when the cover is every pattern with stars on
  // the star positions and bits elsewhere.
  bool lemma1_equality_case = false;
  Lemma3Class lemma3_class;
  // size < 2^d - 2s, or the cover is one of the listed exceptions with the
  // listed relation.
  bool lemma3_ok = false;
};

CoverReport analyze(const PatternSet& c);

// Compares 2^(d-s) with 2^d - 2s exactly.
Relation num_trichotomy(long long d, long long s);
// The case list: Greater at (1,1), (2,2); Equal at s = 0 and (2,1).
Relation num_trichotomy_cases(long long d, long long s);

enum class SwapGroup {
  PerPosition,  // position permutations with independent 0/1 swaps
  Global,       // position permutations with one swap applied everywhere
};

// Least image under the group, returned with patterns in ascending order.
PatternSet canonical_form(const PatternSet& c, SwapGroup group = SwapGroup::PerPosition);

// Image of c under position permutation perm (new position k takes old
// position perm[k]) followed by swapping 0/1 at the positions set in flips
// (BitString bit order).
PatternSet transform(const PatternSet& c, std::span<const unsigned> perm, std::uint64_t flips);

// Deletes the star-only positions. nullopt when every position is one.
std::optional<PatternSet> project_out_stars(const PatternSet& c);

struct EnumerateOptions {
  SwapGroup group = SwapGroup::PerPosition;
  // d >= 3 requires search mode: exact set-cover backtracking with a budget.
  bool allow_search = false;
  std::uint64_t node_budget = 50'000'000;
};

struct CoverEnumeration {
  std::vector<PatternSet> classes;  // canonical forms, sorted
  std::size_t raw_count = 0;        // minimal covers before canonicalization
};

CoverEnumeration enumerate_minimal_covers(unsigned d, const EnumerateOptions& opts = {});

}  // namespace hbox
