#include "hbox/patterns.hpp"

#include "hbox/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace hbox {

namespace {

std::uint64_t pos_bit(unsigned dim, unsigned pos) { return std::uint64_t{1} << (dim - 1 - pos); }

template <class F>
void for_each_match(const Pattern& p, F&& f) {
  const std::uint64_t st = p.stars();
  std::uint64_t sub = st;
  while (true) {
    f(p.value() | sub);
    if (sub == 0) break;
    sub = (sub - 1) & st;
  }
}

void require_cover_dim(unsigned d) {
  if (d > max_cover_dim) {
    throw ResourceCapError("coverage check needs 2^" + std::to_string(d) + " strings; the cap is d <= " +
                           std::to_string(max_cover_dim));
  }
}

// Number of patterns matching each string, indexed by string code.
std::vector<std::uint32_t> coverage_counts(const PatternSet& c) {
  require_cover_dim(c.dim());
  std::vector<std::uint32_t> counts(std::size_t{1} << c.dim(), 0);
  for (const Pattern& p : c) for_each_match(p, [&](std::uint64_t e) { ++counts[e]; });
  return counts;
}

bool has_private_string(const Pattern& p, const std::vector<std::uint32_t>& counts) {
  bool found = false;
  for_each_match(p, [&](std::uint64_t e) { found = found || counts[e] == 1; });
  return found;
}

}  // namespace

Pattern::Pattern(unsigned dim, std::uint64_t care, std::uint64_t value) : dim_(dim), care_(care), value_(value) {
  if (dim == 0 || dim > BitString::max_dim) throw InputError("pattern length must be in 1..63");
  if ((care & ~mask(dim)) != 0 || (value & ~care) != 0) throw InputError("pattern masks out of range");
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty() || text.size() > BitString::max_dim) throw InputError("pattern length must be in 1..63");
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  for (char ch : text) {
    care <<= 1;
    value <<= 1;
    switch (ch) {
      case '0': care |= 1; break;
      case '1': care |= 1; value |= 1; break;
      case '*': break;
      default: throw InputError("pattern '" + std::string(text) + "' has a symbol outside {0,1,*}");
    }
  }
  return Pattern(static_cast<unsigned>(text.size()), care, value);
}

char Pattern::symbol(unsigned pos) const {
  std::uint64_t b = pos_bit(dim_, pos);
  if (!(care_ & b)) return '*';
  return (value_ & b) ? '1' : '0';
}

unsigned Pattern::star_count() const { return static_cast<unsigned>(std::popcount(stars())); }

std::string Pattern::str() const {
  std::string s(dim_, '*');
  for (unsigned i = 0; i < dim_; ++i) s[i] = symbol(i);
  return s;
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  std::uint64_t diff = (a.care_ ^ b.care_) | (a.value_ ^ b.value_);
  if (diff == 0) return std::strong_ordering::equal;
  unsigned pos = static_cast<unsigned>(std::countl_zero(diff)) - (64 - a.dim_);
  auto rank = [](char c) { return c == '*' ? 2 : c - '0'; };
  return rank(a.symbol(pos)) <=> rank(b.symbol(pos));
}

bool matches(const BitString& eps, const Pattern& rho) {
  if (eps.dim() != rho.dim()) throw InputError("matches: length mismatch");
  return (eps.code() & rho.care()) == rho.value();
}

PatternSet::PatternSet(unsigned dim, std::vector<Pattern> patterns) : dim_(dim) {
  for (const Pattern& p : patterns) insert(p);
}

PatternSet PatternSet::parse(std::span<const std::string> texts) {
  if (texts.empty()) throw InputError("pattern set needs at least one pattern to fix its length");
  std::vector<Pattern> pats;
  for (const auto& t : texts) pats.push_back(Pattern::parse(t));
  const unsigned dim = pats.front().dim();
  return PatternSet(dim, std::move(pats));
}

bool PatternSet::insert(const Pattern& p) {
  if (p.dim() != dim_) throw InputError("pattern '" + p.str() + "' has the wrong length for this set");
  if (contains(p)) return false;
  patterns_.push_back(p);
  return true;
}

bool PatternSet::contains(const Pattern& p) const {
  return std::find(patterns_.begin(), patterns_.end(), p) != patterns_.end();
}

PatternSet PatternSet::without(std::size_t index) const {
  PatternSet out(dim_);
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i != index) out.patterns_.push_back(patterns_[i]);
  }
  return out;
}

std::vector<Pattern> PatternSet::sorted() const {
  std::vector<Pattern> s = patterns_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string PatternSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) s += ",";
    s += patterns_[i].str();
  }
  return s + "}";
}

CoverCheck is_cover(const PatternSet& c) {
  auto counts = coverage_counts(c);
  auto it = std::find(counts.begin(), counts.end(), 0U);
  if (it == counts.end()) return {true, std::nullopt};
  return {false, BitString(c.dim(), static_cast<std::uint64_t>(it - counts.begin()))};
}

bool is_minimal_cover(const PatternSet& c) {
  auto counts = coverage_counts(c);
  if (std::find(counts.begin(), counts.end(), 0U) != counts.end()) return false;
  return std::all_of(c.begin(), c.end(), [&](const Pattern& p) { return has_private_string(p, counts); });
}

PatternSet minimalize(const PatternSet& c) {
  auto counts = coverage_counts(c);
  if (std::find(counts.begin(), counts.end(), 0U) != counts.end()) {
    throw InputError("minimalize: pattern set is not a cover");
  }
  PatternSet out(c.dim());
  for (const Pattern& p : c) {
    bool removable = true;
    for_each_match(p, [&](std::uint64_t e) { removable = removable && counts[e] >= 2; });
    if (removable) {
      for_each_match(p, [&](std::uint64_t e) { --counts[e]; });
    } else {
      out.insert(p);
    }
  }
  return out;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return "less";
    case Relation::Equal: return "equal";
    case Relation::Greater: return "greater";
  }
  return "?";
}

namespace {

PatternSet literal(std::initializer_list<const char*> pats) {
  std::vector<Pattern> v;
  for (const char* p : pats) v.push_back(Pattern::parse(p));
  const unsigned dim = v.front().dim();
  return PatternSet(dim, std::move(v));
}

bool is_full_cube(const PatternSet& c) {
  if (c.dim() >= 63 || c.size() != (std::size_t{1} << c.dim())) return false;
  return std::all_of(c.begin(), c.end(), [](const Pattern& p) { return p.stars() == 0; });
}

Lemma3Class classify_lemma3(const PatternSet& c, unsigned s) {
  const unsigned d = c.dim();
  BigInt bound = (BigInt(1) << d) - 2 * BigInt(s);
  BigInt size = c.size();
  Lemma3Class out;
  if (size < bound) return out;
  out.relation = size == bound ? Relation::Equal : Relation::Greater;
  if (c == literal({"*"})) {
    out.case_id = "{*}";
  } else if (c == literal({"**"})) {
    out.case_id = "{**}";
  } else if (is_full_cube(c)) {
    out.case_id = "{0,1}^d";
  } else if (c == literal({"0*", "1*"})) {
    out.case_id = "{0*,1*}";
  } else if (c == literal({"*0", "*1"})) {
    out.case_id = "{*0,*1}";
  } else {
    out.case_id = "unlisted";
  }
  return out;
}

}  // namespace

CoverReport analyze(const PatternSet& c) {
  if (!is_minimal_cover(c)) throw InputError("analyze: " + c.str() + " is not a minimal cover");
  const unsigned d = c.dim();
  CoverReport r;
  r.is_cover = true;
  r.is_minimal = true;
  r.size = c.size();

  bool sets_ok = true;
  std::uint64_t star_mask = 0;
  for (unsigned i = 0; i < d; ++i) {
    bool zero = false, one = false, star = false;
    for (const Pattern& p : c) {
      char sym = p.symbol(i);
      zero = zero || sym == '0';
      one = one || sym == '1';
      star = star || sym == '*';
    }
    std::string e;
    if (zero) e += '0';
    if (one) e += '1';
    if (star) e += '*';
    r.position_sets.push_back(e);
    sets_ok = sets_ok && (e == "*" || e == "01" || e == "01*");
    if (e == "*") {
      r.star_positions.push_back(i);
      star_mask |= pos_bit(d, i);
    }
  }
  r.s = static_cast<unsigned>(r.star_positions.size());

  BigInt bound = BigInt(1) << (d - r.s);
  r.lemma1_ok = sets_ok && BigInt(r.size) <= bound;
  r.size_equals_bound = BigInt(r.size) == bound;
  bool stars_exactly_on_j =
      std::all_of(c.begin(), c.end(), [&](const Pattern& p) { return p.stars() == star_mask; });
  bool is_subcube_grid = stars_exactly_on_j && r.size_equals_bound;
  r.lemma1_equality_case = r.size_equals_bound == is_subcube_grid;

  r.lemma3_class = classify_lemma3(c, r.s);
  const auto& cls = r.lemma3_class;
  switch (cls.relation) {
    case Relation::StrictlyLess: r.lemma3_ok = true; break;
    case Relation::Greater: r.lemma3_ok = cls.case_id == "{*}" || cls.case_id == "{**}"; break;
    case Relation::Equal:
      r.lemma3_ok = cls.case_id == "{0,1}^d" || cls.case_id == "{0*,1*}" || cls.case_id == "{*0,*1}";
      break;
  }
  return r;
}

Relation num_trichotomy(long long d, long long s) {
  if (d < 0 || s < 0 || s > d) throw InputError("num_trichotomy needs 0 <= s <= d");
  BigInt lhs = BigInt(1) << static_cast<unsigned>(d - s);
  BigInt rhs = (BigInt(1) << static_cast<unsigned>(d)) - 2 * BigInt(s);
  if (lhs < rhs) return Relation::StrictlyLess;
  return lhs == rhs ? Relation::Equal : Relation::Greater;
}

Relation num_trichotomy_cases(long long d, long long s) {
  if (d < 0 || s < 0 || s > d) throw InputError("num_trichotomy needs 0 <= s <= d");
  if ((d == 1 && s == 1) || (d == 2 && s == 2)) return Relation::Greater;
  if (s == 0 || (d == 2 && s == 1)) return Relation::Equal;
  return Relation::StrictlyLess;
}

PatternSet transform(const PatternSet& c, std::span<const unsigned> perm, std::uint64_t flips) {
  const unsigned d = c.dim();
  if (perm.size() != d) throw InputError("transform: permutation has the wrong length");
  PatternSet out(d);
  for (const Pattern& p : c) {
    std::uint64_t care = 0, value = 0;
    for (unsigned k = 0; k < d; ++k) {
      std::uint64_t from = pos_bit(d, perm[k]);
      std::uint64_t to = pos_bit(d, k);
      if (p.care() & from) {
        care |= to;
        bool bit = (p.value() & from) != 0;
        if (flips & to) bit = !bit;
        if (bit) value |= to;
      }
    }
    out.insert(Pattern(d, care, value));
  }
  return out;
}

PatternSet canonical_form(const PatternSet& c, SwapGroup group) {
  const unsigned d = c.dim();
  std::vector<unsigned> perm(d);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::uint64_t> flip_set;
  if (group == SwapGroup::Global) {
    flip_set = {0, Pattern::mask(d)};
  } else {
    if (d > 20) throw ResourceCapError("canonical_form: dimension too large for the symmetry group");
    for (std::uint64_t f = 0; f <= Pattern::mask(d); ++f) flip_set.push_back(f);
  }
  std::vector<Pattern> best = c.sorted();
  do {
    for (std::uint64_t f : flip_set) {
      std::vector<Pattern> img = transform(c, perm, f).sorted();
      if (img < best) best = std::move(img);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PatternSet(d, std::move(best));
}

std::optional<PatternSet> project_out_stars(const PatternSet& c) {
  const unsigned d = c.dim();
  std::vector<unsigned> keep;
  for (unsigned i = 0; i < d; ++i) {
    bool only_stars = std::all_of(c.begin(), c.end(), [&](const Pattern& p) { return p.symbol(i) == '*'; });
    if (!only_stars) keep.push_back(i);
  }
  if (keep.empty()) return std::nullopt;
  PatternSet out(static_cast<unsigned>(keep.size()));
  for (const Pattern& p : c) {
    std::string s;
    for (unsigned i : keep) s += p.symbol(i);
    out.insert(Pattern::parse(s));
  }
  return out;
}

namespace {

std::vector<Pattern> all_patterns(unsigned d) {
  std::vector<Pattern> out;
  std::size_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= 3;
  for (std::size_t k = 0; k < total; ++k) {
    std::string s(d, '0');
    std::size_t v = k;
    for (unsigned i = d; i-- > 0;) {
      s[i] = "01*"[v % 3];
      v /= 3;
    }
    out.push_back(Pattern::parse(s));
  }
  return out;
}

// Exact enumeration of minimal covers: branch on the patterns covering the
// least uncovered string, excluding earlier siblings so each set is reached
// once, and cut branches where a chosen pattern has lost all private strings.
class CoverSearch {
public:
  CoverSearch(unsigned d, std::uint64_t budget)
      : d_(d), budget_(budget), pats_(all_patterns(d)), counts_(std::size_t{1} << d, 0),
        excluded_(pats_.size(), false) {}

  template <class Emit>
  void run(Emit&& emit) {
    descend(emit);
  }

private:
  template <class Emit>
  void descend(Emit& emit) {
    if (++nodes_ > budget_) {
      throw ResourceCapError("minimal cover search exceeded its node budget of " + std::to_string(budget_));
    }
    auto it = std::find(counts_.begin(), counts_.end(), 0U);
    if (it == counts_.end()) {
      PatternSet s(d_);
      for (std::size_t i : chosen_) s.insert(pats_[i]);
      emit(std::move(s));
      return;
    }
    BitString u(d_, static_cast<std::uint64_t>(it - counts_.begin()));
    std::vector<std::size_t> tried;
    for (std::size_t i = 0; i < pats_.size(); ++i) {
      if (excluded_[i] || !matches(u, pats_[i])) continue;
      add(i);
      bool viable = std::all_of(chosen_.begin(), chosen_.end(),
                                [&](std::size_t q) { return has_private_string(pats_[q], counts_); });
      if (viable) descend(emit);
      remove(i);
      excluded_[i] = true;
      tried.push_back(i);
    }
    for (std::size_t i : tried) excluded_[i] = false;
  }

  void add(std::size_t i) {
    chosen_.push_back(i);
    for_each_match(pats_[i], [&](std::uint64_t e) { ++counts_[e]; });
  }
  void remove(std::size_t i) {
    chosen_.pop_back();
    for_each_match(pats_[i], [&](std::uint64_t e) { --counts_[e]; });
  }

  unsigned d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Pattern> pats_;
  std::vector<std::uint32_t> counts_;
  std::vector<bool> excluded_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

CoverEnumeration enumerate_minimal_covers(unsigned d, const EnumerateOptions& opts) {
  if (d == 0) throw InputError("enumerate_minimal_covers needs d >= 1");
  CoverEnumeration out;
  std::set<std::vector<Pattern>> classes;
  auto record = [&](const PatternSet& c) {
    ++out.raw_count;
    classes.insert(canonical_form(c, opts.group).sorted());
  };

  if (d <= 2) {
    const auto pats = all_patterns(d);
    for (std::uint32_t subset = 1; subset < (1U << pats.size()); ++subset) {
      PatternSet c(d);
      for (std::size_t i = 0; i < pats.size(); ++i) {
        if (subset & (1U << i)) c.insert(pats[i]);
      }
      if (is_minimal_cover(c)) record(c);
    }
  } else {
    if (!opts.allow_search) {
      throw InputError("exhaustive minimal-cover enumeration is limited to d <= 2; enable search mode for larger d");
    }
    if (d > 4) throw ResourceCapError("minimal cover search is limited to d <= 4");
    CoverSearch search(d, opts.node_budget);
    search.run([&](PatternSet c) { record(c); });
  }

  for (const auto& c : classes) out.classes.emplace_back(d, c);
  return out;
}

}  // namespace hbox
