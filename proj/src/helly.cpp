#include "hbox/helly.hpp"

#include "hbox/errors.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hbox {

namespace {

// Calls f on every m-subset of {0..n-1} in lexicographic order until f
// returns false.
template <class F>
void for_each_combination(std::size_t n, std::size_t m, F&& f) {
  if (m > n) return;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string indices_str(std::span<const std::size_t> idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

}  // namespace

PiResult pi_k(const Family& f, std::size_t k) {
  if (k == 0) throw InputError("pi_k needs k >= 1");
  PiResult r;
  for_each_combination(f.size(), std::min(k, f.size()), [&](std::span<const std::size_t> idx) {
    if (dfs_intersect(f.subfamily(idx)).empty()) {
      r.holds = false;
      r.violating = std::vector<std::size_t>(idx.begin(), idx.end());
      return false;
    }
    return true;
  });
  return r;
}

Defect helly_defect(const Family& f, const EngineOptions& opts) {
  Defect out;
  if (!dfs_intersect(f).empty()) return out;
  for (std::size_t m = 2; m <= f.size() && !out.value; ++m) {
    for_each_combination(f.size(), m, [&](std::span<const std::size_t> idx) {
      Family sub = f.subfamily(idx);
      if (!dfs_intersect(sub).empty()) return true;
      if (!oracle_intersect(sub, opts).empty()) {
        throw std::logic_error("intersection algorithms disagree on subfamily " + indices_str(idx));
      }
      out.value = m;
      out.witness_subfamily.assign(idx.begin(), idx.end());
      return false;
    });
  }
  if (!out.value) throw std::logic_error("whole family is empty but no empty subfamily was found");
  return out;
}

SolidHellyResult verify_solid_helly(const Family& f) {
  if (!f.all_solid()) throw InputError("verify_solid_helly needs an all-solid family");
  SolidHellyResult r;
  r.pairwise = pi_k(f, 2).holds;
  r.witness = dfs_intersect(f).witness;
  if (r.pairwise && !r.witness) {
    r.pass = false;
    r.details = "pairwise intersecting solid boxes with empty intersection";
  }
  return r;
}

namespace {

// Common shape of the three Helly statements: Pi_{bound} forces a common
// point, and Pi_{bound-1} does too unless `recognize` accepts.
template <class Recognize>
HellyReport check_helly_statement(const Family& f, std::size_t bound, const EngineOptions& opts, Recognize&& recognize) {
  HellyReport r;
  r.defect = helly_defect(f, opts);
  r.pi[bound - 1] = r.defect.pi(bound - 1);
  r.pi[bound] = r.defect.pi(bound);
  if (r.defect.infinite()) return r;
  if (*r.defect.value > bound) {
    r.pass = false;
    r.details = "Pi_" + std::to_string(bound) + " holds but the family has empty intersection (defect " +
                r.defect.str() + ")";
  } else if (*r.defect.value == bound) {
    RecognitionReport rec = recognize();
    r.pass = rec.accepted;
    if (!rec.accepted) {
      r.details = "Pi_" + std::to_string(bound - 1) + " holds with empty intersection but the family is not of the exceptional form (" +
                  rec.failed_condition.value_or("?") + ": " + rec.detail + ")";
    }
    r.recognizer_outcome = std::move(rec);
  }
  return r;
}

}  // namespace

HellyReport verify_theorem1(const Family& f, const EngineOptions& opts) {
  if (f.dim() != 2) throw InputError("verify_theorem1 needs d = 2");
  if (!f.all_hollow()) throw InputError("verify_theorem1 needs an all-hollow family");
  return check_helly_statement(f, 5, opts, [&] { return recognize_facet_form(f, opts); });
}

HellyReport verify_theorem2(const Family& f, const EngineOptions& opts) {
  if (f.dim() < 3) throw InputError("verify_theorem2 needs d >= 3");
  if (f.dim() > 20) throw ResourceCapError("verify_theorem2 is limited to d <= 20");
  if (!f.all_hollow()) throw InputError("verify_theorem2 needs an all-hollow family");
  const std::size_t bound = std::size_t{1} << f.dim();
  return check_helly_statement(f, bound, opts, [&] { return recognize_vertex_form(f); });
}

HellyReport verify_onedim(const Family& f, const EngineOptions& opts) {
  if (f.dim() != 1) throw InputError("verify_onedim needs d = 1");
  if (!f.all_hollow()) throw InputError("verify_onedim needs an all-hollow family");
  HellyReport r = check_helly_statement(f, 3, opts, [&] {
    RecognitionReport rec;
    rec.accepted = recognize_onedim_triple(f);
    if (!rec.accepted) {
      rec.failed_condition = "triangle";
      rec.detail = "distinct members are not {a,b}, {b,c}, {c,a}";
    }
    return rec;
  });
  // A triangle always has defect exactly 3.
  if (r.pass && recognize_onedim_triple(f) && r.defect.value != std::size_t{3}) {
    r.pass = false;
    r.details = "triangle family has defect " + r.defect.str();
  }
  return r;
}

void validate(const Lemma4Config& cfg) {
  const std::size_t d = cfg.base.dim();
  if (d > 20) throw ResourceCapError("missed-vertex configurations are limited to d <= 20");
  if (cfg.boxes.size() != (std::size_t{1} << d)) {
    throw InputError("missed-vertex configuration needs 2^d = " + std::to_string(std::size_t{1} << d) + " hollow boxes");
  }
  for (std::uint64_t code = 0; code < cfg.boxes.size(); ++code) {
    const HollowBox& h = cfg.boxes[code];
    BitString eps(static_cast<unsigned>(d), code);
    if (h.dim() != d) throw InputError("missed-vertex box " + eps.str() + " has the wrong dimension");
    if (!box_within(cfg.base, h.shell())) {
      throw InputError("missed-vertex box " + eps.str() + ": hull " + h.shell().str() + " does not contain " + cfg.base.str());
    }
    if (hollow_contains(h, vertex(cfg.base, eps))) {
      throw InputError("missed-vertex box " + eps.str() + " contains the vertex it must miss");
    }
  }
}

Lemma4Outcome lemma4_trial(const Lemma4Config& cfg) {
  validate(cfg);
  const std::size_t d = cfg.base.dim();
  const std::size_t n = cfg.boxes.size();
  std::vector<Member> members{Member::solid(cfg.base)};
  for (const auto& h : cfg.boxes) members.push_back(Member::hollow(h));
  const Family family(std::move(members));
  const Arrangement arr(family);

  std::vector<Point> vertices;
  for (std::uint64_t code = 0; code < n; ++code) vertices.push_back(vertex(cfg.base, BitString(static_cast<unsigned>(d), code)));

  auto keep_except = [&](std::size_t g, std::size_t h) {
    std::vector<std::size_t> idx{0};
    for (std::size_t e = 0; e < n; ++e) {
      if (e != g && e != h) idx.push_back(e + 1);
    }
    return idx;
  };

  Lemma4Outcome out;
  if (!dfs_intersect(family).empty()) {
    out.pass = false;
    out.failed_part = 1;
    out.details = "B meets the intersection of all boxes";
    return out;
  }
  for (std::size_t g = 0; g < n; ++g) {
    auto idx = keep_except(g, g);
    if (!arr.intersection_within(idx, TargetSet::points({vertices[g]}))) {
      out.pass = false;
      out.failed_part = 2;
      out.details = "dropping box " + std::to_string(g) + " leaves more than its vertex";
      return out;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = g + 1; h < n; ++h) {
      std::size_t differing = 0;
      for (std::size_t a = 0; a < d; ++a) differing += vertices[g][a] != vertices[h][a];
      TargetSet t = differing == 1 ? TargetSet::segment(vertices[g], vertices[h])
                                   : TargetSet::points({vertices[g], vertices[h]});
      if (!arr.intersection_within(keep_except(g, h), t)) {
        out.pass = false;
        out.failed_part = 3;
        out.details = "dropping boxes " + std::to_string(g) + " and " + std::to_string(h) +
                      " leaves points outside the allowed set";
        return out;
      }
    }
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

int draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Interval random_proper_interval(Rng& rng, int grid) {
  int a = draw(rng, 0, grid);
  int b = draw(rng, 0, grid - 1);
  if (b >= a) ++b;
  return Interval(std::min(a, b), std::max(a, b));
}

Interval random_interval(Rng& rng, int grid) {
  int a = draw(rng, 0, grid);
  int b = draw(rng, 0, grid);
  return Interval(std::min(a, b), std::max(a, b));
}

Box random_box(std::size_t d, int grid, Rng& rng, bool proper) {
  std::vector<Interval> sides;
  for (std::size_t a = 0; a < d; ++a) sides.push_back(proper ? random_proper_interval(rng, grid) : random_interval(rng, grid));
  return Box(std::move(sides));
}

}  // namespace

Family random_family(std::size_t d, std::size_t size, int grid, Rng& rng, double solid_fraction) {
  if (grid < 2) throw InputError("random_family needs grid >= 2");
  if (size == 0) throw InputError("random_family needs size >= 1");
  std::bernoulli_distribution solid(solid_fraction);
  std::vector<Member> members;
  for (std::size_t k = 0; k < size; ++k) {
    if (solid(rng)) {
      members.push_back(Member::solid(random_box(d, grid, rng, false)));
    } else {
      members.push_back(Member::hollow(HollowBox(random_box(d, grid, rng, true))));
    }
  }
  return Family(std::move(members));
}

Family random_pairwise_solid_family(std::size_t d, std::size_t size, int grid, Rng& rng) {
  if (grid < 2) throw InputError("random_pairwise_solid_family needs grid >= 2");
  std::vector<Box> boxes;
  while (boxes.size() < size) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 100000) throw std::logic_error("could not draw a box meeting all earlier ones");
      Box b = random_box(d, grid, rng, false);
      bool meets_all = std::all_of(boxes.begin(), boxes.end(), [&](const Box& o) { return box_meet(o, b).has_value(); });
      if (meets_all) {
        boxes.push_back(std::move(b));
        break;
      }
    }
  }
  std::vector<Member> members;
  for (auto& b : boxes) members.push_back(Member::solid(std::move(b)));
  return Family(std::move(members));
}

Lemma4Config random_lemma4_config(std::size_t d, int grid, Rng& rng, bool force_degenerate) {
  if (grid < 2) throw InputError("random_lemma4_config needs grid >= 2");
  std::vector<int> lo(d), hi(d);
  for (std::size_t a = 0; a < d; ++a) {
    int x = draw(rng, 1, grid - 1);
    int y = draw(rng, 1, grid - 1);
    lo[a] = std::min(x, y);
    hi[a] = std::max(x, y);
  }
  if (force_degenerate) {
    std::size_t a = static_cast<std::size_t>(draw(rng, 0, static_cast<int>(d) - 1));
    hi[a] = lo[a];
  }
  std::vector<Interval> base;
  for (std::size_t a = 0; a < d; ++a) base.emplace_back(lo[a], hi[a]);

  // x_e must be strictly inside every side of the hull: on axis a the
  // endpoint picked by e_a needs slack on both sides, the other endpoint
  // only needs containment.
  std::vector<HollowBox> boxes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    BitString eps(static_cast<unsigned>(d), code);
    std::vector<Interval> sides;
    for (unsigned a = 0; a < d; ++a) {
      int x = eps[a] ? hi[a] : lo[a];
      int lower = draw(rng, 0, std::min(lo[a], x - 1));
      int upper = draw(rng, std::max(hi[a], x + 1), grid);
      sides.emplace_back(lower, upper);
    }
    boxes.emplace_back(Box(std::move(sides)));
  }
  return {Box(std::move(base)), std::move(boxes)};
}

std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Theorem1: return "theorem1";
    case SweepMode::Theorem2: return "theorem2";
    case SweepMode::Lemma4: return "lemma4";
    case SweepMode::OracleAgreement: return "oracle_agreement";
    case SweepMode::Solid: return "solid";
    case SweepMode::OneDim: return "onedim";
  }
  return "?";
}

SweepMode parse_sweep_mode(const std::string& s) {
  for (auto m : {SweepMode::Theorem1, SweepMode::Theorem2, SweepMode::Lemma4, SweepMode::OracleAgreement,
                 SweepMode::Solid, SweepMode::OneDim}) {
    if (to_string(m) == s) return m;
  }
  throw InputError("unknown sweep mode '" + s + "'");
}

void validate(const SweepConfig& cfg) {
  if (cfg.d < 1) throw InputError("sweep: d must be >= 1");
  if (cfg.d > 6) throw InputError("sweep: d must be <= 6");
  if (cfg.grid < 2) throw InputError("sweep: grid must be >= 2");
  if (cfg.trials < 1) throw InputError("sweep: trials must be >= 1");
  if (cfg.min_size < 1 || cfg.max_size < cfg.min_size) throw InputError("sweep: need 1 <= min_size <= max_size");
  if (cfg.degenerate_rate < 0 || cfg.degenerate_rate > 1) throw InputError("sweep: degenerate_rate must be in [0,1]");
  if (cfg.solid_fraction < 0 || cfg.solid_fraction > 1) throw InputError("sweep: solid_fraction must be in [0,1]");
  if (cfg.mode == SweepMode::Theorem1 && cfg.d != 2) throw InputError("theorem1 sweeps need d = 2");
  if (cfg.mode == SweepMode::Theorem2 && cfg.d < 3) throw InputError("theorem2 sweeps need d >= 3");
  if (cfg.mode == SweepMode::OneDim && cfg.d != 1) throw InputError("onedim sweeps need d = 1");
}

namespace {

struct TrialResult {
  bool pass = true;
  std::string details;
  std::optional<Family> family;
  std::optional<Lemma4Config> lemma4;
  std::vector<std::string> tags;
};

std::string defect_tag(const Defect& d) { return "defect=" + d.str(); }

TrialResult run_trial(const SweepConfig& cfg, std::uint64_t index, const EngineOptions& opts) {
  Rng rng(trial_seed(cfg.seed, index));
  auto size = static_cast<std::size_t>(draw(rng, static_cast<int>(cfg.min_size), static_cast<int>(cfg.max_size)));
  TrialResult t;
  switch (cfg.mode) {
    case SweepMode::Theorem1:
    case SweepMode::Theorem2:
    case SweepMode::OneDim: {
      Family f = random_family(cfg.d, size, cfg.grid, rng);
      HellyReport r = cfg.mode == SweepMode::Theorem1   ? verify_theorem1(f, opts)
                      : cfg.mode == SweepMode::Theorem2 ? verify_theorem2(f, opts)
                                                        : verify_onedim(f, opts);
      t.pass = r.pass;
      t.details = r.details;
      t.tags.push_back(defect_tag(r.defect));
      if (r.recognizer_outcome && r.recognizer_outcome->accepted) t.tags.emplace_back("exceptional_form");
      if (!t.pass) t.family = std::move(f);
      break;
    }
    case SweepMode::Lemma4: {
      bool degenerate = std::bernoulli_distribution(cfg.degenerate_rate)(rng);
      Lemma4Config c = random_lemma4_config(cfg.d, cfg.grid, rng, degenerate);
      if (!c.base.full_dimensional()) t.tags.emplace_back("degenerate_base");
      Lemma4Outcome o = lemma4_trial(c);
      t.pass = o.pass;
      t.details = o.details;
      if (!t.pass) t.lemma4 = std::move(c);
      break;
    }
    case SweepMode::OracleAgreement: {
      auto d = static_cast<std::size_t>(draw(rng, 1, static_cast<int>(cfg.d)));
      Family f = random_family(d, size, cfg.grid, rng, cfg.solid_fraction);
      IntersectionResult fast = dfs_intersect(f);
      IntersectionResult slow = oracle_intersect(f, opts);
      t.tags.emplace_back(slow.empty() ? "empty" : "nonempty");
      if (fast.empty() != slow.empty()) {
        t.pass = false;
        t.details = "algorithms disagree on emptiness";
      }
      for (const auto* w : {&fast.witness, &slow.witness}) {
        if (!*w) continue;
        for (const Member& m : f) {
          if (!m.contains(**w)) {
            t.pass = false;
            t.details = "witness " + (*w)->str() + " is not in member " + m.hull().str();
          }
        }
      }
      if (!t.pass) t.family = std::move(f);
      break;
    }
    case SweepMode::Solid: {
      Family f = random_pairwise_solid_family(cfg.d, size, cfg.grid, rng);
      SolidHellyResult r = verify_solid_helly(f);
      t.pass = r.pass;
      t.details = r.details;
      if (!t.pass) t.family = std::move(f);
      break;
    }
  }
  return t;
}

}  // namespace

SweepReport sweep(const SweepConfig& cfg, const EngineOptions& opts) {
  validate(cfg);
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.trials));

  SweepReport report;
  report.config = cfg;
  report.trials = cfg.trials;
  std::mutex mu;
  std::exception_ptr error;

  auto worker = [&](unsigned w) {
    std::vector<TrialFailure> failures;
    std::map<std::string, std::uint64_t> tallies;
    std::uint64_t passes = 0;
    try {
      for (std::uint64_t i = w; i < cfg.trials; i += threads) {
        TrialResult t = run_trial(cfg, i, opts);
        for (const auto& tag : t.tags) ++tallies[tag];
        if (t.pass) {
          ++passes;
        } else {
          failures.push_back({i, t.details, std::move(t.family), std::move(t.lemma4)});
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      return;
    }
    std::lock_guard lock(mu);
    report.passes += passes;
    for (auto& f : failures) report.failures.push_back(std::move(f));
    for (const auto& [k, v] : tallies) report.tallies[k] += v;
  };

  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  if (error) std::rethrow_exception(error);
  std::sort(report.failures.begin(), report.failures.end(),
            [](const TrialFailure& a, const TrialFailure& b) { return a.index < b.index; });
  return report;
}

}  // namespace hbox
