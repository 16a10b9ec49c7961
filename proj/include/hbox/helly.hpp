#pragma once

#include "hbox/extremal.hpp"
#include "hbox/intersection.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hbox {

// Size of the smallest subfamily with empty intersection; infinite when the
// whole family intersects.
struct Defect {
  std::optional<std::size_t> value;
  // First empty subfamily of that size, by lexicographic index order.
  std::vector<std::size_t> witness_subfamily;

  bool infinite() const { return !value.has_value(); }
  // Pi_k holds iff k < defect.
  bool pi(std::size_t k) const { return infinite() || k < *value; }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
};

struct PiResult {
  bool holds = true;
  std::optional<std::vector<std::size_t>> violating;
};

// Every subfamily of at most k members intersects. Only subfamilies of size
// min(k, #f) are examined.
PiResult pi_k(const Family& f, std::size_t k);

// Ascends m = 2, 3, ... with the backtracking algorithm; the empty witness
// is confirmed by the grid oracle.
Defect helly_defect(const Family& f, const EngineOptions& opts = {});

struct HellyReport {
  Defect defect;
  std::map<std::size_t, bool> pi;
  bool pass = true;
  std::string details;
  std::optional<RecognitionReport> recognizer_outcome;
};

struct SolidHellyResult {
  bool pass = true;
  bool pairwise = false;
  std::optional<Point> witness;
  std::string details;
};

// For solid boxes, pairwise intersection forces a common point.
SolidHellyResult verify_solid_helly(const Family& f);

// d = 2: Pi_5 forces a common point, and Pi_4 does too unless the family has
// the facet form.
HellyReport verify_theorem1(const Family& f, const EngineOptions& opts = {});
// d >= 3: Pi_{2^d} forces a common point, and Pi_{2^d - 1} does too unless
// the family has the vertex form.
HellyReport verify_theorem2(const Family& f, const EngineOptions& opts = {});
// d = 1: Pi_2 forces a common point unless the family is a triangle
// {a,b}, {b,c}, {c,a}.
HellyReport verify_onedim(const Family& f, const EngineOptions& opts = {});

// A box B (possibly degenerate) and, for every vertex index e, a hollow box
// whose hull contains B and which misses the vertex x_e. boxes is indexed by
// the vertex code.
struct Lemma4Config {
  Box base;
  std::vector<HollowBox> boxes;
};

// Throws InputError naming the first violated hypothesis.
void validate(const Lemma4Config& cfg);

struct Lemma4Outcome {
  bool pass = true;
  std::optional<int> failed_part;
  std::string details;
};

// 1: B meets no point common to all boxes; 2: dropping box g leaves at most
// the vertex x_g; 3: dropping g and h leaves at most the edge between x_g
// and x_h when they differ in one coordinate, else at most {x_g, x_h}.
Lemma4Outcome lemma4_trial(const Lemma4Config& cfg);

using Rng = std::mt19937_64;

// Seed of trial `index` under `master`: splitmix64 of their combination.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Members with integer endpoints in {0..grid}. Each member is solid with
// probability solid_fraction; hollow members have lo < hi on every axis.
Family random_family(std::size_t d, std::size_t size, int grid, Rng& rng, double solid_fraction = 0.0);
// Solid boxes added one at a time, each redrawn until it meets all earlier
// ones, so the result is pairwise intersecting.
Family random_pairwise_solid_family(std::size_t d, std::size_t size, int grid, Rng& rng);
// B has endpoints in {1..grid-1}; with force_degenerate at least one axis of
// B collapses to a point.
Lemma4Config random_lemma4_config(std::size_t d, int grid, Rng& rng, bool force_degenerate);

enum class SweepMode { Theorem1, Theorem2, Lemma4, OracleAgreement, Solid, OneDim };

std::string to_string(SweepMode m);
SweepMode parse_sweep_mode(const std::string& s);

struct SweepConfig {
  SweepMode mode = SweepMode::Theorem1;
  // Ambient dimension; in oracle_agreement mode each trial draws its
  // dimension uniformly from 1..d.
  std::size_t d = 2;
  std::uint64_t trials = 1000;
  std::size_t min_size = 2;
  std::size_t max_size = 8;
  int grid = 6;
  std::uint64_t seed = 1;
  // lemma4: fraction of trials whose base box is forced degenerate.
  double degenerate_rate = 0.25;
  // oracle_agreement: probability that a member is solid.
  double solid_fraction = 0.2;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
};

void validate(const SweepConfig& cfg);

struct TrialFailure {
  std::uint64_t index = 0;
  std::string details;
  std::optional<Family> family;
  std::optional<Lemma4Config> lemma4;
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::vector<TrialFailure> failures;  // ordered by trial index
  std::map<std::string, std::uint64_t> tallies;
};

SweepReport sweep(const SweepConfig& cfg, const EngineOptions& opts = {});

}  // namespace hbox
