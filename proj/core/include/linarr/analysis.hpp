#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linarr/ensembles.hpp"
#include "linarr/minla.hpp"
#include "linarr/statistics.hpp"

namespace linarr {

struct AnalysisOptions {
  int sweep_max_n = kDefaultSweepMaxN;    // exhaustive permutation bound
  int search_max_n = kDefaultSearchMaxN;  // extremal arrangement bound
  long long samples = 1'000'000;          // Monte Carlo fallback size
  std::uint64_t seed = 0;
  double alpha = 0.05;
  int threads = 0;  // 0 = hardware concurrency
};

// One fully analyzed sentence: observed quantities, the three predictions
// with their normalized errors, and the permutation-test results.
struct SentenceAnalysis {
  std::string id;
  int n = 0;
  Rational mean_k2;

  long long c = 0;  // observed crossings
  long long d = 0;  // observed total dependency length
  long long c_max = 0;
  std::optional<long long> d_min;  // exact values; absent beyond search_max_n
  std::optional<long long> d_max;

  Rational e0_c;
  Rational e0_d;
  Rational e1_c;
  long long b1 = 0;
  long long b2 = 0;
  std::optional<Rational> e_c_given_d;    // absent when no sample hit D
  std::optional<double> e_c_given_d_se;   // Monte Carlo only

  Rational eps0;
  Rational eps1;
  std::optional<Rational> eps_cond;

  std::optional<PValueReport> p_c;
  std::optional<PValueReport> p_dev;
  long long r = 0;

  EnsembleMethod method = EnsembleMethod::Exhaustive;
  long long samples_used = 0;
  std::uint64_t seed_used = 0;
};

// stream disambiguates parallel Monte Carlo runs (one stream per sentence);
// results depend only on (options.seed, stream), never on scheduling.
SentenceAnalysis analyze_sentence(std::string id, const Tree& t,
                                  const LinearArrangement& arr,
                                  const AnalysisOptions& options = {},
                                  std::uint64_t stream = 0);

}  // namespace linarr
