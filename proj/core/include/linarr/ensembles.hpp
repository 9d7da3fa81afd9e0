#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/rng.hpp"

namespace linarr {

// Exhaustive permutation sweeps stay exact up to this n by default (10! runs
// in seconds); larger instances go through Monte Carlo sampling.
inline constexpr int kDefaultSweepMaxN = 10;

// Exhaustive labeled-tree enumeration bound (8^6 = 262144 trees at n = 8).
inline constexpr int kDefaultTreeEnumMaxN = 8;

// Decodes a length n-2 sequence over 1..n into its labeled tree.
Tree pruefer_decode(std::span<const int> sequence, int n);

// Visits all n^(n-2) labeled trees in lexicographic sequence order.
void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& visit,
                             int max_n = kDefaultTreeEnumMaxN);

long long labeled_tree_count(int n);  // n^(n-2)

// Uniform random labeled tree via a first-entry random walk on the complete
// graph (Aldous-Broder).
Tree random_labeled_tree(int n, SplitMix64& rng);

// Visits all n! arrangements in lexicographic order of the position
// sequence, with C and D for each.
void enumerate_arrangements(
    const Tree& t,
    const std::function<void(const LinearArrangement&, long long c, long long d)>&
        visit,
    int max_n = kDefaultSweepMaxN);

enum class EnsembleMethod { Exhaustive, MonteCarlo };

const char* to_string(EnsembleMethod m);

struct ConditionalRow {
  long long r = 0;       // arrangements (or accepted samples) with this D
  long long sum_c = 0;
  long long sum_b2 = 0;  // for the per-D mean of the edge-conditioned predictor
  std::map<long long, long long> c_histogram;
};

// Per-D statistics of the permutation ensemble of one tree.
struct PermutationEnsembleResult {
  int n = 0;
  long long b1 = 0;
  std::map<long long, ConditionalRow> per_d;  // keys lie in [D_min, D_max]
  long long total = 0;  // n! when exhaustive, samples drawn when Monte Carlo
  EnsembleMethod method = EnsembleMethod::Exhaustive;
  long long samples = 0;        // Monte Carlo only
  std::uint64_t seed = 0;       // Monte Carlo only
  std::uint64_t stream = 0;     // Monte Carlo only

  const ConditionalRow* row(long long d) const;
  Rational mean_c(long long d) const;    // E[C | D = d]; throws UnreachableDError
  Rational mean_e1c(long long d) const;  // per-D mean of the e1 predictor
  Rational e0_c() const;                 // b1 / (6(n-1))
  Rational e0_d() const;
};

PermutationEnsembleResult exhaustive_ensemble(const Tree& t,
                                              int max_n = kDefaultSweepMaxN,
                                              int threads = 0);

// Rejection-free uniform sampling of arrangements; rows collect whatever D
// values the samples hit. Output is a pure function of (seed, stream),
// independent of thread count.
PermutationEnsembleResult monte_carlo_ensemble(const Tree& t, long long samples,
                                               std::uint64_t seed,
                                               std::uint64_t stream = 0,
                                               int threads = 0);

struct ConditionalCrossings {
  Rational mean_c;  // E[C | D = d_target]
  long long r = 0;
  std::map<long long, long long> distribution;
  std::optional<double> std_error;  // Monte Carlo only
};

// Throws UnreachableDError when no permutation (or no accepted sample)
// attains d_target.
ConditionalCrossings conditional_crossings(const PermutationEnsembleResult& ens,
                                           long long d_target);
ConditionalCrossings conditional_crossings(const Tree& t, long long d_target,
                                           int max_n = kDefaultSweepMaxN);

struct CurvePoint {
  long long d;
  long long r;
  Rational mean_c;
  Rational mean_e1c;
};

// C-versus-D profile: one point per reachable D, plus the two reference
// levels of the unconditioned expectations.
struct CrossingsVsLengthCurve {
  std::vector<CurvePoint> points;
  Rational e0_c;
  Rational e0_d;
};

CrossingsVsLengthCurve c_vs_d_curve(const PermutationEnsembleResult& ens);
CrossingsVsLengthCurve c_vs_d_curve(const Tree& t, int max_n = kDefaultSweepMaxN);

}  // namespace linarr
