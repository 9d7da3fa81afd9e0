#pragma once

#include <optional>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/rational.hpp"
#include "linarr/tree.hpp"

namespace linarr {

// Expected crossings in a uniformly random arrangement of a tree with the
// given degree second moment: (n/6)(n - 1 - <k^2>). Zero exactly for stars.
Rational e0_crossings(int n, const Rational& mean_k2);

// Closed forms for the two extremal topologies: linear trees maximize the
// expectation, n(n-5)/6 + 1; quasi-star trees give n/3 - 1.
Rational e0_crossings_linear(int n);  // n >= 2
Rational e0_crossings_quasi(int n);   // n >= 3

// Average of e0_crossings over uniformly random labeled trees:
// (1/6)(n-1)(n-5+6/n), equivalently n^2/6 - n + 11/6 - 1/n.
Rational expected_e0_random_labeled(int n);

// Degree variance of uniformly random labeled trees: (1 - 1/n)(1 - 2/n).
Rational degree_variance_random_labeled(int n);
// The implied second moment: (1 - 1/n)(5 - 6/n).
Rational mean_k2_random_labeled(int n);

// Smallest <k^2> compatible with at most `budget` expected crossings:
// n - 1 - 6*budget/n.
Rational min_k2_for_crossing_budget(int n, const Rational& budget);

// Strict sentence-length threshold 3a + 3: for n above it, only star trees
// keep the expected number of crossings within budget a.
Rational star_forced_threshold(const Rational& budget);

// Expected total dependency length in a random arrangement: (n-1)(n+1)/3.
Rational e0_length(int n);

// Probability that two vertex-disjoint edges cross given that one of them
// has length d: 2(d-1)(n-d-1) / ((n-2)(n-3)). Needs n >= 4 and 1 <= d <= n-1.
Rational p_cross_given_d(int n, int d);

// Probability that a randomly arranged edge gets length d: 2(n-d)/(n(n-1)).
Rational p_length(int n, int d);  // n >= 2, 1 <= d <= n-1

// Upper bound of p_cross_given_d over d, attained at d = n/2 when n is even:
// (n^2/2 - 2(n-1)) / ((n-2)(n-3)). Tends to 1/2 for large n.
Rational p_cross_max(int n);  // n >= 4

struct EdgeConditionedPrediction {
  Rational e1_c;  // (b2 - b1) / ((n-2)(n-3)); zero when n < 4
  long long b1 = 0;  // n(n-1)(n-1-<k^2>) = 6(n-1) * e0_crossings
  long long b2 = 0;  // sum over edges of (n-k_u-k_v)(n-d)d
};

// Crossing prediction that conditions on each edge's attested length while
// placing the partner edge at random.
EdgeConditionedPrediction e1_crossings(const Tree& t,
                                       const LinearArrangement& arr);

// The family both expectations belong to:
//   (1/4) sum_uv a_uv (n-k_u-k_v) p_x(cross | u~v)
// mode 0 uses p = 1/3 and reproduces e0_crossings; mode 1 conditions on the
// edge length and reproduces e1_crossings.
Rational general_predictor(const Tree& t, const LinearArrangement& arr,
                           int mode);

struct PredictorReport {
  Rational e0_c;
  Rational e0_d;
  Rational e1_c;
  long long b1 = 0;
  long long b2 = 0;
  // Index d-1 holds the value for length d; empty when n < 4 (n < 2 for
  // lengths), where the quantities are undefined.
  std::vector<Rational> p_cross_by_d;
  std::vector<Rational> p_length_by_d;
  std::optional<Rational> p_cross_upper;
};

PredictorReport predictor_report(const Tree& t, const LinearArrangement& arr);

}  // namespace linarr
