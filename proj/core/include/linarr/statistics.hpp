#pragma once

#include <map>
#include <span>

#include "linarr/ensembles.hpp"
#include "linarr/rational.hpp"

namespace linarr {

enum class TestStatistic {
  Crossings,     // C itself
  AbsDeviation,  // |C - E[C|D]| within the conditioning set
};

const char* to_string(TestStatistic s);

struct PValueReport {
  TestStatistic statistic;
  Rational left_p;   // share of the conditioning set with stat <= observed
  Rational right_p;  // share with stat >= observed; ties count in both tails
  long long r = 0;
  Rational min_attainable_p;  // 1/r
  double alpha = 0.05;
};

// Left/right p-values of the observed statistic against the conditional
// distribution of C (histogram over a conditioning set of size r whose mean
// is mean_c).
PValueReport p_values(const std::map<long long, long long>& c_histogram,
                      long long r, const Rational& mean_c, long long c_observed,
                      TestStatistic statistic, double alpha = 0.05);

// Convenience: conditions on the arrangement's own D via an exhaustive sweep.
PValueReport p_values(const Tree& t, const LinearArrangement& arr,
                      TestStatistic statistic, int max_n = kDefaultSweepMaxN,
                      double alpha = 0.05);

// |observed - predicted| / c_max. When c_max is zero the error is defined as
// zero if both values are zero, otherwise DegenerateCmaxError.
Rational normalized_error(const Rational& c_observed, const Rational& c_predicted,
                          long long c_max);

struct SignificanceFeasibility {
  long long r_min = 0;
  Rational min_p;    // 1/r_min, the smallest p-value any test can produce
  double alpha = 0.05;
  bool admissible = false;  // alpha must exceed 1/r_min
};

SignificanceFeasibility min_significance(std::span<const long long> r_values,
                                         double alpha = 0.05);

}  // namespace linarr
