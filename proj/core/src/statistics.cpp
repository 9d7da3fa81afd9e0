#include "linarr/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace linarr {

const char* to_string(TestStatistic s) {
  return s == TestStatistic::Crossings ? "C" : "abs_dev";
}

PValueReport p_values(const std::map<long long, long long>& c_histogram,
                      long long r, const Rational& mean_c, long long c_observed,
                      TestStatistic statistic, double alpha) {
  if (r < 1) throw std::invalid_argument("conditioning set must be non-empty");

  const auto stat_of = [&](long long c) -> Rational {
    if (statistic == TestStatistic::Crossings) return Rational(c);
    return boost::abs(Rational(c) - mean_c);
  };

  const Rational observed = stat_of(c_observed);
  long long at_most = 0;
  long long at_least = 0;
  for (const auto& [c, count] : c_histogram) {
    const Rational s = stat_of(c);
    if (s <= observed) at_most += count;   // ties fall in both tails
    if (s >= observed) at_least += count;
  }

  PValueReport report;
  report.statistic = statistic;
  report.left_p = Rational(at_most, r);
  report.right_p = Rational(at_least, r);
  report.r = r;
  report.min_attainable_p = Rational(1, r);
  report.alpha = alpha;
  return report;
}

PValueReport p_values(const Tree& t, const LinearArrangement& arr,
                      TestStatistic statistic, int max_n, double alpha) {
  const PermutationEnsembleResult ens = exhaustive_ensemble(t, max_n);
  const long long d = sum_lengths(arr, t);
  const ConditionalRow* row = ens.row(d);
  // The attested arrangement itself lies in the conditioning set.
  const Rational mean = Rational(row->sum_c, row->r);
  return p_values(row->c_histogram, row->r, mean, crossing_number(arr, t),
                  statistic, alpha);
}

Rational normalized_error(const Rational& c_observed, const Rational& c_predicted,
                          long long c_max) {
  if (c_max < 0) throw std::invalid_argument("c_max must be non-negative");
  if (c_max == 0) {
    if (c_observed == Rational(0) && c_predicted == Rational(0)) {
      return Rational(0);
    }
    throw DegenerateCmaxError(
        "c_max is zero but observed/predicted crossings are not");
  }
  return boost::abs(c_observed - c_predicted) / Rational(c_max);
}

SignificanceFeasibility min_significance(std::span<const long long> r_values,
                                         double alpha) {
  if (r_values.empty()) {
    throw std::invalid_argument("need at least one conditioning-set size");
  }
  for (long long r : r_values) {
    if (r < 1) throw std::invalid_argument("conditioning-set sizes must be >= 1");
  }
  SignificanceFeasibility out;
  out.r_min = *std::min_element(r_values.begin(), r_values.end());
  out.min_p = Rational(1, out.r_min);
  out.alpha = alpha;
  // alpha must strictly exceed the smallest attainable p-value, otherwise
  // no outcome could ever be significant.
  out.admissible = alpha * static_cast<double>(out.r_min) > 1.0;
  return out;
}

}  // namespace linarr
