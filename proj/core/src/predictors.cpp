#include "linarr/predictors.hpp"

#include <stdexcept>
#include <string>

namespace linarr {

namespace {

void require_n(int n, int at_least, const char* what) {
  if (n < at_least) {
    throw std::invalid_argument(std::string(what) + ": n must be >= " +
                                std::to_string(at_least) + ", got " +
                                std::to_string(n));
  }
}

void require_length(int n, int d) {
  if (d < 1 || d > n - 1) {
    throw std::invalid_argument("edge length must lie in 1..n-1, got d = " +
                                std::to_string(d) + " for n = " +
                                std::to_string(n));
  }
}

}  // namespace

Rational e0_crossings(int n, const Rational& mean_k2) {
  require_n(n, 1, "e0_crossings");
  if (mean_k2 < Rational(0) || mean_k2 > Rational(n - 1)) {
    throw std::invalid_argument("mean_k2 must lie in [0, n-1]");
  }
  return Rational(n, 6) * (Rational(n - 1) - mean_k2);
}

Rational e0_crossings_linear(int n) {
  if (n < 2) {
    throw DomainTooSmallError("linear trees need n >= 2, got n = " +
                              std::to_string(n));
  }
  return Rational(static_cast<long long>(n) * (n - 5), 6) + Rational(1);
}

Rational e0_crossings_quasi(int n) {
  if (n < 3) {
    throw DomainTooSmallError("quasi-star trees need n >= 3, got n = " +
                              std::to_string(n));
  }
  return Rational(n, 3) - Rational(1);
}

Rational expected_e0_random_labeled(int n) {
  require_n(n, 1, "expected_e0_random_labeled");
  return Rational(n - 1, 6) * (Rational(n - 5) + Rational(6, n));
}

Rational degree_variance_random_labeled(int n) {
  require_n(n, 1, "degree_variance_random_labeled");
  return (Rational(1) - Rational(1, n)) * (Rational(1) - Rational(2, n));
}

Rational mean_k2_random_labeled(int n) {
  require_n(n, 1, "mean_k2_random_labeled");
  return (Rational(1) - Rational(1, n)) * (Rational(5) - Rational(6, n));
}

Rational min_k2_for_crossing_budget(int n, const Rational& budget) {
  require_n(n, 1, "min_k2_for_crossing_budget");
  if (budget < Rational(0)) {
    throw std::invalid_argument("crossing budget must be non-negative");
  }
  return Rational(n - 1) - Rational(6) * budget / Rational(n);
}

Rational star_forced_threshold(const Rational& budget) {
  if (budget < Rational(0)) {
    throw std::invalid_argument("crossing budget must be non-negative");
  }
  return Rational(3) * budget + Rational(3);
}

Rational e0_length(int n) {
  require_n(n, 1, "e0_length");
  return Rational(static_cast<long long>(n - 1) * (n + 1), 3);
}

Rational p_cross_given_d(int n, int d) {
  if (n < 4) {
    throw TooFewVerticesError(
        "crossings need at least four vertices, got n = " + std::to_string(n));
  }
  require_length(n, d);
  return Rational(2LL * (d - 1) * (n - d - 1),
                  static_cast<long long>(n - 2) * (n - 3));
}

Rational p_length(int n, int d) {
  require_n(n, 2, "p_length");
  require_length(n, d);
  return Rational(2LL * (n - d), static_cast<long long>(n) * (n - 1));
}

Rational p_cross_max(int n) {
  if (n < 4) {
    throw TooFewVerticesError(
        "crossings need at least four vertices, got n = " + std::to_string(n));
  }
  return Rational(static_cast<long long>(n) * n - 4LL * (n - 1),
                  2LL * (n - 2) * (n - 3));
}

EdgeConditionedPrediction e1_crossings(const Tree& t,
                                       const LinearArrangement& arr) {
  const int n = t.vertex_count();
  EdgeConditionedPrediction out;
  out.b1 = static_cast<long long>(n - 1) *
           (static_cast<long long>(n) * (n - 1) - t.k2());
  for (const Edge& e : t.edges()) {
    const long long free_vertices = n - t.degree(e.u) - t.degree(e.v);
    const long long d = edge_length(arr, e.u, e.v);
    out.b2 += free_vertices * (n - d) * d;
  }
  if (n < 4) {
    out.e1_c = Rational(0);  // no crossings are possible at all
    return out;
  }
  out.e1_c = Rational(out.b2 - out.b1,
                      static_cast<long long>(n - 2) * (n - 3));
  return out;
}

Rational general_predictor(const Tree& t, const LinearArrangement& arr,
                           int mode) {
  if (mode != 0 && mode != 1) {
    throw std::invalid_argument("predictor mode must be 0 or 1");
  }
  const int n = t.vertex_count();
  if (mode == 1 && n < 4) return Rational(0);
  // (1/4) sum over ordered pairs = (1/2) sum over edges.
  Rational acc(0);
  for (const Edge& e : t.edges()) {
    const Rational free_vertices(n - t.degree(e.u) - t.degree(e.v));
    const Rational p = mode == 0
                           ? Rational(1, 3)
                           : p_cross_given_d(n, edge_length(arr, e.u, e.v));
    acc += free_vertices * p;
  }
  return acc / Rational(2);
}

PredictorReport predictor_report(const Tree& t, const LinearArrangement& arr) {
  const int n = t.vertex_count();
  PredictorReport report;
  report.e0_c = e0_crossings(n, degree_profile(t).mean_k2);
  report.e0_d = e0_length(n);
  const EdgeConditionedPrediction e1 = e1_crossings(t, arr);
  report.e1_c = e1.e1_c;
  report.b1 = e1.b1;
  report.b2 = e1.b2;
  if (n >= 2) {
    report.p_length_by_d.reserve(static_cast<size_t>(n) - 1);
    for (int d = 1; d <= n - 1; ++d) report.p_length_by_d.push_back(p_length(n, d));
  }
  if (n >= 4) {
    report.p_cross_by_d.reserve(static_cast<size_t>(n) - 1);
    for (int d = 1; d <= n - 1; ++d) {
      report.p_cross_by_d.push_back(p_cross_given_d(n, d));
    }
    report.p_cross_upper = p_cross_max(n);
  }
  return report;
}

}  // namespace linarr
