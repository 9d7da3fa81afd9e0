#include "linarr/analysis.hpp"

#include <utility>

#include "linarr/predictors.hpp"

namespace linarr {

SentenceAnalysis analyze_sentence(std::string id, const Tree& t,
                                  const LinearArrangement& arr,
                                  const AnalysisOptions& options,
                                  std::uint64_t stream) {
  if (arr.size() != t.vertex_count()) {
    throw Error("arrangement covers " + std::to_string(arr.size()) +
                " vertices but the tree has " +
                std::to_string(t.vertex_count()));
  }

  SentenceAnalysis sa;
  sa.id = std::move(id);
  sa.n = t.vertex_count();
  sa.mean_k2 = degree_profile(t).mean_k2;
  sa.c = crossing_number(arr, t);
  sa.d = sum_lengths(arr, t);
  sa.c_max = c_max(t);
  sa.e0_c = e0_crossings(sa.n, sa.mean_k2);
  sa.e0_d = e0_length(sa.n);

  const EdgeConditionedPrediction e1 = e1_crossings(t, arr);
  sa.e1_c = e1.e1_c;
  sa.b1 = e1.b1;
  sa.b2 = e1.b2;

  sa.eps0 = normalized_error(Rational(sa.c), sa.e0_c, sa.c_max);
  sa.eps1 = normalized_error(Rational(sa.c), sa.e1_c, sa.c_max);

  if (sa.n <= options.search_max_n) {
    sa.d_min = minimum_arrangement(t, options.search_max_n).value;
    sa.d_max = maximum_arrangement(t, options.search_max_n).value;
  }

  const bool exhaustive = sa.n <= options.sweep_max_n;
  const PermutationEnsembleResult ens =
      exhaustive
          ? exhaustive_ensemble(t, options.sweep_max_n, options.threads)
          : monte_carlo_ensemble(t, options.samples, options.seed, stream,
                                 options.threads);
  sa.method = ens.method;
  sa.samples_used = exhaustive ? 0 : options.samples;
  sa.seed_used = options.seed;

  // The conditioning set of an exhaustive sweep always contains the
  // attested arrangement; a Monte Carlo run may miss its D entirely.
  if (const ConditionalRow* row = ens.row(sa.d); row != nullptr && row->r > 0) {
    const ConditionalCrossings cond = conditional_crossings(ens, sa.d);
    sa.r = cond.r;
    sa.e_c_given_d = cond.mean_c;
    sa.e_c_given_d_se = cond.std_error;
    sa.eps_cond = normalized_error(Rational(sa.c), cond.mean_c, sa.c_max);
    sa.p_c = p_values(cond.distribution, cond.r, cond.mean_c, sa.c,
                      TestStatistic::Crossings, options.alpha);
    sa.p_dev = p_values(cond.distribution, cond.r, cond.mean_c, sa.c,
                        TestStatistic::AbsDeviation, options.alpha);
  }
  return sa;
}

}  // namespace linarr
