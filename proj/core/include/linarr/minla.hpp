#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/rng.hpp"

namespace linarr {

// Branch-and-bound searches stay exact up to this many vertices by default.
inline constexpr int kDefaultSearchMaxN = 12;

struct ArrangementOptimum {
  long long value;
  // Among all optima, the one whose position sequence (pi(1), ..., pi(n))
  // is lexicographically smallest; keeps golden outputs deterministic.
  LinearArrangement witness;
};

// Minimum / maximum total dependency length over all n! arrangements.
// Throws TooLargeError beyond max_n; use the sampled variants there.
ArrangementOptimum minimum_arrangement(const Tree& t,
                                       int max_n = kDefaultSearchMaxN);
ArrangementOptimum maximum_arrangement(const Tree& t,
                                       int max_n = kDefaultSearchMaxN);

// Minimum D over crossing-free arrangements. Always defined: every tree has
// a projective arrangement. Can exceed minimum_arrangement (some trees only
// reach their minimum with crossings).
ArrangementOptimum minimum_noncrossing_arrangement(
    const Tree& t, int max_n = kDefaultSearchMaxN);

// Best value seen over uniformly sampled arrangements. An estimate, not a
// proof: an upper bound witness for the minimum, lower bound for the maximum.
struct SampledOptimum {
  long long value;
  LinearArrangement witness;
  long long samples;
};

SampledOptimum sampled_minimum_arrangement(const Tree& t, long long samples,
                                           SplitMix64 rng);
SampledOptimum sampled_maximum_arrangement(const Tree& t, long long samples,
                                           SplitMix64 rng);

}  // namespace linarr
