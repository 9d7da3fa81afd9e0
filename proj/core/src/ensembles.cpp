#include "linarr/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "linarr/predictors.hpp"

namespace linarr {

const char* to_string(EnsembleMethod m) {
  return m == EnsembleMethod::Exhaustive ? "exhaustive" : "monte_carlo";
}

Tree pruefer_decode(std::span<const int> sequence, int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(sequence.size()) != std::max(0, n - 2)) {
    throw std::invalid_argument("sequence length must be n-2");
  }
  if (n == 1) return Tree::build(1, {});

  std::vector<int> degree(static_cast<size_t>(n) + 1, 1);
  for (int s : sequence) {
    if (s < 1 || s > n) throw std::invalid_argument("sequence entry outside 1..n");
    ++degree[static_cast<size_t>(s)];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  for (int s : sequence) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (degree[static_cast<size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, s);
        degree[static_cast<size_t>(leaf)] = 0;
        --degree[static_cast<size_t>(s)];
        break;
      }
    }
  }
  int first = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<size_t>(v)] == 1) {
      if (first == 0) {
        first = v;
      } else {
        edges.emplace_back(first, v);
        break;
      }
    }
  }
  return Tree::build(n, edges);
}

void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& visit,
                             int max_n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n > max_n) {
    throw TooLargeError("labeled tree enumeration: n = " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n) +
                            " (n^(n-2) trees)",
                        n, max_n);
  }
  if (n <= 2) {
    visit(pruefer_decode({}, n));
    return;
  }
  std::vector<int> seq(static_cast<size_t>(n) - 2, 1);
  for (;;) {
    visit(pruefer_decode(seq, n));
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[static_cast<size_t>(i)] == n) {
      seq[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<size_t>(i)];
  }
}

long long labeled_tree_count(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n > 17) {
    throw TooLargeError("n^(n-2) does not fit 64 bits beyond n = 17", n, 17);
  }
  long long count = 1;
  for (int i = 0; i < n - 2; ++i) count *= n;
  return count;
}

Tree random_labeled_tree(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Tree::build(1, {});
  // First-entry edges of a random walk on the complete graph.
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  int current = 1;
  visited[1] = 1;
  int remaining = n - 1;
  while (remaining > 0) {
    const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int next = r + 1 < current ? r + 1 : r + 2;  // uniform over [1..n] \ {current}
    if (!visited[static_cast<size_t>(next)]) {
      visited[static_cast<size_t>(next)] = 1;
      edges.emplace_back(current, next);
      --remaining;
    }
    current = next;
  }
  return Tree::build(n, edges);
}

void enumerate_arrangements(
    const Tree& t,
    const std::function<void(const LinearArrangement&, long long, long long)>& visit,
    int max_n) {
  const int n = t.vertex_count();
  if (n > max_n) {
    throw TooLargeError("arrangement enumeration: n = " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n) +
                            "; use monte_carlo_ensemble for sampled statistics",
                        n, max_n);
  }
  std::vector<int> pos(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  do {
    const auto arr = LinearArrangement::from_positions(pos);
    visit(arr, crossing_number(arr, t), sum_lengths(arr, t));
  } while (std::next_permutation(pos.begin(), pos.end()));
}

namespace {

// Flat per-D accumulators for the exhaustive sweep (D is bounded by
// n(n-1)/2, so vectors beat maps in the hot loop).
struct FlatAccum {
  std::vector<long long> r;
  std::vector<long long> sum_c;
  std::vector<long long> sum_b2;
  std::vector<std::vector<long long>> hist;  // [d][c]

  FlatAccum(int d_limit, int c_limit)
      : r(static_cast<size_t>(d_limit) + 1, 0),
        sum_c(static_cast<size_t>(d_limit) + 1, 0),
        sum_b2(static_cast<size_t>(d_limit) + 1, 0),
        hist(static_cast<size_t>(d_limit) + 1,
             std::vector<long long>(static_cast<size_t>(c_limit) + 1, 0)) {}

  void add(const FlatAccum& other) {
    for (size_t d = 0; d < r.size(); ++d) {
      r[d] += other.r[d];
      sum_c[d] += other.sum_c[d];
      sum_b2[d] += other.sum_b2[d];
      for (size_t c = 0; c < hist[d].size(); ++c) hist[d][c] += other.hist[d][c];
    }
  }
};

struct SweepEdges {
  std::vector<int> a, b;           // 0-based endpoints
  std::vector<long long> coeff;    // n - k_u - k_v
};

SweepEdges sweep_edges(const Tree& t) {
  SweepEdges se;
  const int n = t.vertex_count();
  for (const Edge& e : t.edges()) {
    se.a.push_back(e.u - 1);
    se.b.push_back(e.v - 1);
    se.coeff.push_back(n - t.degree(e.u) - t.degree(e.v));
  }
  return se;
}

inline bool interleave(int lo1, int hi1, int lo2, int hi2) {
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
         (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

// Scans one arrangement; returns C and fills d_total/b2.
inline long long scan_arrangement(const SweepEdges& se, const std::vector<int>& pos,
                                  int n, std::vector<int>& lo, std::vector<int>& hi,
                                  long long& d_total, long long& b2) {
  const size_t m = se.a.size();
  d_total = 0;
  b2 = 0;
  for (size_t i = 0; i < m; ++i) {
    const int pa = pos[static_cast<size_t>(se.a[i])];
    const int pb = pos[static_cast<size_t>(se.b[i])];
    const int l = std::min(pa, pb);
    const int h = std::max(pa, pb);
    lo[i] = l;
    hi[i] = h;
    const long long len = h - l;
    d_total += len;
    b2 += se.coeff[i] * (n - len) * len;
  }
  long long c = 0;
  for (size_t i = 0; i + 1 < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (interleave(lo[i], hi[i], lo[j], hi[j])) ++c;
    }
  }
  return c;
}

// All arrangements with vertex 1 at first_pos, each counted `weight` times.
void sweep_partition(const SweepEdges& se, int n, int first_pos, long long weight,
                     FlatAccum& acc) {
  std::vector<int> pos(static_cast<size_t>(n));
  pos[0] = first_pos;
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(n) - 1);
  for (int p = 1; p <= n; ++p) {
    if (p != first_pos) rest.push_back(p);
  }
  const size_t m = se.a.size();
  std::vector<int> lo(m), hi(m);
  do {
    for (int i = 1; i < n; ++i) pos[static_cast<size_t>(i)] = rest[static_cast<size_t>(i) - 1];
    long long d_total = 0, b2 = 0;
    const long long c = scan_arrangement(se, pos, n, lo, hi, d_total, b2);
    const auto d_idx = static_cast<size_t>(d_total);
    acc.r[d_idx] += weight;
    acc.sum_c[d_idx] += weight * c;
    acc.sum_b2[d_idx] += weight * b2;
    acc.hist[d_idx][static_cast<size_t>(c)] += weight;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

long long b1_of(const Tree& t) {
  const long long n = t.vertex_count();
  return (n - 1) * (n * (n - 1) - t.k2());
}

}  // namespace

const ConditionalRow* PermutationEnsembleResult::row(long long d) const {
  const auto it = per_d.find(d);
  return it == per_d.end() ? nullptr : &it->second;
}

Rational PermutationEnsembleResult::mean_c(long long d) const {
  const ConditionalRow* r = row(d);
  if (r == nullptr || r->r == 0) {
    throw UnreachableDError("no arrangement with D = " + std::to_string(d) +
                            (method == EnsembleMethod::Exhaustive
                                 ? " exists for this tree"
                                 : " was sampled"));
  }
  return Rational(r->sum_c, r->r);
}

Rational PermutationEnsembleResult::mean_e1c(long long d) const {
  if (n < 4) return Rational(0);
  const ConditionalRow* r = row(d);
  if (r == nullptr || r->r == 0) {
    throw UnreachableDError("no arrangement with D = " + std::to_string(d));
  }
  return Rational(r->sum_b2 - r->r * b1,
                  r->r * static_cast<long long>(n - 2) * (n - 3));
}

Rational PermutationEnsembleResult::e0_c() const {
  if (n < 2) return Rational(0);
  return Rational(b1, 6LL * (n - 1));
}

Rational PermutationEnsembleResult::e0_d() const { return e0_length(n); }

PermutationEnsembleResult exhaustive_ensemble(const Tree& t, int max_n,
                                              int threads) {
  const int n = t.vertex_count();
  if (n > max_n) {
    throw TooLargeError("exhaustive ensemble: n = " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n) +
                            "; use monte_carlo_ensemble instead",
                        n, max_n);
  }
  PermutationEnsembleResult result;
  result.n = n;
  result.b1 = b1_of(t);
  result.method = EnsembleMethod::Exhaustive;
  long long total = 1;
  for (int i = 2; i <= n; ++i) total *= i;
  result.total = total;

  if (n == 1) {
    ConditionalRow row;
    row.r = 1;
    row.c_histogram[0] = 1;
    result.per_d[0] = std::move(row);
    return result;
  }

  // Reversing an arrangement changes neither C nor D, so only the left-half
  // placements of vertex 1 are enumerated; each stands for two arrangements
  // except the exact middle (odd n), which contains its own reversals.
  struct Task {
    int first_pos;
    long long weight;
  };
  std::vector<Task> tasks;
  const int half = (n + 1) / 2;
  for (int p = 1; p <= half; ++p) {
    tasks.push_back({p, (n % 2 == 1 && p == half) ? 1LL : 2LL});
  }

  const SweepEdges se = sweep_edges(t);
  const int d_limit = (n - 1) * (n - 1);  // every edge length is at most n-1
  const int m = n - 1;
  const int c_limit = m * (m - 1) / 2;

  const int workers =
      std::min<int>(resolve_threads(threads), static_cast<int>(tasks.size()));
  std::vector<std::future<FlatAccum>> futures;
  futures.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      FlatAccum acc(d_limit, c_limit);
      for (size_t i = static_cast<size_t>(w); i < tasks.size();
           i += static_cast<size_t>(workers)) {
        sweep_partition(se, n, tasks[i].first_pos, tasks[i].weight, acc);
      }
      return acc;
    }));
  }
  FlatAccum merged(d_limit, c_limit);
  for (auto& f : futures) merged.add(f.get());

  for (int d = 0; d <= d_limit; ++d) {
    if (merged.r[static_cast<size_t>(d)] == 0) continue;
    ConditionalRow row;
    row.r = merged.r[static_cast<size_t>(d)];
    row.sum_c = merged.sum_c[static_cast<size_t>(d)];
    row.sum_b2 = merged.sum_b2[static_cast<size_t>(d)];
    for (int c = 0; c <= c_limit; ++c) {
      const long long count = merged.hist[static_cast<size_t>(d)][static_cast<size_t>(c)];
      if (count != 0) row.c_histogram[c] = count;
    }
    result.per_d[d] = std::move(row);
  }
  return result;
}

PermutationEnsembleResult monte_carlo_ensemble(const Tree& t, long long samples,
                                               std::uint64_t seed,
                                               std::uint64_t stream, int threads) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int n = t.vertex_count();

  PermutationEnsembleResult result;
  result.n = n;
  result.b1 = b1_of(t);
  result.method = EnsembleMethod::MonteCarlo;
  result.total = samples;
  result.samples = samples;
  result.seed = seed;
  result.stream = stream;

  // Fixed worker count: the (seed, stream) pair fully determines the output
  // no matter how many threads actually run.
  constexpr int kSubstreams = 4;
  const SweepEdges se = sweep_edges(t);

  const auto run_substream = [&](int j) {
    std::map<long long, ConditionalRow> local;
    const long long share =
        samples / kSubstreams + (j < samples % kSubstreams ? 1 : 0);
    SplitMix64 rng = SplitMix64::stream(
        seed, stream * static_cast<std::uint64_t>(kSubstreams) +
                  static_cast<std::uint64_t>(j));
    std::vector<int> pos(static_cast<size_t>(n));
    std::iota(pos.begin(), pos.end(), 1);
    const size_t m = se.a.size();
    std::vector<int> lo(m), hi(m);
    for (long long s = 0; s < share; ++s) {
      for (int i = n - 1; i > 0; --i) {
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(k)]);
      }
      long long d_total = 0, b2 = 0;
      const long long c = scan_arrangement(se, pos, n, lo, hi, d_total, b2);
      ConditionalRow& row = local[d_total];
      row.r += 1;
      row.sum_c += c;
      row.sum_b2 += b2;
      row.c_histogram[c] += 1;
    }
    return local;
  };

  const int workers = std::min(resolve_threads(threads), kSubstreams);
  std::vector<std::future<std::map<long long, ConditionalRow>>> futures;
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      std::map<long long, ConditionalRow> acc;
      for (int j = w; j < kSubstreams; j += workers) {
        auto local = run_substream(j);
        for (auto& [d, row] : local) {
          ConditionalRow& target = acc[d];
          target.r += row.r;
          target.sum_c += row.sum_c;
          target.sum_b2 += row.sum_b2;
          for (const auto& [c, count] : row.c_histogram) {
            target.c_histogram[c] += count;
          }
        }
      }
      return acc;
    }));
  }
  for (auto& f : futures) {
    auto acc = f.get();
    for (auto& [d, row] : acc) {
      ConditionalRow& target = result.per_d[d];
      target.r += row.r;
      target.sum_c += row.sum_c;
      target.sum_b2 += row.sum_b2;
      for (const auto& [c, count] : row.c_histogram) {
        target.c_histogram[c] += count;
      }
    }
  }
  return result;
}

ConditionalCrossings conditional_crossings(const PermutationEnsembleResult& ens,
                                           long long d_target) {
  const ConditionalRow* row = ens.row(d_target);
  if (row == nullptr || row->r == 0) {
    throw UnreachableDError(
        "no arrangement with D = " + std::to_string(d_target) +
        (ens.method == EnsembleMethod::Exhaustive ? " exists for this tree"
                                                  : " was sampled"));
  }
  ConditionalCrossings out;
  out.mean_c = Rational(row->sum_c, row->r);
  out.r = row->r;
  out.distribution = row->c_histogram;
  if (ens.method == EnsembleMethod::MonteCarlo && row->r >= 2) {
    const double mean = to_double(out.mean_c);
    double sq = 0;
    for (const auto& [c, count] : row->c_histogram) {
      sq += static_cast<double>(count) * static_cast<double>(c) *
            static_cast<double>(c);
    }
    const double r = static_cast<double>(row->r);
    const double sample_var = (sq - r * mean * mean) / (r - 1.0);
    out.std_error = std::sqrt(std::max(0.0, sample_var) / r);
  }
  return out;
}

ConditionalCrossings conditional_crossings(const Tree& t, long long d_target,
                                           int max_n) {
  return conditional_crossings(exhaustive_ensemble(t, max_n), d_target);
}

CrossingsVsLengthCurve c_vs_d_curve(const PermutationEnsembleResult& ens) {
  CrossingsVsLengthCurve curve;
  curve.e0_c = ens.e0_c();
  curve.e0_d = ens.e0_d();
  for (const auto& [d, row] : ens.per_d) {
    if (row.r == 0) continue;
    curve.points.push_back(CurvePoint{d, row.r, Rational(row.sum_c, row.r),
                                      ens.mean_e1c(d)});
  }
  return curve;
}

CrossingsVsLengthCurve c_vs_d_curve(const Tree& t, int max_n) {
  return c_vs_d_curve(exhaustive_ensemble(t, max_n));
}

}  // namespace linarr
