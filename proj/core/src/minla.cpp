#include "linarr/minla.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <string>
#include <vector>

namespace linarr {

namespace {

inline bool interleave(int lo1, int hi1, int lo2, int hi2) {
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
         (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

long long cost_of(const Tree& t, const std::vector<int>& pos) {
  long long d = 0;
  for (const Edge& e : t.edges()) {
    d += std::abs(pos[static_cast<size_t>(e.u)] - pos[static_cast<size_t>(e.v)]);
  }
  return d;
}

bool is_noncrossing(const Tree& t, const std::vector<int>& pos) {
  const auto& edges = t.edges();
  const size_t m = edges.size();
  std::vector<int> lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    const int a = pos[static_cast<size_t>(edges[i].u)];
    const int b = pos[static_cast<size_t>(edges[i].v)];
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (interleave(lo[i], hi[i], lo[j], hi[j])) return false;
    }
  }
  return true;
}

// Positions indexed by vertex (slot 0 unused) of a preorder walk from root;
// subtree intervals nest, so the arrangement is crossing-free.
std::vector<int> preorder_positions(const Tree& t, Vertex root) {
  const int n = t.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  std::vector<Vertex> stack{root};
  int next = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    pos[static_cast<size_t>(v)] = ++next;
    const auto nb = t.neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (pos[static_cast<size_t>(*it)] == 0) stack.push_back(*it);
    }
  }
  return pos;
}

// Fills positions 1..n left to right. The lower bound charges every open
// edge its distance to the frontier and every untouched edge one unit; the
// upper bound lets open edges stretch to position n and untouched edges
// span the remaining suffix.
class BranchAndBound {
 public:
  BranchAndBound(const Tree& t, bool maximize, bool noncrossing)
      : tree_(t),
        n_(t.vertex_count()),
        maximize_(maximize),
        noncrossing_(noncrossing) {
    reserved_.assign(static_cast<size_t>(n_) + 1, 0);
    vertex_reserved_.assign(static_cast<size_t>(n_) + 1, 0);
    reset();
  }

  ArrangementOptimum solve() {
    seed_incumbent();
    feasibility_ = false;
    symmetry_ = true;
    reset();
    dfs(1);
    symmetry_ = false;
    const long long optimum = best_;

    // Lexicographic refinement: fix pi(1), pi(2), ... to the smallest
    // position that still completes to the optimal value.
    std::vector<int> chosen(static_cast<size_t>(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      bool placed = false;
      for (int q = 1; q <= n_ && !placed; ++q) {
        if (reserved_[static_cast<size_t>(q)] != 0) continue;
        reserved_[static_cast<size_t>(q)] = v;
        vertex_reserved_[static_cast<size_t>(v)] = 1;
        if (feasible(optimum)) {
          chosen[static_cast<size_t>(v)] = q;
          placed = true;
        } else {
          reserved_[static_cast<size_t>(q)] = 0;
          vertex_reserved_[static_cast<size_t>(v)] = 0;
        }
      }
      assert(placed);
    }

    std::vector<int> witness(chosen.begin() + 1, chosen.end());
    return ArrangementOptimum{optimum,
                              LinearArrangement::from_positions(witness)};
  }

 private:
  void reset() {
    pos_.assign(static_cast<size_t>(n_) + 1, 0);
    exact_ = 0;
    open_count_ = 0;
    open_anchor_sum_ = 0;
    untouched_ = n_ - 1;
    done_.clear();
  }

  void seed_incumbent() {
    best_ = maximize_ ? LLONG_MIN : LLONG_MAX;
    const auto consider = [&](const std::vector<int>& pos, bool known_flat) {
      if (noncrossing_ && !known_flat && !is_noncrossing(tree_, pos)) return;
      const long long d = cost_of(tree_, pos);
      if (maximize_ ? d > best_ : d < best_) {
        best_ = d;
        best_pos_ = pos;
      }
    };
    if (!maximize_) {
      for (Vertex root = 1; root <= n_; ++root) {
        consider(preorder_positions(tree_, root), true);
      }
    }
    SplitMix64 rng(0x9a7c1ba2u);
    std::vector<int> pos(static_cast<size_t>(n_) + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int trial = 0; trial < 256; ++trial) {
      for (int i = n_; i > 1; --i) {
        const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
        std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]);
      }
      consider(pos, false);
    }
    assert(best_ != LLONG_MIN && best_ != LLONG_MAX);
  }

  bool feasible(long long target) {
    feasibility_ = true;
    target_ = target;
    found_ = false;
    reset();
    dfs(1);
    feasibility_ = false;
    return found_;
  }

  long long bound(int placed) const {
    if (maximize_) {
      return exact_ + open_count_ * static_cast<long long>(n_) -
             open_anchor_sum_ +
             static_cast<long long>(untouched_) *
                 std::max(0, n_ - placed - 1);
    }
    return exact_ + open_count_ * static_cast<long long>(placed + 1) -
           open_anchor_sum_ + untouched_;
  }

  bool crossing_ok(Vertex v, int p) const {
    for (const Vertex w : tree_.neighbors(v)) {
      const int a = pos_[static_cast<size_t>(w)];
      if (a == 0) continue;
      for (const auto& [lo, hi] : done_) {
        if (interleave(a, p, lo, hi)) return false;
      }
    }
    return true;
  }

  void dfs(int p) {
    if (feasibility_ && found_) return;
    if (p > n_) {
      if (feasibility_) {
        if (exact_ == target_) found_ = true;
      } else if (maximize_ ? exact_ > best_ : exact_ < best_) {
        best_ = exact_;
        best_pos_ = pos_;
      }
      return;
    }
    const long long b = bound(p - 1);
    if (feasibility_) {
      if (maximize_ ? b < target_ : b > target_) return;
    } else {
      if (maximize_ ? b <= best_ : b >= best_) return;
    }
    // Reversal maps an arrangement onto one of equal cost, so vertex 1 can
    // be confined to the left half while searching for the value.
    if (symmetry_ && pos_[1] == 0 && p > (n_ + 1) / 2) return;

    const Vertex forced = reserved_[static_cast<size_t>(p)];
    if (forced != 0) {
      try_vertex(forced, p);
      return;
    }
    for (Vertex v = 1; v <= n_; ++v) {
      if (pos_[static_cast<size_t>(v)] == 0 &&
          vertex_reserved_[static_cast<size_t>(v)] == 0) {
        try_vertex(v, p);
        if (feasibility_ && found_) return;
      }
    }
  }

  void try_vertex(Vertex v, int p) {
    if (noncrossing_ && !crossing_ok(v, p)) return;
    const size_t done_before = done_.size();
    for (const Vertex w : tree_.neighbors(v)) {
      const int a = pos_[static_cast<size_t>(w)];
      if (a != 0) {
        exact_ += p - a;
        --open_count_;
        open_anchor_sum_ -= a;
        if (noncrossing_) done_.emplace_back(a, p);
      } else {
        ++open_count_;
        open_anchor_sum_ += p;
        --untouched_;
      }
    }
    pos_[static_cast<size_t>(v)] = p;

    dfs(p + 1);

    pos_[static_cast<size_t>(v)] = 0;
    for (const Vertex w : tree_.neighbors(v)) {
      const int a = pos_[static_cast<size_t>(w)];
      if (a != 0) {
        exact_ -= p - a;
        ++open_count_;
        open_anchor_sum_ += a;
      } else {
        --open_count_;
        open_anchor_sum_ -= p;
        ++untouched_;
      }
    }
    done_.resize(done_before);
  }

  const Tree& tree_;
  int n_;
  bool maximize_;
  bool noncrossing_;

  std::vector<int> pos_;
  std::vector<Vertex> reserved_;
  std::vector<char> vertex_reserved_;
  long long exact_ = 0;
  int open_count_ = 0;
  long long open_anchor_sum_ = 0;
  int untouched_ = 0;
  std::vector<std::pair<int, int>> done_;

  long long best_ = 0;
  std::vector<int> best_pos_;
  bool symmetry_ = false;
  bool feasibility_ = false;
  bool found_ = false;
  long long target_ = 0;
};

ArrangementOptimum solve(const Tree& t, int max_n, bool maximize,
                         bool noncrossing, const char* name) {
  const int n = t.vertex_count();
  if (n > max_n) {
    throw TooLargeError(std::string(name) + ": n = " + std::to_string(n) +
                            " exceeds the exhaustive bound " +
                            std::to_string(max_n) +
                            "; the sampled variants give non-exact estimates",
                        n, max_n);
  }
  if (n == 1) return ArrangementOptimum{0, LinearArrangement::identity(1)};
  return BranchAndBound(t, maximize, noncrossing).solve();
}

SampledOptimum sampled_extremum(const Tree& t, long long samples,
                                SplitMix64 rng, bool maximize) {
  if (samples < 1) throw Error("sample count must be at least 1");
  const int n = t.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n) + 1);
  std::iota(pos.begin(), pos.end(), 0);
  long long best = maximize ? LLONG_MIN : LLONG_MAX;
  std::vector<int> best_pos;
  for (long long s = 0; s < samples; ++s) {
    for (int i = n; i > 1; --i) {
      const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
      std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]);
    }
    const long long d = cost_of(t, pos);
    if (maximize ? d > best : d < best) {
      best = d;
      best_pos = pos;
    }
  }
  std::vector<int> witness(best_pos.begin() + 1, best_pos.end());
  return SampledOptimum{best, LinearArrangement::from_positions(witness),
                        samples};
}

}  // namespace

ArrangementOptimum minimum_arrangement(const Tree& t, int max_n) {
  return solve(t, max_n, /*maximize=*/false, /*noncrossing=*/false,
               "minimum arrangement");
}

ArrangementOptimum maximum_arrangement(const Tree& t, int max_n) {
  return solve(t, max_n, /*maximize=*/true, /*noncrossing=*/false,
               "maximum arrangement");
}

ArrangementOptimum minimum_noncrossing_arrangement(const Tree& t, int max_n) {
  return solve(t, max_n, /*maximize=*/false, /*noncrossing=*/true,
               "minimum noncrossing arrangement");
}

SampledOptimum sampled_minimum_arrangement(const Tree& t, long long samples,
                                           SplitMix64 rng) {
  return sampled_extremum(t, samples, rng, /*maximize=*/false);
}

SampledOptimum sampled_maximum_arrangement(const Tree& t, long long samples,
                                           SplitMix64 rng) {
  return sampled_extremum(t, samples, rng, /*maximize=*/true);
}

}  // namespace linarr
