#include "linarr/tree.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace linarr {

namespace {

// Union-find over 1..n.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // false if x and y were already connected
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Tree Tree::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) {
    throw NotATreeError(TreeDefect::LabelOutOfRange,
                        "vertex count must be at least 1");
  }
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw NotATreeError(TreeDefect::LabelOutOfRange,
                          "edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") outside 1.." +
                              std::to_string(n));
    }
    if (u == v) {
      throw NotATreeError(TreeDefect::SelfLoop,
                          "vertex " + std::to_string(u));
    }
  }

  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    norm.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  std::sort(norm.begin(), norm.end());
  for (size_t i = 1; i < norm.size(); ++i) {
    if (norm[i] == norm[i - 1]) {
      throw NotATreeError(TreeDefect::DuplicateEdge,
                          "edge (" + std::to_string(norm[i].u) + "," +
                              std::to_string(norm[i].v) + ")");
    }
  }

  // A union conflict means a cycle regardless of the edge count, so the
  // 4-cycle on 4 vertices reports "cycle" rather than "wrong edge count".
  DisjointSets sets(n);
  for (const Edge& e : norm) {
    if (!sets.unite(e.u, e.v)) {
      throw NotATreeError(TreeDefect::Cycle,
                          "edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") closes a cycle");
    }
  }
  if (static_cast<int>(norm.size()) != n - 1) {
    throw NotATreeError(TreeDefect::WrongEdgeCount,
                        std::to_string(norm.size()) + " edges, expected " +
                            std::to_string(n - 1));
  }
  // n-1 acyclic edges connect everything; kept as a safety net.
  for (int v = 2; v <= n; ++v) {
    if (sets.find(v) != sets.find(1)) {
      throw NotATreeError(TreeDefect::Disconnected,
                          "vertex " + std::to_string(v) + " unreachable");
    }
  }

  Tree t;
  t.n_ = n;
  t.edges_ = std::move(norm);
  t.degrees_.assign(static_cast<size_t>(n), 0);
  for (const Edge& e : t.edges_) {
    ++t.degrees_[static_cast<size_t>(e.u) - 1];
    ++t.degrees_[static_cast<size_t>(e.v) - 1];
  }
  t.adj_offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    t.adj_offsets_[static_cast<size_t>(v)] =
        t.adj_offsets_[static_cast<size_t>(v) - 1] + t.degree(v);
  }
  t.adj_.resize(2 * t.edges_.size());
  std::vector<int> fill(t.adj_offsets_.begin(), t.adj_offsets_.end() - 1);
  for (const Edge& e : t.edges_) {
    t.adj_[static_cast<size_t>(fill[static_cast<size_t>(e.u) - 1]++)] = e.v;
    t.adj_[static_cast<size_t>(fill[static_cast<size_t>(e.v) - 1]++)] = e.u;
  }
  return t;
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  const auto begin = static_cast<size_t>(adj_offsets_[static_cast<size_t>(v) - 1]);
  const auto end = static_cast<size_t>(adj_offsets_[static_cast<size_t>(v)]);
  return {adj_.data() + begin, end - begin};
}

long long Tree::k1() const {
  return 2LL * (n_ - 1);
}

long long Tree::k2() const {
  long long sum = 0;
  for (int d : degrees_) sum += static_cast<long long>(d) * d;
  return sum;
}

Tree make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Tree::build(n, edges);
}

Tree make_star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Tree::build(n, edges);
}

Tree make_quasi_star(int n) {
  if (n < 3) {
    throw DomainTooSmallError("quasi-star trees need n >= 3, got n = " +
                              std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n - 1; ++v) edges.emplace_back(1, v);
  edges.emplace_back(2, n);
  return Tree::build(n, edges);
}

DegreeProfile degree_profile(const Tree& t) {
  DegreeProfile p;
  p.degrees = t.degrees();
  p.k1 = t.k1();
  p.k2 = t.k2();
  const int n = t.vertex_count();
  p.mean_k = Rational(p.k1, n);
  p.mean_k2 = Rational(p.k2, n);
  p.var_k = p.mean_k2 - p.mean_k * p.mean_k;
  return p;
}

std::string to_string(TreeClass c) {
  switch (c) {
    case TreeClass::Star:
      return "star";
    case TreeClass::QuasiStar:
      return "quasi-star";
    case TreeClass::Linear:
      return "linear";
    case TreeClass::Other:
      return "other";
  }
  return "unknown";
}

TreeClass classify(const Tree& t) {
  const int n = t.vertex_count();
  const auto& deg = t.degrees();
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  if (n >= 2 && max_deg == n - 1) return TreeClass::Star;
  // Below n = 5 the quasi-star degree sequence is also a star (n = 3) or a
  // path (n = 4), both claimed by the higher-precedence classes.
  if (n >= 5 && max_deg == n - 2) {
    int ones = 0, twos = 0;
    for (int d : deg) {
      if (d == 1) ++ones;
      if (d == 2) ++twos;
    }
    if (twos == 1 && ones == n - 2) return TreeClass::QuasiStar;
  }
  if (max_deg <= 2) return TreeClass::Linear;
  return TreeClass::Other;
}

LeafReduction reduce_leaf(const Tree& t, Vertex leaf) {
  const int n = t.vertex_count();
  if (n < 2) throw NotALeafError("cannot reduce a single-vertex tree");
  if (leaf < 1 || leaf > n) {
    throw NotALeafError("vertex " + std::to_string(leaf) + " outside 1.." +
                        std::to_string(n));
  }
  if (t.degree(leaf) != 1) {
    throw NotALeafError("vertex " + std::to_string(leaf) + " has degree " +
                        std::to_string(t.degree(leaf)));
  }
  const Vertex attachment = t.neighbors(leaf)[0];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) - 2);
  const auto relabel = [leaf](Vertex v) { return v > leaf ? v - 1 : v; };
  for (const Edge& e : t.edges()) {
    if (e.u == leaf || e.v == leaf) continue;
    edges.emplace_back(relabel(e.u), relabel(e.v));
  }
  return LeafReduction{Tree::build(n - 1, edges), t.degree(attachment)};
}

long long k2_star(int n) {
  if (n < 2) {
    throw DomainTooSmallError("star trees need n >= 2, got n = " +
                              std::to_string(n));
  }
  return static_cast<long long>(n) * (n - 1);
}

long long k2_quasi(int n) {
  if (n < 3) {
    throw DomainTooSmallError("quasi-star trees need n >= 3, got n = " +
                              std::to_string(n));
  }
  return static_cast<long long>(n) * n - 3LL * n + 6;
}

long long unlabeled_tree_count(int n) {
  static constexpr std::array<long long, 19> kCounts = {
      1,    1,    1,    2,     3,     6,     11,     23,     47,    106,
      235,  551,  1301, 3159,  7741,  19320, 48629,  123867, 317955};
  if (n < 1 || n > static_cast<int>(kCounts.size())) {
    throw OutOfTableRangeError("unlabeled tree counts are tabulated for 1..19, got n = " +
                               std::to_string(n));
  }
  return kCounts[static_cast<size_t>(n) - 1];
}

}  // namespace linarr
