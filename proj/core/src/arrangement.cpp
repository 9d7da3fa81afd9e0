#include "linarr/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace linarr {

namespace {

void check_bijection(const std::vector<int>& pos) {
  const int n = static_cast<int>(pos.size());
  if (n == 0) throw Error("arrangement must cover at least one vertex");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int p : pos) {
    if (p < 1 || p > n || seen[static_cast<size_t>(p) - 1]) {
      throw Error("arrangement is not a bijection onto 1.." + std::to_string(n));
    }
    seen[static_cast<size_t>(p) - 1] = 1;
  }
}

inline bool interleave(int lo1, int hi1, int lo2, int hi2) {
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
         (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

}  // namespace

LinearArrangement LinearArrangement::identity(int n) {
  if (n < 1) throw Error("arrangement must cover at least one vertex");
  std::vector<int> pos(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  return LinearArrangement(std::move(pos));
}

LinearArrangement LinearArrangement::from_positions(std::vector<int> positions) {
  check_bijection(positions);
  return LinearArrangement(std::move(positions));
}

LinearArrangement LinearArrangement::from_order(std::span<const Vertex> order) {
  const int n = static_cast<int>(order.size());
  if (n == 0) throw Error("arrangement must cover at least one vertex");
  std::vector<int> pos(static_cast<size_t>(n), 0);
  for (int p = 1; p <= n; ++p) {
    const Vertex v = order[static_cast<size_t>(p) - 1];
    if (v < 1 || v > n || pos[static_cast<size_t>(v) - 1] != 0) {
      throw Error("order is not a permutation of 1.." + std::to_string(n));
    }
    pos[static_cast<size_t>(v) - 1] = p;
  }
  return LinearArrangement(std::move(pos));
}

std::vector<Vertex> LinearArrangement::order() const {
  std::vector<Vertex> by_position(pos_.size());
  for (Vertex v = 1; v <= size(); ++v) {
    by_position[static_cast<size_t>(position(v)) - 1] = v;
  }
  return by_position;
}

LinearArrangement LinearArrangement::reversed() const {
  std::vector<int> pos(pos_.size());
  const int n = size();
  for (size_t i = 0; i < pos_.size(); ++i) pos[i] = n + 1 - pos_[i];
  return LinearArrangement(std::move(pos));
}

int edge_length(const LinearArrangement& arr, Vertex u, Vertex v) {
  if (u == v) {
    throw SameVertexError("edge endpoints coincide at vertex " +
                          std::to_string(u));
  }
  return std::abs(arr.position(u) - arr.position(v));
}

long long sum_lengths(const LinearArrangement& arr, const Tree& t) {
  long long total = 0;
  for (const Edge& e : t.edges()) total += edge_length(arr, e.u, e.v);
  return total;
}

Rational mean_length(long long d_total, int n) {
  if (n <= 1) return Rational(0);
  return Rational(d_total, n - 1);
}

bool edges_cross(const LinearArrangement& arr, const Edge& e1, const Edge& e2) {
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) {
    return false;
  }
  const int p1u = arr.position(e1.u);
  const int p1v = arr.position(e1.v);
  const int p2u = arr.position(e2.u);
  const int p2v = arr.position(e2.v);
  return interleave(std::min(p1u, p1v), std::max(p1u, p1v),
                    std::min(p2u, p2v), std::max(p2u, p2v));
}

long long crossing_number(const LinearArrangement& arr, const Tree& t) {
  const auto& edges = t.edges();
  const size_t m = edges.size();
  // Interval endpoints per edge; shared vertices can never interleave
  // strictly, so no adjacency test is needed.
  std::vector<int> lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    const int a = arr.position(edges[i].u);
    const int b = arr.position(edges[i].v);
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  long long c = 0;
  for (size_t i = 0; i + 1 < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (interleave(lo[i], hi[i], lo[j], hi[j])) ++c;
    }
  }
  return c;
}

CrossingCount count_crossings(const LinearArrangement& arr, const Tree& t) {
  const auto& edges = t.edges();
  const size_t m = edges.size();
  std::vector<int> lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    const int a = arr.position(edges[i].u);
    const int b = arr.position(edges[i].v);
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  CrossingCount result;
  result.per_edge.assign(m, 0);
  for (size_t i = 0; i + 1 < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (interleave(lo[i], hi[i], lo[j], hi[j])) {
        ++result.total;
        ++result.per_edge[i];
        ++result.per_edge[j];
      }
    }
  }
  return result;
}

long long c_max(const Tree& t) {
  const long long n = t.vertex_count();
  return (n * (n - 1) - t.k2()) / 2;
}

}  // namespace linarr
