#pragma once

#include <span>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

// Bijection vertex -> position, both in 1..n. The attested arrangement of a
// sentence is the identity: token i sits at position i.
class LinearArrangement {
 public:
  static LinearArrangement identity(int n);
  // positions[v-1] is the position of vertex v; must be a permutation of 1..n.
  static LinearArrangement from_positions(std::vector<int> positions);
  // order[p-1] is the vertex at position p.
  static LinearArrangement from_order(std::span<const Vertex> order);

  int size() const { return static_cast<int>(pos_.size()); }
  int position(Vertex v) const { return pos_[static_cast<size_t>(v) - 1]; }
  const std::vector<int>& positions() const { return pos_; }
  std::vector<Vertex> order() const;  // vertices listed by position
  LinearArrangement reversed() const;

  friend bool operator==(const LinearArrangement&,
                         const LinearArrangement&) = default;

 private:
  explicit LinearArrangement(std::vector<int> pos) : pos_(std::move(pos)) {}

  std::vector<int> pos_;
};

// |pi(u) - pi(v)|, in [1, n-1].
int edge_length(const LinearArrangement& arr, Vertex u, Vertex v);

// D: total dependency length, the sum of |pi(u) - pi(v)| over all edges.
long long sum_lengths(const LinearArrangement& arr, const Tree& t);

// <d> = D / (n - 1); zero for the single-vertex tree.
Rational mean_length(long long d_total, int n);

// True crossing: exactly one endpoint of one edge lies strictly between the
// endpoints of the other. Edges sharing a vertex never cross.
bool edges_cross(const LinearArrangement& arr, const Edge& e1, const Edge& e2);

// C only; the cheap path used by permutation sweeps.
long long crossing_number(const LinearArrangement& arr, const Tree& t);

struct CrossingCount {
  long long total = 0;                // C
  std::vector<long long> per_edge;    // aligned with Tree::edges(); sums to 2C
};

CrossingCount count_crossings(const LinearArrangement& arr, const Tree& t);

// Potential crossings: n(n - 1 - <k^2>)/2, a non-negative integer.
long long c_max(const Tree& t);

}  // namespace linarr
