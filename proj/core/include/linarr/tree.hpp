#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linarr/errors.hpp"
#include "linarr/rational.hpp"

namespace linarr {

// Vertices carry dense labels 1..n. For sentences, token i of the attested
// order maps to vertex i, so labels double as arrangement positions.
using Vertex = int;

struct Edge {
  Vertex u;  // normalized: u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected labeled tree. Immutable after construction and safe to share
// across threads; every operation on it is pure.
class Tree {
 public:
  // Validates vertex labels, edge count, and connectivity/acyclicity.
  static Tree build(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return degrees_[static_cast<size_t>(v) - 1]; }
  const std::vector<int>& degrees() const { return degrees_; }
  long long k1() const;  // sum of degrees, always 2(n-1)
  long long k2() const;  // sum of squared degrees

 private:
  Tree() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;       // degrees_[v-1]
  std::vector<int> adj_offsets_;   // CSR layout over adj_
  std::vector<Vertex> adj_;
};

Tree make_path(int n);
Tree make_star(int n);        // hub is vertex 1
Tree make_quasi_star(int n);  // n >= 3; vertex 1 has degree n-2, vertex 2 degree 2

struct DegreeProfile {
  std::vector<int> degrees;  // degrees[i] is the degree of vertex i+1
  long long k1 = 0;          // sum of degrees = 2(n-1)
  long long k2 = 0;          // sum of squared degrees
  Rational mean_k;           // first moment
  Rational mean_k2;          // second moment, at most n-1 with equality for stars
  Rational var_k;            // mean_k2 - mean_k^2
};

DegreeProfile degree_profile(const Tree& t);

// Star: one vertex of degree n-1. QuasiStar: degrees {n-2, 2, 1, ..., 1}.
// Linear: no degree above 2. The classes overlap for small n and resolve
// by precedence Star > QuasiStar > Linear: the n=3 tree reports Star, the
// n=4 path (which is also the n=4 quasi-star) reports Linear.
enum class TreeClass { Star, QuasiStar, Linear, Other };

std::string to_string(TreeClass c);

TreeClass classify(const Tree& t);

struct LeafReduction {
  Tree reduced;            // n-1 vertices, labels above the removed leaf shifted down
  int attachment_degree;   // degree, in the input tree, of the vertex the leaf hung from
};

// Removes a degree-1 vertex. The sum of squared degrees satisfies
// k2(input) = k2(reduced) + 2 * attachment_degree.
LeafReduction reduce_leaf(const Tree& t, Vertex leaf);

long long k2_star(int n);   // n(n-1), n >= 2
long long k2_quasi(int n);  // n^2 - 3n + 6, n >= 3

// Number of unlabeled trees on n vertices, 1 <= n <= 19 (hard-coded table).
long long unlabeled_tree_count(int n);

}  // namespace linarr
