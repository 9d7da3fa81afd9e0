#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "linarr/ensembles.hpp"
#include "linarr/tree.hpp"

using namespace linarr;

namespace {

Tree from_edges(int n, std::vector<std::pair<int, int>> edges) {
  return Tree::build(n, edges);
}

}  // namespace

TEST_CASE("build validates the smallest tree") {
  const Tree t = from_edges(2, {{1, 2}});
  CHECK(t.vertex_count() == 2);
  CHECK(t.degree(1) == 1);
  CHECK(t.degree(2) == 1);
}

TEST_CASE("build rejects defective inputs") {
  CHECK_THROWS_WITH_AS(from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}),
                       doctest::Contains("cycle"), NotATreeError);
  try {
    from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::Cycle);
  }
  try {
    from_edges(3, {{1, 2}});
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::WrongEdgeCount);
  }
  try {
    from_edges(3, {{1, 2}, {1, 2}});
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::DuplicateEdge);
  }
  try {
    from_edges(3, {{1, 1}, {2, 3}});
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::SelfLoop);
  }
  try {
    from_edges(3, {{1, 2}, {2, 4}});
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::LabelOutOfRange);
  }
  CHECK_THROWS_AS(from_edges(0, {}), NotATreeError);
}

TEST_CASE("single vertex tree is legal") {
  const Tree t = from_edges(1, {});
  CHECK(t.vertex_count() == 1);
  CHECK(t.k1() == 0);
  CHECK(t.k2() == 0);
  CHECK(classify(t) == TreeClass::Linear);
}

TEST_CASE("degree profiles") {
  SUBCASE("star of five") {
    const DegreeProfile p = degree_profile(make_star(5));
    CHECK(p.k2 == 20);
    CHECK(p.mean_k2 == Rational(4));
  }
  SUBCASE("path of five") {
    const DegreeProfile p = degree_profile(make_path(5));
    CHECK(p.k2 == 14);
    CHECK(p.mean_k2 == Rational(14, 5));
  }
  SUBCASE("ten-token sentence") {
    const DegreeProfile p = degree_profile(fixtures::john_saw_10());
    CHECK(p.mean_k2 == Rational(21, 5));  // 4.2
  }
  SUBCASE("nine-token sentence") {
    const DegreeProfile p = degree_profile(fixtures::john_saw_9());
    CHECK(p.mean_k2 == Rational(4));
  }
}

TEST_CASE("degree profile identities over all small trees") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_labeled_trees(n, [&](const Tree& t) {
      const DegreeProfile p = degree_profile(t);
      CHECK(p.k1 == 2 * (n - 1));
      CHECK(p.var_k == p.mean_k2 - p.mean_k * p.mean_k);
      CHECK(p.mean_k2 <= Rational(n - 1));
      if (n >= 2) {
        const bool is_star = classify(t) == TreeClass::Star;
        CHECK((p.mean_k2 == Rational(n - 1)) == is_star);
      }
    });
  }
}

TEST_CASE("classification") {
  CHECK(classify(make_star(9)) == TreeClass::Star);
  CHECK(classify(make_quasi_star(6)) == TreeClass::QuasiStar);
  CHECK(classify(make_path(4)) == TreeClass::Linear);
  CHECK(classify(make_path(9)) == TreeClass::Linear);
  CHECK(classify(fixtures::rc_insitu_7()) == TreeClass::Other);
  // the one tree on three vertices is simultaneously star, quasi-star and
  // path; precedence reports the star
  CHECK(classify(make_path(3)) == TreeClass::Star);
  CHECK(classify(make_path(2)) == TreeClass::Star);
  CHECK(classify(make_quasi_star(5)) == TreeClass::QuasiStar);
  const std::vector<std::pair<int, int>> spider = {
      {1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}};
  CHECK(classify(Tree::build(6, spider)) == TreeClass::Other);
}

TEST_CASE("leaf reduction") {
  SUBCASE("star keeps its shape") {
    const Tree star = make_star(5);
    const LeafReduction r = reduce_leaf(star, 3);
    CHECK(r.attachment_degree == 4);
    CHECK(r.reduced.vertex_count() == 4);
    CHECK(classify(r.reduced) == TreeClass::Star);
    CHECK(star.k2() == r.reduced.k2() + 2 * r.attachment_degree);
    CHECK(r.reduced.k2() == 12);
  }
  SUBCASE("path endpoint") {
    const LeafReduction r = reduce_leaf(make_path(3), 3);
    CHECK(r.attachment_degree == 2);
    CHECK(r.reduced.vertex_count() == 2);
  }
  SUBCASE("quasi-star loses its long arm") {
    const Tree q = make_quasi_star(5);  // leaf 5 hangs from the degree-2 vertex
    const LeafReduction r = reduce_leaf(q, 5);
    CHECK(r.attachment_degree == 2);
    CHECK(classify(r.reduced) == TreeClass::Star);
    CHECK(q.k2() == r.reduced.k2() + 4);
  }
  SUBCASE("two-vertex tree reduces to one") {
    const LeafReduction r = reduce_leaf(from_edges(2, {{1, 2}}), 1);
    CHECK(r.reduced.vertex_count() == 1);
    CHECK(r.attachment_degree == 1);
  }
  SUBCASE("rejects non-leaves") {
    CHECK_THROWS_AS(reduce_leaf(make_path(3), 2), NotALeafError);
    CHECK_THROWS_AS(reduce_leaf(from_edges(1, {}), 1), NotALeafError);
    CHECK_THROWS_AS(reduce_leaf(make_path(3), 7), NotALeafError);
  }
}

TEST_CASE("k2 reduction identity over all small trees") {
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled_trees(n, [&](const Tree& t) {
      for (Vertex v = 1; v <= n; ++v) {
        if (t.degree(v) != 1) continue;
        const LeafReduction r = reduce_leaf(t, v);
        CHECK(t.k2() == r.reduced.k2() + 2 * r.attachment_degree);

        // re-attaching a leaf to the same vertex restores the degree multiset
        const Vertex attachment_before = t.neighbors(v)[0];
        const Vertex attachment_after =
            attachment_before > v ? attachment_before - 1 : attachment_before;
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : r.reduced.edges()) edges.emplace_back(e.u, e.v);
        edges.emplace_back(attachment_after, n);
        const Tree restored = Tree::build(n, edges);
        std::vector<int> before = t.degrees();
        std::vector<int> after = restored.degrees();
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
        CHECK(restored.k2() == r.reduced.k2() + 2 * r.attachment_degree);
      }
    });
  }
}

TEST_CASE("the extremal-k2 check flags forged inputs") {
  // a forged pair: a star-level k2 claimed for a non-star tree must trip
  // the implication used by the verification checks
  const long long forged_k2 = k2_star(6);
  const bool implication_holds =
      !(forged_k2 > k2_quasi(6)) || classify(make_path(6)) == TreeClass::Star;
  CHECK_FALSE(implication_holds);
}

TEST_CASE("closed forms for extremal degree sums") {
  CHECK(k2_quasi(3) == 6);
  CHECK(k2_star(3) == 6);
  CHECK(k2_star(9) == 72);
  CHECK(k2_quasi(9) == 60);
  CHECK_THROWS_AS(k2_quasi(2), DomainTooSmallError);
  CHECK_THROWS_AS(k2_star(1), DomainTooSmallError);
  for (int n = 4; n <= 50; ++n) {
    CHECK(k2_quasi(n) < k2_star(n));
  }
  // the generators realize the closed forms
  for (int n = 3; n <= 12; ++n) {
    CHECK(make_quasi_star(n).k2() == k2_quasi(n));
    CHECK(make_star(n).k2() == k2_star(n));
  }
}

TEST_CASE("second-largest k2 forces a star") {
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled_trees(n, [&](const Tree& t) {
      if (t.k2() > k2_quasi(n)) {
        CHECK(classify(t) == TreeClass::Star);
      }
    });
  }
}

TEST_CASE("unlabeled tree counts") {
  CHECK(unlabeled_tree_count(1) == 1);
  CHECK(unlabeled_tree_count(4) == 2);
  CHECK(unlabeled_tree_count(16) == 19320);
  CHECK(unlabeled_tree_count(19) == 317955);
  CHECK_THROWS_AS(unlabeled_tree_count(0), OutOfTableRangeError);
  CHECK_THROWS_AS(unlabeled_tree_count(20), OutOfTableRangeError);
}
