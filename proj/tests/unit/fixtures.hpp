#pragma once

// The bundled example sentences as in-memory trees (vertex = token position
// in the attested order). Mirrors the edge lists under data/.

#include <utility>
#include <vector>

#include "linarr/tree.hpp"

namespace fixtures {

// "John saw a dog which was a Yorkshire Terrier" (9 tokens, planar).
inline linarr::Tree john_saw_9() {
  const std::vector<std::pair<int, int>> edges = {
      {1, 2}, {2, 4}, {3, 4}, {4, 6}, {5, 6}, {6, 9}, {7, 9}, {8, 9}};
  return linarr::Tree::build(9, edges);
}

// "John saw a dog yesterday which was a Yorkshire Terrier" (10 tokens, one
// crossing in the attested order).
inline linarr::Tree john_saw_10() {
  const std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 4}, {3, 4},
                                                  {2, 5}, {4, 7}, {6, 7},
                                                  {7, 10}, {8, 10}, {9, 10}};
  return linarr::Tree::build(10, edges);
}

// "Yesterday a woman who I knew arrived" (relative clause in situ).
inline linarr::Tree rc_insitu_7() {
  const std::vector<std::pair<int, int>> edges = {{1, 7}, {2, 3}, {3, 7},
                                                  {3, 4}, {4, 6}, {5, 6}};
  return linarr::Tree::build(7, edges);
}

// "Yesterday a woman arrived who I knew" (right-extraposed relative clause;
// same tree as rc_insitu_7 up to relabeling).
inline linarr::Tree rc_extraposed_7() {
  const std::vector<std::pair<int, int>> edges = {{1, 4}, {2, 3}, {3, 4},
                                                  {3, 5}, {5, 7}, {6, 7}};
  return linarr::Tree::build(7, edges);
}

}  // namespace fixtures
