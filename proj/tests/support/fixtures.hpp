#pragma once

#include <memory>
#include <vector>

#include "gp/graph.hpp"

namespace gp::fixtures {

inline DefiningGraph racg(std::vector<std::string> names,
                          std::vector<std::pair<int, int>> edges) {
  std::vector<VertexGroupSpec> specs(names.size(), VertexGroupSpec::cyclic(2));
  return DefiningGraph(std::move(names), std::move(edges), std::move(specs));
}

// Two Z/2 vertices, no edge: the infinite dihedral group.
inline DefiningGraph p2() { return racg({"a", "b"}, {}); }

// Two Z/2 vertices joined by an edge: Z/2 x Z/2.
inline DefiningGraph j2() { return racg({"a", "b"}, {{0, 1}}); }

// 4-cycle a-b-c-d of Z/2 vertices.
inline DefiningGraph c4() {
  return racg({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Path a-b-c of Z/2 vertices.
inline DefiningGraph p3() { return racg({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

// 5-cycle of Z/2 vertices.
inline DefiningGraph c5() {
  return racg({"a", "b", "c", "d", "e"},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// C4 joined with a complete K2.
inline DefiningGraph c4_join_k2() {
  return racg({"a", "b", "c", "d", "k", "l"},
              {{0, 1}, {1, 2}, {2, 3}, {3, 0},
               {4, 5},
               {0, 4}, {1, 4}, {2, 4}, {3, 4},
               {0, 5}, {1, 5}, {2, 5}, {3, 5}});
}

// Symmetric group S3 as a multiplication table: 0=e, 1=r, 2=r^2, 3=s,
// 4=sr, 5=sr^2 with r^3 = s^2 = e and rs = sr^2.
inline VertexGroupSpec s3_table() {
  const std::vector<std::vector<int>> mul = {
      {0, 1, 2, 3, 4, 5},
      {1, 2, 0, 5, 3, 4},
      {2, 0, 1, 4, 5, 3},
      {3, 4, 5, 0, 1, 2},
      {4, 5, 3, 2, 0, 1},
      {5, 3, 4, 1, 2, 0},
  };
  return VertexGroupSpec::table(mul, {1, 3});
}

}  // namespace gp::fixtures
