#pragma once

#include <string>
#include <vector>

#include "gp/ball.hpp"

namespace gp {

// Syllable ball with extra edges joining pairs whose difference lies in a
// vertex group or in the subgroup of a minsquare subgraph.
struct ElectrifiedBall {
  SylBall base;
  std::vector<std::pair<int, int>> extra_edges;
  std::vector<int> edist;  // distances from the center in the electrified graph
};

ElectrifiedBall electrify(const SylBall& ball);

enum class BoundednessKind {
  Unbounded,
  Complete,
  Minsquare,
  MinsquareJoinComplete,
};

struct BoundednessVerdict {
  bool bounded = false;
  BoundednessKind kind = BoundednessKind::Unbounded;
  Subgraph minsquare_part;  // set for the join case
  Subgraph complete_part;
  std::string text;
};

// Electrification boundedness: bounded iff the graph is complete, minsquare,
// or a join of a minsquare subgraph and a complete graph. Requires finite
// vertex groups.
BoundednessVerdict classify_boundedness(const DefiningGraph& g);

struct QuasiLineVerdict {
  bool quasi_line = false;
  std::string text;
};

// Quasi-line iff the group is infinite virtually cyclic (two non-adjacent
// Z/2 vertices, possibly joined with a complete graph of finite groups).
QuasiLineVerdict classify_quasiline(const DefiningGraph& g);

// Eccentricity of the center in the electrified graph per radius step; a
// stabilizing sequence corroborates a bounded verdict, a strictly growing one
// an unbounded verdict. Heuristic only, never overrides the classification.
std::vector<int> electrified_growth(const DefiningGraph& g, int radius);

std::string electrified_to_dot(const ElectrifiedBall& ball);

}  // namespace gp
