#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gp/word.hpp"

namespace gp {

// Finite radius ball of the syllable graph around a center. For vertices with
// the infinite-cyclic backend, payloads are capped and the truncation flag is
// set. Element order is the deterministic BFS discovery order.
struct SylBall {
  explicit SylBall(NormalForm c) : center(std::move(c)) {}

  NormalForm center;
  int radius = 0;
  int cap = 2;
  Subgraph allowed;  // moves restricted to these vertices (coset balls)
  bool int_truncated = false;

  std::vector<NormalForm> elems;
  std::vector<int> dist;
  std::unordered_map<NormalForm, int, NormalFormHash> index;
  // Unordered edges (i < j) with the vertex labelling the move.
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexId> edge_label;

  int find(const NormalForm& x) const {
    auto it = index.find(x);
    return it == index.end() ? -1 : it->second;
  }
};

SylBall enumerate_ball(const DefiningGraph& g, const NormalForm& center,
                       int radius, int cap, Subgraph allowed,
                       std::size_t budget = 2'000'000);
SylBall enumerate_ball(const DefiningGraph& g, const NormalForm& center,
                       int radius, int cap, std::size_t budget = 2'000'000);

// Equivalence class of ball edges under the triangle/square moves; all dual
// edges carry the same vertex label.
struct Hyperplane {
  VertexId label = -1;
  int id_edge = 0;  // smallest member edge index
  std::vector<int> dual_edges;
};

std::vector<Hyperplane> hyperplanes(const SylBall& ball);

struct SeparationResult {
  bool separated = false;
  // Margin rule: only pairs within radius/2 of the center give trusted
  // verdicts, so truncation cannot fabricate or hide components.
  bool trusted = false;
};

SeparationResult separates(const Hyperplane& h, const SylBall& ball,
                           const NormalForm& x, const NormalForm& y);

// DOT rendering with one color per hyperplane class.
std::string ball_to_dot(const SylBall& ball,
                        const std::vector<Hyperplane>& planes);

}  // namespace gp
