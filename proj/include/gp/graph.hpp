#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gp/vertex_group.hpp"

namespace gp {

// A set of vertices of a defining graph, stored as a bitmask. Subgraphs are
// always interpreted as full (induced) subgraphs.
class Subgraph {
 public:
  constexpr Subgraph() = default;
  static constexpr Subgraph from_mask(std::uint32_t m) {
    Subgraph s;
    s.bits_ = m;
    return s;
  }
  static Subgraph single(VertexId v) { return from_mask(1u << v); }

  std::uint32_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  bool contains(VertexId v) const { return (bits_ >> v) & 1u; }
  bool subset_of(Subgraph o) const { return (bits_ & ~o.bits_) == 0; }
  bool proper_subset_of(Subgraph o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  Subgraph with(VertexId v) const { return from_mask(bits_ | (1u << v)); }
  Subgraph without(VertexId v) const { return from_mask(bits_ & ~(1u << v)); }
  Subgraph operator&(Subgraph o) const { return from_mask(bits_ & o.bits_); }
  Subgraph operator|(Subgraph o) const { return from_mask(bits_ | o.bits_); }
  Subgraph operator-(Subgraph o) const { return from_mask(bits_ & ~o.bits_); }
  bool operator==(const Subgraph& o) const = default;

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (std::uint32_t m = bits_; m; m &= m - 1)
      out.push_back(__builtin_ctz(m));
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct MeierVerdict {
  bool hyperbolic = false;
  int violated_clause = 0;  // 0 = none, otherwise 1..3
  std::string witness;
};

// Finite simplicial defining graph with one vertex-group backend per vertex.
// Immutable after construction; vertex order is declaration order and all
// canonical forms derive from it.
class DefiningGraph {
 public:
  DefiningGraph(std::vector<std::string> names,
                std::vector<std::pair<VertexId, VertexId>> edges,
                std::vector<VertexGroupSpec> specs);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  const VertexGroupSpec& spec(VertexId v) const { return specs_.at(v); }

  bool adjacent(VertexId u, VertexId v) const {
    return adj_.at(u).contains(v);
  }
  Subgraph adjacency(VertexId v) const { return adj_.at(v); }
  Subgraph all_vertices() const { return all_; }
  void check_subgraph(Subgraph s) const;

  // lk(lam): vertices outside lam adjacent to every vertex of lam.
  Subgraph link(Subgraph lam) const;
  // st(lam) = lam u lk(lam).
  Subgraph star(Subgraph lam) const;
  // Finest join decomposition of lam: connected components of the complement
  // graph restricted to lam. A single part of size >= 2 means no join split.
  std::vector<Subgraph> join_decomposition(Subgraph lam) const;
  bool splits_as_join(Subgraph lam) const;
  bool is_complete(Subgraph lam) const;

  // Induced squares (4-cycles) as vertex quadruples v-x-w-y in cycle order,
  // so {v,w} and {x,y} are the non-adjacent pairs.
  std::vector<std::array<VertexId, 4>> induced_squares() const;
  bool is_square_complete(Subgraph lam) const;
  // All minimal square-complete induced subgraphs containing a square.
  std::vector<Subgraph> minsquare_subgraphs() const;
  // When the graph splits as a join and has a proper minsquare subgraph,
  // returns (part containing every minsquare subgraph, complete part).
  std::optional<std::pair<Subgraph, Subgraph>> minsquare_join_split() const;

  MeierVerdict meier_hyperbolic() const;
  bool is_virtually_cyclic() const;

  std::string subgraph_text(Subgraph s) const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexGroupSpec> specs_;
  std::vector<Subgraph> adj_;
  Subgraph all_;
};

}  // namespace gp
