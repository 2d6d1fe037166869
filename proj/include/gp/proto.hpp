#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// Abstract finite proto-hierarchy structures: an index set with nesting,
// orthogonality and transversality, declared relative projections, and a
// hierarchy constant. Point-set contents are opaque identifiers; only the
// relational and counting axioms are validated here.

enum class Rel : std::uint8_t {
  Equal,
  Nested,    // row properly nested into column
  Contains,  // column properly nested into row
  Orthogonal,
  Transverse,
};

enum class DiamFlag : std::uint8_t { Point, Bounded, Unbounded };

struct ProtoDomain {
  std::string id;
  DiamFlag flag = DiamFlag::Unbounded;
  int bound = 0;  // for Bounded
  // Set for domains created by completion: base domain and orthogonal family.
  std::optional<int> container_base;
  std::vector<int> container_family;
};

struct ProtoProjection {
  std::string set_id;
  int diam = 0;
};

class ProtoStructure {
 public:
  explicit ProtoStructure(int hierarchy_constant)
      : E_(hierarchy_constant) {
    if (hierarchy_constant < 1)
      throw std::invalid_argument("hierarchy constant must be positive");
  }

  int hierarchy_constant() const { return E_; }
  int size() const { return static_cast<int>(domains_.size()); }
  const ProtoDomain& domain(int i) const { return domains_.at(i); }
  std::optional<int> find(const std::string& id) const;

  int add_domain(ProtoDomain d);
  // Sets the relation for an ordered pair; the mirror entry is kept in sync.
  void set_relation(int a, int b, Rel r);
  Rel rel(int a, int b) const { return rel_.at(index(a, b)); }
  bool nested_le(int a, int b) const {  // a nested-or-equal in b
    const Rel r = rel(a, b);
    return r == Rel::Equal || r == Rel::Nested;
  }

  void set_projection(int from, int to, ProtoProjection p);
  const ProtoProjection* projection(int from, int to) const;

  std::vector<int> maximal_domains() const;
  // Size of the largest pairwise-orthogonal family (exact search).
  int max_orthogonal_family() const;
  // Longest proper-nesting chain, counted in domains.
  int longest_nesting_chain() const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * domains_.size() + b;
  }

  int E_;
  std::vector<ProtoDomain> domains_;
  std::vector<Rel> rel_;
  std::map<std::pair<int, int>, ProtoProjection> proj_;
};

struct ProtoReport {
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Structural invariants: relation matrix consistency, nesting a partial
// order with a unique maximal element, orthogonality symmetric, exclusive of
// comparability and inherited under nesting, projections defined exactly for
// transverse and properly nested pairs with declared diameters <= 4E, and
// pairwise-orthogonal families of size <= E.
ProtoReport validate(const ProtoStructure& ps);

// Container axiom: for W and U properly nested in W with an orthogonal
// witness inside W, some domain properly nested in W absorbs every V nested
// in W orthogonal to U.
ProtoReport check_containers(const ProtoStructure& ps);

// Adds a point domain for every container pair (W, pairwise-orthogonal
// family nested in W admitting an orthogonal witness), with relations and
// relative projections per the completion rules. Structures that already
// satisfy the container axiom are returned unchanged.
ProtoStructure complete(const ProtoStructure& ps);

// Chain bounds for completed structures: container chains over one base
// <= E^2+E, all nesting chains <= E^3+E^2+E.
ProtoReport check_completed_complexity(const ProtoStructure& ps);

// Combination: replaces each designated nesting-minimal domain of rel by a
// whole leaf structure; the result carries hierarchy constant E0^2+E0.
ProtoStructure combine(
    const ProtoStructure& rel,
    const std::vector<std::pair<std::string, ProtoStructure>>& leaves);

std::string proto_to_json_text(const ProtoStructure& ps);
ProtoStructure proto_from_json_text(const std::string& text);

// The ball-restricted proto structure of a graph product: domains are the
// parallelism classes with representative in the radius ball, relations and
// relative projections computed from the coset geometry.
ProtoStructure proto_from_graph(const DefiningGraph& g, int radius, int cap,
                                int sample_radius);

}  // namespace gp
