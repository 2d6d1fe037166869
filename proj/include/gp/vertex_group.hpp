#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

using VertexId = int;

enum class VertexGroupKind { Cyclic, IntCyclic, Table };

// One vertex-group backend. Payloads are int64: residues 1..n-1 for cyclic(n),
// nonzero integers for the infinite-cyclic backend, element indices 1..n-1 for
// table groups. Payload 0 is the identity in every backend.
class VertexGroupSpec {
 public:
  static VertexGroupSpec cyclic(int n);
  static VertexGroupSpec integers();
  // mul[i][j] is the index of element i*j; index 0 must be the identity.
  // generators lists element indices; their closure must be the whole table.
  static VertexGroupSpec table(std::vector<std::vector<int>> mul,
                               std::vector<int> generators);

  VertexGroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != VertexGroupKind::IntCyclic; }
  // All supported backends (finite groups and Z) are hyperbolic.
  bool is_hyperbolic() const { return true; }
  std::optional<std::int64_t> order() const;

  bool is_identity(std::int64_t p) const { return p == 0; }
  std::int64_t compose(std::int64_t a, std::int64_t b) const;
  std::int64_t inverse(std::int64_t a) const;
  // Word length with respect to the backend's generating set (symmetrised):
  // min(k, n-k) for cyclic(n), |k| for Z, BFS distance for table groups.
  std::int64_t word_length(std::int64_t a) const;
  // Finite kinds return every nonidentity element; Z returns +-1..+-cap.
  std::vector<std::int64_t> enumerate_nonidentity(int cap) const;

  void check_payload(std::int64_t p) const;
  std::string payload_text(std::int64_t p) const;

  bool operator==(const VertexGroupSpec& o) const;

 private:
  VertexGroupSpec() = default;

  VertexGroupKind kind_ = VertexGroupKind::Cyclic;
  int modulus_ = 0;  // cyclic order / table size
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<int> wlen_;  // BFS distances from the identity (table kind)
};

struct VertexElement {
  VertexId vertex = -1;
  std::int64_t payload = 0;

  auto operator<=>(const VertexElement& o) const = default;
};

}  // namespace gp
