#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// Canonical reduced syllable sequence for an element of the graph product.
// Reduced: no same-vertex pair with only commuting syllables in between.
// Canonical: the unique linearization of the dependence order on syllables
// that greedily prefers the smallest vertex id (leftmost-greedy form), so
// equality of elements is equality of representations.
class NormalForm {
 public:
  static NormalForm identity(const DefiningGraph& g);
  static NormalForm syllable(const DefiningGraph& g, VertexElement s);
  static NormalForm reduce(const DefiningGraph& g,
                           std::span<const VertexElement> raw);
  static NormalForm reduce(const DefiningGraph& g,
                           const std::vector<VertexElement>& raw) {
    return reduce(g, std::span<const VertexElement>(raw));
  }

  const DefiningGraph& graph() const { return *graph_; }
  const std::vector<VertexElement>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  int syllable_length() const { return static_cast<int>(syl_.size()); }
  std::int64_t word_length() const;
  Subgraph support() const;

  bool operator==(const NormalForm& o) const {
    return graph_ == o.graph_ && syl_ == o.syl_;
  }
  std::size_t hash() const;
  std::string text() const;

  friend NormalForm multiply(const NormalForm& x, const NormalForm& y);
  friend NormalForm invert(const NormalForm& x);
  friend NormalForm prefix_in(const NormalForm& x, Subgraph lam);

 private:
  explicit NormalForm(const DefiningGraph& g) : graph_(&g) {}

  const DefiningGraph* graph_ = nullptr;
  std::vector<VertexElement> syl_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& x) const { return x.hash(); }
};

NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm invert(const NormalForm& x);

// Maximal prefix of x supported in lam (single sweep with a blocked set).
NormalForm prefix_in(const NormalForm& x, Subgraph lam);
// suffix_lam(x) = (prefix_lam(x^-1))^-1.
NormalForm suffix_in(const NormalForm& x, Subgraph lam);

// All prefixes of x, enumerated as order ideals of the dependence order.
// Throws ResourceError beyond the syllable-length cap.
std::vector<NormalForm> prefix_ideals(const NormalForm& x, int cap = 16);

// Visits the ideal bitmasks only (positions into x.syllables()); used where
// just supports are needed. Returns false if the cap is exceeded.
bool for_each_prefix_mask(const NormalForm& x, int cap,
                          const std::function<void(std::uint32_t)>& fn);

// Resource budget exceeded (ball too large, ideal cap, ...).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gp
