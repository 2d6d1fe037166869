#pragma once

#include <optional>
#include <vector>

#include "gp/word.hpp"

namespace gp {

// Coset of a graphical subgroup, held by its unique representative with
// trivial lam-suffix.
struct Coset {
  NormalForm rep;
  Subgraph lam;

  static Coset canonical(const NormalForm& g, Subgraph lam);
  bool contains(const NormalForm& x) const;
  bool operator==(const Coset& o) const {
    return lam == o.lam && rep == o.rep;
  }
};

// Parallelism class [g lam], held by the unique representative with trivial
// st(lam)-suffix; class equality is plain comparison.
struct DomainClass {
  NormalForm rep;
  Subgraph lam;

  static DomainClass canonical(const NormalForm& g, Subgraph lam);
  Coset coset() const { return Coset{rep, lam}; }
  bool operator==(const DomainClass& o) const {
    return lam == o.lam && rep == o.rep;
  }
  std::size_t hash() const { return rep.hash() * 31 + lam.mask(); }
};

struct DomainClassHash {
  std::size_t operator()(const DomainClass& d) const { return d.hash(); }
};

enum class RelationTag { Equal, NestedInto, NestedFrom, Orthogonal, Transverse };

struct Relation {
  RelationTag tag;
  bool is_nested() const {
    return tag == RelationTag::NestedInto || tag == RelationTag::NestedFrom;
  }
};

// Relative projection of one domain into another, carried as one anchor gate
// image plus a sampled set of gate images; the proven diameter bound is 2.
struct RelProjection {
  NormalForm anchor;
  std::vector<NormalForm> samples;
  int claimed_diam = 2;
};

// Nearest-point projection onto the coset: rep * prefix_lam(rep^-1 x).
NormalForm gate(const Coset& target, const NormalForm& x);

int d_syl(const NormalForm& x, const NormalForm& y);
std::int64_t d_word(const NormalForm& x, const NormalForm& y);

// Subgraph distance within lam: minimal number of proper-support blocks,
// computed by memoized branching over full prefixes in lam minus a vertex;
// word length for single-vertex lam. Requires supp(x^-1 y) inside lam.
int d_subgraph(Subgraph lam, const NormalForm& x, const NormalForm& y);

NormalForm project(const DomainClass& domain, const NormalForm& x);
// d_subgraph between projections; the domain's hyperbolic-space distance.
int domain_distance(const DomainClass& domain, const NormalForm& x,
                    const NormalForm& y);

bool parallel(const NormalForm& g, const NormalForm& h, Subgraph lam);

// Decides g^-1 h in <st(lam)> * <st(om)> by maximal-prefix stripping; when
// the syllable length fits under the ideal cap the result is cross-checked
// against the exhaustive prefix-split oracle and a mismatch aborts loudly.
bool common_representative_exists(const NormalForm& g, Subgraph lam,
                                  const NormalForm& h, Subgraph om,
                                  bool* oracle_verified = nullptr);
// The common representative itself (nullopt when none exists).
std::optional<NormalForm> common_representative(const NormalForm& g,
                                                Subgraph lam,
                                                const NormalForm& h,
                                                Subgraph om);

Relation relate(const DomainClass& a, const DomainClass& b);

// Upward (source properly nested in target) or lateral (transverse) relative
// projection; domain error on orthogonal or equal domains.
RelProjection rel_projection(const DomainClass& source,
                             const DomainClass& target, int sample_radius,
                             int cap = 2);

// Container of small inside big: the class [a (lk(om) & lam)] at a common
// representative a. Requires small properly nested in big and a nonempty
// lk(om) & lam.
DomainClass container_candidate(const DomainClass& big,
                                const DomainClass& small);

// Mutual-representative element realizing the given coordinates on pairwise
// orthogonal domains: g lambda_1 ... lambda_n built by iterated suffix
// stripping.
NormalForm partial_realize(const std::vector<DomainClass>& domains,
                           const std::vector<NormalForm>& points);

}  // namespace gp
