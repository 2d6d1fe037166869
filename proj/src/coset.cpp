#include "gp/coset.hpp"

#include <algorithm>
#include <unordered_map>

#include "gp/ball.hpp"

namespace gp {

Coset Coset::canonical(const NormalForm& g, Subgraph lam) {
  g.graph().check_subgraph(lam);
  return Coset{multiply(g, invert(suffix_in(g, lam))), lam};
}

bool Coset::contains(const NormalForm& x) const {
  return multiply(invert(rep), x).support().subset_of(lam);
}

DomainClass DomainClass::canonical(const NormalForm& g, Subgraph lam) {
  if (lam.empty()) throw std::invalid_argument("domain of empty subgraph");
  g.graph().check_subgraph(lam);
  const Subgraph st = g.graph().star(lam);
  return DomainClass{multiply(g, invert(suffix_in(g, st))), lam};
}

NormalForm gate(const Coset& target, const NormalForm& x) {
  return multiply(target.rep,
                  prefix_in(multiply(invert(target.rep), x), target.lam));
}

int d_syl(const NormalForm& x, const NormalForm& y) {
  return multiply(invert(x), y).syllable_length();
}

std::int64_t d_word(const NormalForm& x, const NormalForm& y) {
  return multiply(invert(x), y).word_length();
}

namespace {

struct DsubKey {
  std::uint32_t lam;
  std::size_t zhash;
  std::string ztext;
  bool operator==(const DsubKey& o) const {
    return lam == o.lam && zhash == o.zhash && ztext == o.ztext;
  }
};

struct DsubKeyHash {
  std::size_t operator()(const DsubKey& k) const {
    return k.zhash * 1000003u + k.lam;
  }
};

int d_subgraph_rec(
    Subgraph lam, const NormalForm& z,
    std::unordered_map<DsubKey, int, DsubKeyHash>& memo) {
  if (z.is_identity()) return 0;
  const DefiningGraph& g = z.graph();
  if (lam.size() == 1)
    return static_cast<int>(
        g.spec(lam.vertices().front()).word_length(z.syllables()[0].payload));
  if (z.support().proper_subset_of(lam)) return 1;
  const DsubKey key{lam.mask(), z.hash(), z.text()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best = z.syllable_length();  // one block per syllable always works
  for (VertexId v : lam.vertices()) {
    const NormalForm head = prefix_in(z, lam.without(v));
    if (head.is_identity()) continue;
    const NormalForm rest = multiply(invert(head), z);
    const int cand = 1 + (rest.is_identity()
                              ? 0
                              : d_subgraph_rec(lam, rest, memo));
    best = std::min(best, cand);
  }
  memo.emplace(key, best);
  return best;
}

}  // namespace

int d_subgraph(Subgraph lam, const NormalForm& x, const NormalForm& y) {
  const NormalForm z = multiply(invert(x), y);
  if (!z.support().subset_of(lam))
    throw std::invalid_argument("difference not supported in the subgraph");
  thread_local std::unordered_map<DsubKey, int, DsubKeyHash> memo;
  if (memo.size() > 2'000'000) memo.clear();
  return d_subgraph_rec(lam, z, memo);
}

NormalForm project(const DomainClass& domain, const NormalForm& x) {
  return gate(domain.coset(), x);
}

int domain_distance(const DomainClass& domain, const NormalForm& x,
                    const NormalForm& y) {
  return d_subgraph(domain.lam, project(domain, x), project(domain, y));
}

bool parallel(const NormalForm& g, const NormalForm& h, Subgraph lam) {
  return multiply(invert(g), h).support().subset_of(g.graph().star(lam));
}

bool common_representative_exists(const NormalForm& g, Subgraph lam,
                                  const NormalForm& h, Subgraph om,
                                  bool* oracle_verified) {
  const DefiningGraph& graph = g.graph();
  const Subgraph st_lam = graph.star(lam);
  const Subgraph st_om = graph.star(om);
  const NormalForm z = multiply(invert(g), h);
  const NormalForm head = prefix_in(z, st_lam);
  const NormalForm rest = multiply(invert(head), z);
  const bool strip_answer = rest.support().subset_of(st_om);

  constexpr int kIdealCap = 16;
  bool verified = false;
  if (z.syllable_length() <= kIdealCap) {
    bool oracle_answer = false;
    const auto& syl = z.syllables();
    Subgraph total;
    for (const VertexElement& s : syl) total = total.with(s.vertex);
    for_each_prefix_mask(z, kIdealCap, [&](std::uint32_t mask) {
      if (oracle_answer) return;
      Subgraph head_supp, tail_supp;
      for (int i = 0; i < static_cast<int>(syl.size()); ++i) {
        if ((mask >> i) & 1u)
          head_supp = head_supp.with(syl[i].vertex);
        else
          tail_supp = tail_supp.with(syl[i].vertex);
      }
      if (head_supp.subset_of(st_lam) && tail_supp.subset_of(st_om))
        oracle_answer = true;
    });
    if (oracle_answer != strip_answer)
      throw std::logic_error(
          "double-coset strip disagrees with the prefix-split oracle on " +
          z.text());
    verified = true;
  }
  if (oracle_verified) *oracle_verified = verified;
  return strip_answer;
}

std::optional<NormalForm> common_representative(const NormalForm& g,
                                                Subgraph lam,
                                                const NormalForm& h,
                                                Subgraph om) {
  if (!common_representative_exists(g, lam, h, om)) return std::nullopt;
  const NormalForm z = multiply(invert(g), h);
  const NormalForm head = prefix_in(z, g.graph().star(lam));
  return multiply(g, head);
}

Relation relate(const DomainClass& a, const DomainClass& b) {
  if (a == b) return Relation{RelationTag::Equal};
  const DefiningGraph& g = a.rep.graph();
  if (a.lam.subset_of(b.lam) &&
      common_representative_exists(a.rep, a.lam, b.rep, b.lam))
    return Relation{RelationTag::NestedInto};
  if (b.lam.subset_of(a.lam) &&
      common_representative_exists(b.rep, b.lam, a.rep, a.lam))
    return Relation{RelationTag::NestedFrom};
  if (a.lam.subset_of(g.link(b.lam)) &&
      common_representative_exists(a.rep, a.lam, b.rep, b.lam))
    return Relation{RelationTag::Orthogonal};
  return Relation{RelationTag::Transverse};
}

RelProjection rel_projection(const DomainClass& source,
                             const DomainClass& target, int sample_radius,
                             int cap) {
  const Relation rel = relate(source, target);
  if (rel.tag == RelationTag::Equal || rel.tag == RelationTag::Orthogonal)
    throw std::invalid_argument(
        "relative projection undefined for equal or orthogonal domains");
  if (rel.tag == RelationTag::NestedFrom)
    throw std::invalid_argument(
        "relative projection points from the nested domain upwards");
  RelProjection out{project(target, source.rep), {}, 2};
  const DefiningGraph& g = source.rep.graph();
  const Subgraph st = g.star(source.lam);
  const SylBall star_ball =
      enumerate_ball(g, source.rep, sample_radius, cap, st);
  std::vector<NormalForm> samples;
  for (const NormalForm& w : star_ball.elems) {
    NormalForm p = project(target, w);
    if (std::find(samples.begin(), samples.end(), p) == samples.end())
      samples.push_back(std::move(p));
  }
  out.samples = std::move(samples);
  return out;
}

DomainClass container_candidate(const DomainClass& big,
                                const DomainClass& small) {
  if (relate(small, big).tag != RelationTag::NestedInto)
    throw std::invalid_argument(
        "container requires the small domain properly nested in the big one");
  const DefiningGraph& g = big.rep.graph();
  const Subgraph c = g.link(small.lam) & big.lam;
  if (c.empty())
    throw std::invalid_argument(
        "no orthogonal domain exists inside the big domain");
  const auto a = common_representative(big.rep, big.lam, small.rep, small.lam);
  if (!a)
    throw std::logic_error("nested domains without a common representative");
  return DomainClass::canonical(*a, c);
}

NormalForm partial_realize(const std::vector<DomainClass>& domains,
                           const std::vector<NormalForm>& points) {
  if (domains.size() != points.size())
    throw std::invalid_argument("one point per domain required");
  if (domains.empty())
    throw std::invalid_argument("partial realization needs a graph context");
  const DefiningGraph& g = domains.front().rep.graph();
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (!domains[i].coset().contains(points[i]))
      throw std::invalid_argument("point outside its domain's coset");
    for (std::size_t j = i + 1; j < domains.size(); ++j)
      if (relate(domains[i], domains[j]).tag != RelationTag::Orthogonal)
        throw std::invalid_argument("domains must be pairwise orthogonal");
  }
  // Mutual representative by iterated shortest-prefix extraction: keep the
  // shortest prefix of the next representative whose complement lies in the
  // next star subgroup.
  NormalForm rep = domains.front().rep;
  for (std::size_t m = 1; m < domains.size(); ++m) {
    const Subgraph st = g.star(domains[m].lam);
    const NormalForm k = multiply(invert(rep), domains[m].rep);
    const NormalForm h = multiply(k, invert(suffix_in(k, st)));
    rep = multiply(rep, h);
  }
  for (const DomainClass& d : domains)
    if (!parallel(rep, d.rep, d.lam))
      throw std::logic_error("mutual representative construction failed");
  NormalForm x = rep;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const NormalForm gi = gate(Coset::canonical(rep, domains[i].lam),
                               points[i]);
    x = multiply(x, multiply(invert(rep), gi));
  }
  return x;
}

}  // namespace gp
