#include "gp/word.hpp"

#include <functional>

namespace gp {

namespace {

// Appends s to the reduced sequence out, keeping it reduced. Scans from the
// right across syllables commuting with s; a visible same-vertex syllable is
// merged (and removed when the product is the identity, re-pushing the tail
// so cascading cancellations resolve).
void push_reduced(const DefiningGraph& g, std::vector<VertexElement>& out,
                  VertexElement s) {
  const auto& spec = g.spec(s.vertex);
  spec.check_payload(s.payload);
  if (spec.is_identity(s.payload)) return;
  int j = static_cast<int>(out.size()) - 1;
  while (j >= 0 && g.adjacent(out[j].vertex, s.vertex)) --j;
  if (j >= 0 && out[j].vertex == s.vertex) {
    const std::int64_t merged = spec.compose(out[j].payload, s.payload);
    if (spec.is_identity(merged)) {
      std::vector<VertexElement> tail(out.begin() + j + 1, out.end());
      out.erase(out.begin() + j, out.end());
      for (const VertexElement& t : tail) push_reduced(g, out, t);
    } else {
      out[j].payload = merged;
    }
  } else {
    out.push_back(s);
  }
}

// i < j are dependent when they cannot be swapped by a commutation move.
bool dependent(const DefiningGraph& g, VertexId u, VertexId v) {
  return u == v || !g.adjacent(u, v);
}

// Unique greedy linearization of the dependence order: repeatedly emit the
// ready syllable with the smallest vertex id. Input must be reduced.
std::vector<VertexElement> canonicalize(const DefiningGraph& g,
                                        std::vector<VertexElement> syl) {
  const int n = static_cast<int>(syl.size());
  if (n <= 1) return syl;
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dependent(g, syl[i].vertex, syl[j].vertex)) ++indeg[j];
  std::vector<VertexElement> out;
  out.reserve(n);
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && indeg[i] == 0 &&
          (best < 0 || syl[i].vertex < syl[best].vertex))
        best = i;
    done[best] = true;
    out.push_back(syl[best]);
    for (int j = best + 1; j < n; ++j)
      if (!done[j] && dependent(g, syl[best].vertex, syl[j].vertex))
        --indeg[j];
  }
  return out;
}

}  // namespace

NormalForm NormalForm::identity(const DefiningGraph& g) {
  return NormalForm(g);
}

NormalForm NormalForm::syllable(const DefiningGraph& g, VertexElement s) {
  return reduce(g, std::span<const VertexElement>(&s, 1));
}

NormalForm NormalForm::reduce(const DefiningGraph& g,
                              std::span<const VertexElement> raw) {
  NormalForm nf(g);
  for (const VertexElement& s : raw) {
    if (s.vertex < 0 || s.vertex >= g.vertex_count())
      throw std::invalid_argument("syllable at foreign vertex");
    push_reduced(g, nf.syl_, s);
  }
  nf.syl_ = canonicalize(g, std::move(nf.syl_));
  return nf;
}

std::int64_t NormalForm::word_length() const {
  std::int64_t total = 0;
  for (const VertexElement& s : syl_)
    total += graph_->spec(s.vertex).word_length(s.payload);
  return total;
}

Subgraph NormalForm::support() const {
  Subgraph out;
  for (const VertexElement& s : syl_) out = out.with(s.vertex);
  return out;
}

std::size_t NormalForm::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const VertexElement& s : syl_) {
    mix(static_cast<std::uint64_t>(s.vertex) + 1);
    mix(static_cast<std::uint64_t>(s.payload));
  }
  return h;
}

std::string NormalForm::text() const {
  if (syl_.empty()) return "e";
  std::string out;
  for (const VertexElement& s : syl_) {
    if (!out.empty()) out += " ";
    out += graph_->vertex_name(s.vertex);
    if (s.payload != 1) out += "^" + std::to_string(s.payload);
  }
  return out;
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  if (&x.graph() != &y.graph())
    throw std::invalid_argument("operands live in different graph products");
  NormalForm out = x;
  for (const VertexElement& s : y.syl_) push_reduced(*out.graph_, out.syl_, s);
  out.syl_ = canonicalize(*out.graph_, std::move(out.syl_));
  return out;
}

NormalForm invert(const NormalForm& x) {
  NormalForm out(x.graph());
  out.syl_.reserve(x.syl_.size());
  for (auto it = x.syl_.rbegin(); it != x.syl_.rend(); ++it)
    out.syl_.push_back(
        {it->vertex, x.graph().spec(it->vertex).inverse(it->payload)});
  out.syl_ = canonicalize(x.graph(), std::move(out.syl_));
  return out;
}

NormalForm prefix_in(const NormalForm& x, Subgraph lam) {
  x.graph().check_subgraph(lam);
  const DefiningGraph& g = x.graph();
  std::vector<VertexElement> collected;
  Subgraph blocked;
  for (const VertexElement& s : x.syllables()) {
    const bool visible = blocked.subset_of(g.adjacency(s.vertex));
    if (lam.contains(s.vertex) && visible) {
      collected.push_back(s);
    } else {
      blocked = blocked.with(s.vertex);
    }
  }
  return NormalForm::reduce(g, collected);
}

NormalForm suffix_in(const NormalForm& x, Subgraph lam) {
  return invert(prefix_in(invert(x), lam));
}

bool for_each_prefix_mask(const NormalForm& x, int cap,
                          const std::function<void(std::uint32_t)>& fn) {
  const int n = x.syllable_length();
  if (n > cap) return false;
  const DefiningGraph& g = x.graph();
  const auto& syl = x.syllables();
  // preds[j]: positions i < j that j depends on.
  std::vector<std::uint32_t> preds(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (dependent(g, syl[i].vertex, syl[j].vertex))
        preds[j] |= (1u << i);
  std::function<void(int, std::uint32_t)> rec = [&](int i,
                                                    std::uint32_t mask) {
    if (i == n) {
      fn(mask);
      return;
    }
    rec(i + 1, mask);  // exclude syllable i (and anything depending on it)
    if ((preds[i] & ~mask) == 0) rec(i + 1, mask | (1u << i));
  };
  // The recursion above visits ideals only: including i requires all of its
  // dependence predecessors, and exclusion never strands a successor because
  // successors check their predecessor set themselves.
  rec(0, 0);
  return true;
}

std::vector<NormalForm> prefix_ideals(const NormalForm& x, int cap) {
  const int n = x.syllable_length();
  if (n > cap)
    throw ResourceError("prefix enumeration beyond the syllable-length cap");
  std::vector<NormalForm> out;
  const auto& syl = x.syllables();
  for_each_prefix_mask(x, cap, [&](std::uint32_t mask) {
    std::vector<VertexElement> sub;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) sub.push_back(syl[i]);
    out.push_back(NormalForm::reduce(x.graph(), sub));
  });
  return out;
}

}  // namespace gp
