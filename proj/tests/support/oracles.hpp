#pragma once

// Brute-force oracles, independent of the library's reduction path: words are
// rewritten only by literal application of the three moves (drop identities,
// merge adjacent same-vertex syllables, swap adjacent commuting syllables).

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gp/coset.hpp"
#include "gp/word.hpp"

namespace gp::oracle {

using Word = std::vector<VertexElement>;

inline Word drop_identities(const DefiningGraph& g, const Word& w) {
  Word out;
  for (const auto& s : w)
    if (!g.spec(s.vertex).is_identity(s.payload)) out.push_back(s);
  return out;
}

// All words reachable from w by commutation swaps alone.
inline std::vector<Word> commutation_class(const DefiningGraph& g,
                                           const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Word cur = queue[q];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].vertex != cur[i + 1].vertex &&
          g.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return queue;
}

// Repeatedly searches the commutation class for a mergeable adjacent pair and
// applies it, until no sequence of moves shortens the word.
inline Word brute_reduce(const DefiningGraph& g, Word w) {
  w = drop_identities(g, w);
  for (;;) {
    bool merged = false;
    for (const Word& variant : commutation_class(g, w)) {
      for (std::size_t i = 0; i + 1 < variant.size() && !merged; ++i) {
        if (variant[i].vertex == variant[i + 1].vertex) {
          const auto& spec = g.spec(variant[i].vertex);
          Word next(variant.begin(), variant.begin() + i);
          const auto prod =
              spec.compose(variant[i].payload, variant[i + 1].payload);
          if (!spec.is_identity(prod))
            next.push_back({variant[i].vertex, prod});
          next.insert(next.end(), variant.begin() + i + 2, variant.end());
          w = next;
          merged = true;
        }
      }
      if (merged) break;
    }
    if (!merged) return w;
  }
}

// Lexicographically least (by vertex sequence) member of the reduced word's
// commutation class: an independent route to the canonical form.
inline Word brute_canonical(const DefiningGraph& g, Word w) {
  w = brute_reduce(g, std::move(w));
  Word best = w;
  auto vertex_seq_less = [](const Word& a, const Word& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].vertex != b[i].vertex) return a[i].vertex < b[i].vertex;
    return false;
  };
  for (const Word& variant : commutation_class(g, w))
    if (vertex_seq_less(variant, best)) best = variant;
  return best;
}

inline Word invert_word(const DefiningGraph& g, const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->vertex, g.spec(it->vertex).inverse(it->payload)});
  return out;
}

inline bool brute_equal(const DefiningGraph& g, Word u, const Word& v) {
  u.insert(u.end(), invert_word(g, v).begin(), invert_word(g, v).end());
  return brute_reduce(g, u).empty();
}

// Random scramble of a word by valid moves: commutation swaps, syllable
// splits, and inserted cancelling pairs. Stays in the same group element.
inline Word scramble(const DefiningGraph& g, Word w, std::mt19937& rng,
                     int steps) {
  for (int t = 0; t < steps; ++t) {
    switch (rng() % 3) {
      case 0: {  // commutation swap
        if (w.size() < 2) break;
        const std::size_t i = rng() % (w.size() - 1);
        if (w[i].vertex != w[i + 1].vertex &&
            g.adjacent(w[i].vertex, w[i + 1].vertex))
          std::swap(w[i], w[i + 1]);
        break;
      }
      case 1: {  // split a syllable in two
        if (w.empty()) break;
        const std::size_t i = rng() % w.size();
        const auto& spec = g.spec(w[i].vertex);
        const auto parts = spec.enumerate_nonidentity(3);
        const auto t1 = parts[rng() % parts.size()];
        const auto t2 = spec.compose(spec.inverse(t1), w[i].payload);
        Word next(w.begin(), w.begin() + i);
        next.push_back({w[i].vertex, t1});
        if (!spec.is_identity(t2)) next.push_back({w[i].vertex, t2});
        next.insert(next.end(), w.begin() + i + 1, w.end());
        w = next;
        break;
      }
      case 2: {  // insert s s^-1
        const VertexId v = rng() % g.vertex_count();
        const auto parts = g.spec(v).enumerate_nonidentity(3);
        const auto p = parts[rng() % parts.size()];
        const std::size_t i = rng() % (w.size() + 1);
        Word next(w.begin(), w.begin() + i);
        next.push_back({v, p});
        next.push_back({v, g.spec(v).inverse(p)});
        next.insert(next.end(), w.begin() + i, w.end());
        w = next;
        break;
      }
    }
  }
  return w;
}

// Exhaustive subgraph-metric oracle: minimal factorization into blocks with
// proper support, found by trying every prefix split.
inline int d_subgraph_brute(Subgraph lam, const NormalForm& z,
                            std::map<std::pair<std::uint32_t, std::string>,
                                     int>& memo) {
  if (z.is_identity()) return 0;
  const DefiningGraph& g = z.graph();
  if (lam.size() == 1)
    return static_cast<int>(
        g.spec(lam.vertices().front()).word_length(z.syllables()[0].payload));
  if (z.support().proper_subset_of(lam)) return 1;
  const auto key = std::make_pair(lam.mask(), z.text());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best = z.syllable_length();
  for (const NormalForm& p : prefix_ideals(z)) {
    if (p.is_identity() || !p.support().proper_subset_of(lam)) continue;
    const NormalForm rest = multiply(invert(p), z);
    if (rest.is_identity()) {
      best = std::min(best, 1);
      continue;
    }
    best = std::min(best, 1 + d_subgraph_brute(lam, rest, memo));
  }
  memo.emplace(key, best);
  return best;
}

inline int d_subgraph_brute(Subgraph lam, const NormalForm& x,
                            const NormalForm& y) {
  static std::map<std::pair<std::uint32_t, std::string>, int> memo;
  return d_subgraph_brute(lam, multiply(invert(x), y), memo);
}

}  // namespace gp::oracle
