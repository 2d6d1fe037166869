#include "gp/ball.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace gp {

SylBall enumerate_ball(const DefiningGraph& g, const NormalForm& center,
                       int radius, int cap, Subgraph allowed,
                       std::size_t budget) {
  if (radius < 0) throw std::invalid_argument("negative ball radius");
  g.check_subgraph(allowed);
  SylBall ball(center);
  ball.radius = radius;
  ball.cap = cap;
  ball.allowed = allowed;

  std::vector<std::pair<VertexId, std::int64_t>> moves;
  for (VertexId v : allowed.vertices()) {
    if (!g.spec(v).is_finite()) ball.int_truncated = true;
    for (std::int64_t p : g.spec(v).enumerate_nonidentity(cap))
      moves.push_back({v, p});
  }

  ball.elems.push_back(center);
  ball.dist.push_back(0);
  ball.index.emplace(center, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    if (ball.dist[i] == radius) continue;
    for (const auto& [v, p] : moves) {
      const NormalForm y =
          multiply(ball.elems[i], NormalForm::syllable(g, {v, p}));
      if (ball.index.contains(y)) continue;
      if (ball.elems.size() >= budget)
        throw ResourceError("ball budget exceeded at " +
                            std::to_string(ball.elems.size()) + " elements");
      ball.index.emplace(y, static_cast<int>(ball.elems.size()));
      ball.elems.push_back(y);
      ball.dist.push_back(ball.dist[i] + 1);
      queue.push_back(static_cast<int>(ball.elems.size()) - 1);
    }
  }

  // Collect edges: single-syllable differences between ball members.
  std::map<std::pair<int, int>, VertexId> edge_set;
  for (int i = 0; i < static_cast<int>(ball.elems.size()); ++i) {
    for (const auto& [v, p] : moves) {
      const NormalForm y =
          multiply(ball.elems[i], NormalForm::syllable(g, {v, p}));
      const int j = ball.find(y);
      if (j < 0 || j == i) continue;
      edge_set.emplace(std::minmax(i, j), v);
    }
  }
  for (const auto& [e, v] : edge_set) {
    ball.edges.push_back(e);
    ball.edge_label.push_back(v);
  }
  return ball;
}

SylBall enumerate_ball(const DefiningGraph& g, const NormalForm& center,
                       int radius, int cap, std::size_t budget) {
  return enumerate_ball(g, center, radius, cap, g.all_vertices(), budget);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Hyperplane> hyperplanes(const SylBall& ball) {
  const DefiningGraph& g = ball.center.graph();
  const int m = static_cast<int>(ball.edges.size());
  UnionFind uf(m);

  std::map<std::pair<int, int>, int> edge_of;
  for (int e = 0; e < m; ++e) edge_of.emplace(ball.edges[e], e);
  auto lookup = [&](int i, int j) -> int {
    auto it = edge_of.find(std::minmax(i, j));
    return it == edge_of.end() ? -1 : it->second;
  };

  // Triangle rule: all edges inside one vertex-group coset merge.
  std::map<std::pair<std::uint32_t, std::size_t>, int> coset_first;
  std::vector<std::string> coset_text(m);
  for (int e = 0; e < m; ++e) {
    const VertexId v = ball.edge_label[e];
    const NormalForm& x = ball.elems[ball.edges[e].first];
    const NormalForm rep =
        multiply(x, invert(suffix_in(x, Subgraph::single(v))));
    const auto key = std::make_pair(
        (static_cast<std::uint32_t>(v) << 1) ^ 0u, rep.hash());
    auto [it, fresh] = coset_first.emplace(key, e);
    if (!fresh) uf.merge(it->second, e);
  }

  // Square rule: translating an edge by a commuting syllable stays in the
  // same class (opposite sides of a square).
  for (int e = 0; e < m; ++e) {
    const VertexId v = ball.edge_label[e];
    const auto [i, j] = ball.edges[e];
    for (VertexId w : g.adjacency(v).vertices()) {
      if (!ball.allowed.contains(w)) continue;
      for (std::int64_t p : g.spec(w).enumerate_nonidentity(ball.cap)) {
        const NormalForm t = NormalForm::syllable(g, {w, p});
        const int i2 = ball.find(multiply(ball.elems[i], t));
        const int j2 = ball.find(multiply(ball.elems[j], t));
        if (i2 < 0 || j2 < 0) continue;
        const int e2 = lookup(i2, j2);
        if (e2 >= 0) uf.merge(e, e2);
      }
    }
  }

  std::map<int, Hyperplane> classes;
  for (int e = 0; e < m; ++e) {
    const int root = uf.find(e);
    auto [it, fresh] = classes.emplace(root, Hyperplane{});
    if (fresh) {
      it->second.label = ball.edge_label[e];
      it->second.id_edge = root;
    }
    it->second.dual_edges.push_back(e);
  }
  std::vector<Hyperplane> out;
  out.reserve(classes.size());
  for (auto& [root, h] : classes) out.push_back(std::move(h));
  return out;
}

SeparationResult separates(const Hyperplane& h, const SylBall& ball,
                           const NormalForm& x, const NormalForm& y) {
  SeparationResult res;
  const int ix = ball.find(x);
  const int iy = ball.find(y);
  if (ix < 0 || iy < 0)
    throw std::invalid_argument("separation query outside the ball");
  res.trusted =
      ball.dist[ix] * 2 <= ball.radius && ball.dist[iy] * 2 <= ball.radius;
  if (ix == iy) return res;

  std::vector<char> removed(ball.edges.size(), 0);
  for (int e : h.dual_edges) removed[e] = 1;
  std::vector<std::vector<int>> adj(ball.elems.size());
  for (int e = 0; e < static_cast<int>(ball.edges.size()); ++e) {
    if (removed[e]) continue;
    adj[ball.edges[e].first].push_back(ball.edges[e].second);
    adj[ball.edges[e].second].push_back(ball.edges[e].first);
  }
  std::vector<char> seen(ball.elems.size(), 0);
  std::deque<int> queue{ix};
  seen[ix] = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : adj[i])
      if (!seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
  }
  res.separated = !seen[iy];
  return res;
}

std::string ball_to_dot(const SylBall& ball,
                        const std::vector<Hyperplane>& planes) {
  static const char* kPalette[] = {"crimson",   "royalblue", "forestgreen",
                                   "darkorange", "purple",    "teal",
                                   "goldenrod", "deeppink",  "saddlebrown",
                                   "slategray"};
  std::vector<int> edge_class(ball.edges.size(), -1);
  for (int c = 0; c < static_cast<int>(planes.size()); ++c)
    for (int e : planes[c].dual_edges) edge_class[e] = c;
  std::ostringstream out;
  out << "graph ball {\n  node [shape=ellipse fontsize=10];\n";
  for (const NormalForm& x : ball.elems)
    out << "  \"" << x.text() << "\";\n";
  for (int e = 0; e < static_cast<int>(ball.edges.size()); ++e) {
    const auto [i, j] = ball.edges[e];
    const int c = edge_class[e];
    out << "  \"" << ball.elems[i].text() << "\" -- \""
        << ball.elems[j].text() << "\" [color=" << kPalette[c >= 0 ? c % 10 : 0]
        << " label=\"H" << c << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gp
