#include "gp/electrify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gp {

namespace {

void require_finite_groups(const DefiningGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.spec(v).is_finite())
      throw std::invalid_argument(
          "electrification requires finite vertex groups");
}

}  // namespace

ElectrifiedBall electrify(const SylBall& ball) {
  const DefiningGraph& g = ball.center.graph();
  require_finite_groups(g);
  ElectrifiedBall out{ball, {}, {}};
  const auto minsquares = g.minsquare_subgraphs();
  const int n = static_cast<int>(ball.elems.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : ball.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Subgraph supp =
          multiply(invert(ball.elems[i]), ball.elems[j]).support();
      if (supp.size() <= 1) continue;  // already a syllable edge (or equal)
      const bool coned = std::any_of(
          minsquares.begin(), minsquares.end(),
          [&](Subgraph m) { return supp.subset_of(m); });
      if (coned) {
        out.extra_edges.push_back({i, j});
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  out.edist.assign(n, -1);
  out.edist[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : adj[i])
      if (out.edist[j] < 0) {
        out.edist[j] = out.edist[i] + 1;
        queue.push_back(j);
      }
  }
  return out;
}

BoundednessVerdict classify_boundedness(const DefiningGraph& g) {
  require_finite_groups(g);
  BoundednessVerdict v;
  const Subgraph all = g.all_vertices();
  if (g.is_complete(all)) {
    v.bounded = true;
    v.kind = BoundednessKind::Complete;
    v.text = "bounded: complete";
    return v;
  }
  const auto minsquares = g.minsquare_subgraphs();
  if (std::find(minsquares.begin(), minsquares.end(), all) !=
      minsquares.end()) {
    v.bounded = true;
    v.kind = BoundednessKind::Minsquare;
    v.text = "bounded: minsquare";
    return v;
  }
  // Join of a minsquare subgraph and a complete graph: one of the computed
  // minsquare subgraphs must be fully joined to a complete remainder.
  for (Subgraph m : minsquares) {
    const Subgraph rest = all - m;
    if (rest.empty() || !g.is_complete(rest)) continue;
    bool full_join = true;
    for (VertexId u : m.vertices())
      for (VertexId w : rest.vertices())
        if (!g.adjacent(u, w)) full_join = false;
    if (full_join) {
      v.bounded = true;
      v.kind = BoundednessKind::MinsquareJoinComplete;
      v.minsquare_part = m;
      v.complete_part = rest;
      v.text = "bounded: join of minsquare " + g.subgraph_text(m) +
               " and complete " + g.subgraph_text(rest);
      return v;
    }
  }
  v.text = "unbounded";
  return v;
}

QuasiLineVerdict classify_quasiline(const DefiningGraph& g) {
  require_finite_groups(g);
  QuasiLineVerdict v;
  auto is_z2 = [&](VertexId w) {
    return g.spec(w).kind() == VertexGroupKind::Cyclic &&
           g.spec(w).order() == std::optional<std::int64_t>(2);
  };
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n && !v.quasi_line; ++a)
    for (VertexId b = a + 1; b < n && !v.quasi_line; ++b) {
      if (g.adjacent(a, b) || !is_z2(a) || !is_z2(b)) continue;
      const Subgraph rest = g.all_vertices().without(a).without(b);
      bool ok = g.is_complete(rest);
      for (VertexId w : rest.vertices())
        if (!g.adjacent(w, a) || !g.adjacent(w, b)) ok = false;
      if (ok) {
        v.quasi_line = true;
        v.text = "quasi-line: infinite dihedral factor on {" +
                 g.vertex_name(a) + "," + g.vertex_name(b) + "}";
      }
    }
  if (!v.quasi_line) v.text = "not a quasi-line";
  return v;
}

std::vector<int> electrified_growth(const DefiningGraph& g, int radius) {
  require_finite_groups(g);
  const auto ball =
      enumerate_ball(g, NormalForm::identity(g), radius, 1, 400'000);
  const auto eball = electrify(ball);
  int reach = 0;
  for (int d : eball.edist) reach = std::max(reach, d);
  std::vector<int> out;
  for (int r = 1; r <= radius; ++r) out.push_back(std::min(r, reach));
  return out;
}

std::string electrified_to_dot(const ElectrifiedBall& ball) {
  std::ostringstream out;
  out << "graph electrified {\n  node [shape=ellipse fontsize=10];\n";
  for (const NormalForm& x : ball.base.elems)
    out << "  \"" << x.text() << "\";\n";
  for (auto [i, j] : ball.base.edges)
    out << "  \"" << ball.base.elems[i].text() << "\" -- \""
        << ball.base.elems[j].text() << "\";\n";
  for (auto [i, j] : ball.extra_edges)
    out << "  \"" << ball.base.elems[i].text() << "\" -- \""
        << ball.base.elems[j].text() << "\" [style=dashed color=red];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gp
