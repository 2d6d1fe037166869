#include "gp/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gp {

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             std::vector<std::pair<VertexId, VertexId>> edges,
                             std::vector<VertexGroupSpec> specs)
    : names_(std::move(names)), specs_(std::move(specs)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (n > 32) throw std::invalid_argument("at most 32 vertices supported");
  if (static_cast<int>(specs_.size()) != n)
    throw std::invalid_argument("every vertex needs exactly one group spec");
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("duplicate vertex name");
  }
  adj_.assign(n, Subgraph{});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] = adj_[u].with(v);
    adj_[v] = adj_[v].with(u);
  }
  all_ = Subgraph::from_mask(n == 32 ? ~0u : (1u << n) - 1);
}

std::optional<VertexId> DefiningGraph::find_vertex(
    const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

void DefiningGraph::check_subgraph(Subgraph s) const {
  if (!s.subset_of(all_))
    throw std::invalid_argument("subgraph contains foreign vertices");
}

Subgraph DefiningGraph::link(Subgraph lam) const {
  check_subgraph(lam);
  Subgraph out = all_;
  for (VertexId v : lam.vertices()) out = out & adj_[v];
  return out - lam;
}

Subgraph DefiningGraph::star(Subgraph lam) const { return lam | link(lam); }

std::vector<Subgraph> DefiningGraph::join_decomposition(Subgraph lam) const {
  check_subgraph(lam);
  if (lam.empty())
    throw std::invalid_argument("join decomposition of the empty subgraph");
  // Connected components of the complement graph restricted to lam.
  std::vector<Subgraph> parts;
  Subgraph todo = lam;
  while (!todo.empty()) {
    VertexId seed = todo.vertices().front();
    Subgraph comp = Subgraph::single(seed);
    Subgraph frontier = comp;
    while (!frontier.empty()) {
      Subgraph next;
      for (VertexId v : frontier.vertices())
        next = next | ((lam - adj_[v]).without(v) - comp);
      comp = comp | next;
      frontier = next;
    }
    parts.push_back(comp);
    todo = todo - comp;
  }
  std::sort(parts.begin(), parts.end(),
            [](Subgraph a, Subgraph b) { return a.mask() < b.mask(); });
  return parts;
}

bool DefiningGraph::splits_as_join(Subgraph lam) const {
  return lam.size() >= 2 && join_decomposition(lam).size() >= 2;
}

bool DefiningGraph::is_complete(Subgraph lam) const {
  check_subgraph(lam);
  for (VertexId v : lam.vertices())
    if (!(lam.without(v)).subset_of(adj_[v])) return false;
  return true;
}

std::vector<std::array<VertexId, 4>> DefiningGraph::induced_squares() const {
  std::vector<std::array<VertexId, 4>> out;
  const int n = vertex_count();
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = v + 1; w < n; ++w) {
      if (adjacent(v, w)) continue;
      for (VertexId x = v + 1; x < n; ++x) {
        if (x == w || !adjacent(v, x) || !adjacent(w, x)) continue;
        for (VertexId y = x + 1; y < n; ++y) {
          if (y == w || adjacent(x, y)) continue;
          if (adjacent(v, y) && adjacent(w, y))
            out.push_back({v, x, w, y});
        }
      }
    }
  return out;
}

bool DefiningGraph::is_square_complete(Subgraph lam) const {
  check_subgraph(lam);
  for (const auto& sq : induced_squares()) {
    const Subgraph whole = Subgraph::single(sq[0])
                               .with(sq[1])
                               .with(sq[2])
                               .with(sq[3]);
    const bool shares_pair =
        (lam.contains(sq[0]) && lam.contains(sq[2])) ||
        (lam.contains(sq[1]) && lam.contains(sq[3]));
    if (shares_pair && !whole.subset_of(lam)) return false;
  }
  return true;
}

std::vector<Subgraph> DefiningGraph::minsquare_subgraphs() const {
  const auto squares = induced_squares();
  std::vector<Subgraph> closures;
  for (const auto& seed : squares) {
    Subgraph cl =
        Subgraph::single(seed[0]).with(seed[1]).with(seed[2]).with(seed[3]);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& sq : squares) {
        const Subgraph whole =
            Subgraph::single(sq[0]).with(sq[1]).with(sq[2]).with(sq[3]);
        if (whole.subset_of(cl)) continue;
        if ((cl.contains(sq[0]) && cl.contains(sq[2])) ||
            (cl.contains(sq[1]) && cl.contains(sq[3]))) {
          cl = cl | whole;
          grew = true;
        }
      }
    }
    if (std::find(closures.begin(), closures.end(), cl) == closures.end())
      closures.push_back(cl);
  }
  // Keep the set-inclusion minimal closures.
  std::vector<Subgraph> out;
  for (Subgraph c : closures) {
    bool minimal = true;
    for (Subgraph o : closures)
      if (o != c && o.proper_subset_of(c)) minimal = false;
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](Subgraph a, Subgraph b) { return a.mask() < b.mask(); });
  return out;
}

std::optional<std::pair<Subgraph, Subgraph>>
DefiningGraph::minsquare_join_split() const {
  if (!splits_as_join(all_)) return std::nullopt;
  const auto minsquares = minsquare_subgraphs();
  if (minsquares.empty()) return std::nullopt;
  Subgraph covered;
  for (Subgraph m : minsquares) covered = covered | m;
  if (covered == all_) return std::nullopt;  // nothing proper to split off
  Subgraph part1;
  for (Subgraph part : join_decomposition(all_))
    if (!(part & covered).empty()) part1 = part1 | part;
  const Subgraph part2 = all_ - part1;
  if (part2.empty() || !is_complete(part2)) return std::nullopt;
  return std::make_pair(part1, part2);
}

MeierVerdict DefiningGraph::meier_hyperbolic() const {
  MeierVerdict verdict;
  Subgraph infinite;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (!spec(v).is_finite()) infinite = infinite.with(v);
  const Subgraph finite = all_ - infinite;

  // (i) no edge joins two infinite vertices.
  for (VertexId v : infinite.vertices())
    for (VertexId w : (adj_[v] & infinite).vertices())
      if (v < w) {
        verdict.violated_clause = 1;
        verdict.witness = "edge " + names_[v] + " - " + names_[w];
        return verdict;
      }
  // (ii) every infinite vertex has a complete link.
  for (VertexId v : infinite.vertices())
    if (!is_complete(link(Subgraph::single(v)))) {
      verdict.violated_clause = 2;
      verdict.witness = "vertex " + names_[v] + " has incomplete link";
      return verdict;
    }
  // (iii) the finite part has no induced square.
  for (const auto& sq : induced_squares()) {
    const Subgraph whole =
        Subgraph::single(sq[0]).with(sq[1]).with(sq[2]).with(sq[3]);
    if (whole.subset_of(finite)) {
      verdict.violated_clause = 3;
      verdict.witness = "square " + names_[sq[0]] + "," + names_[sq[1]] + "," +
                        names_[sq[2]] + "," + names_[sq[3]];
      return verdict;
    }
  }
  verdict.hyperbolic = true;
  return verdict;
}

bool DefiningGraph::is_virtually_cyclic() const {
  const int n = vertex_count();
  // Single Z vertex.
  if (n == 1 && spec(0).kind() == VertexGroupKind::IntCyclic) return true;
  // The whole group is finite: complete graph, all vertex groups finite.
  bool all_finite = true;
  for (VertexId v = 0; v < n; ++v)
    if (!spec(v).is_finite()) all_finite = false;
  if (all_finite && is_complete(all_)) return true;
  // Two non-adjacent Z/2 vertices, possibly joined with a complete graph of
  // finite vertex groups.
  auto is_z2 = [&](VertexId v) {
    return spec(v).kind() == VertexGroupKind::Cyclic &&
           spec(v).order() == std::optional<std::int64_t>(2);
  };
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (adjacent(u, v) || !is_z2(u) || !is_z2(v)) continue;
      const Subgraph rest = all_.without(u).without(v);
      if (rest.empty()) return true;
      bool ok = is_complete(rest);
      for (VertexId w : rest.vertices()) {
        if (!spec(w).is_finite()) ok = false;
        if (!adjacent(w, u) || !adjacent(w, v)) ok = false;
      }
      if (ok) return true;
    }
  return false;
}

std::string DefiningGraph::subgraph_text(Subgraph s) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.vertices()) {
    if (!first) out += ",";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

}  // namespace gp
