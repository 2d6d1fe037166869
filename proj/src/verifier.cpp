#include "gp/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace gp {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

std::string pair_witness(const NormalForm& x, const NormalForm& y) {
  return "x=\"" + x.text() + "\" y=\"" + y.text() + "\"";
}

std::string domain_witness(const DefiningGraph& g, const DomainClass& d) {
  return "[" + d.rep.text() + ";" + g.subgraph_text(d.lam) + "]";
}

// C-graph on the enumerated part of a coset: a syllable ball inside the
// coset with edges for proper-support differences (word-metric generator
// steps when the subgraph is a single vertex).
struct CosetCGraph {
  std::vector<NormalForm> nodes;
  std::unordered_map<NormalForm, int, NormalFormHash> index;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> dist;

  int find(const NormalForm& x) const {
    auto it = index.find(x);
    return it == index.end() ? -1 : it->second;
  }
};

CosetCGraph build_cgraph(const DefiningGraph& g, const Coset& coset,
                         int radius, int cap, std::size_t budget) {
  CosetCGraph cg;
  const SylBall ball =
      enumerate_ball(g, coset.rep, radius, cap, coset.lam, budget);
  cg.nodes = ball.elems;
  cg.index = ball.index;
  const int n = static_cast<int>(cg.nodes.size());
  cg.adj.assign(n, {});
  const bool single = coset.lam.size() == 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const NormalForm z = multiply(invert(cg.nodes[i]), cg.nodes[j]);
      bool edge = false;
      if (single)
        edge = z.syllable_length() == 1 &&
               g.spec(z.syllables()[0].vertex).word_length(
                   z.syllables()[0].payload) == 1;
      else
        edge = !z.is_identity() && z.support().proper_subset_of(coset.lam);
      if (edge) {
        cg.adj[i].push_back(j);
        cg.adj[j].push_back(i);
      }
    }
  cg.dist.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& d = cg.dist[s];
    d[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : cg.adj[i])
        if (d[j] < 0) {
          d[j] = d[i] + 1;
          queue.push_back(j);
        }
    }
  }
  return cg;
}

// One geodesic between two nodes, with seeded tie-breaking.
std::vector<int> cgraph_geodesic(const CosetCGraph& cg, int from, int to,
                                 std::mt19937_64& rng) {
  if (cg.dist[from][to] < 0)
    throw std::logic_error("geodesic endpoints disconnected in coset graph");
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    std::vector<int> next;
    for (int nb : cg.adj[cur])
      if (cg.dist[nb][to] == cg.dist[cur][to] - 1) next.push_back(nb);
    cur = next[rng() % next.size()];
    path.push_back(cur);
  }
  return path;
}

struct RelationMatrix {
  std::vector<RelationTag> tags;
  int n = 0;
  RelationTag at(int a, int b) const {
    return tags[static_cast<std::size_t>(a) * n + b];
  }
};

RelationMatrix relate_all(const std::vector<DomainClass>& domains) {
  RelationMatrix m;
  m.n = static_cast<int>(domains.size());
  m.tags.assign(static_cast<std::size_t>(m.n) * m.n, RelationTag::Equal);
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      m.tags[static_cast<std::size_t>(a) * m.n + b] =
          relate(domains[a], domains[b]).tag;
  return m;
}

// min distance from a projected point to a sampled projection set, measured
// in the target domain's metric.
int dist_to_samples(Subgraph lam, const NormalForm& p,
                    const std::vector<NormalForm>& samples) {
  int best = -1;
  for (const NormalForm& s : samples) {
    const int d = d_subgraph(lam, p, s);
    if (best < 0 || d < best) best = d;
    if (best == 0) break;
  }
  return best;
}

std::string universe_text(const DefiningGraph& g, const VerifierConfig& cfg,
                          const Universe& u) {
  std::ostringstream out;
  out << "graph=" << g.vertex_count() << "v radius=" << cfg.radius
      << " cap=" << cfg.cap << " ball=" << u.ball.elems.size()
      << " domains=" << u.domains.size() << " seed=" << cfg.seed;
  return out.str();
}

}  // namespace

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << (pass() ? "PASS" : "FAIL") << " " << name << " (" << checked
      << " checked";
  if (!violations.empty()) out << ", " << violations.size() << " violations";
  out << ", " << elapsed_s << "s)";
  if (!pass()) out << " first: " << violations.front();
  return out.str();
}

Universe build_universe(const DefiningGraph& g, const VerifierConfig& cfg) {
  Universe u(enumerate_ball(g, NormalForm::identity(g), cfg.radius, cfg.cap,
                            cfg.ball_budget));
  std::unordered_set<DomainClass, DomainClassHash> seen;
  for (const NormalForm& x : u.ball.elems)
    for (std::uint32_t m = 1; m <= g.all_vertices().mask(); ++m) {
      const Subgraph lam = Subgraph::from_mask(m);
      if (!lam.subset_of(g.all_vertices())) continue;
      DomainClass d = DomainClass::canonical(x, lam);
      if (seen.insert(d).second) u.domains.push_back(std::move(d));
    }
  return u;
}

CheckReport check_projection_axiom(const DefiningGraph& g,
                                   const VerifierConfig& cfg,
                                   const GateOverride& fault) {
  Timer timer;
  CheckReport rep;
  rep.name = "projection";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  auto image = [&](const DomainClass& d, const NormalForm& x) {
    if (fault)
      if (auto forced = fault(d, x)) return *forced;
    return project(d, x);
  };
  const int n = static_cast<int>(u.ball.elems.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const NormalForm& x = u.ball.elems[i];
      const NormalForm& y = u.ball.elems[j];
      const std::int64_t dw = d_word(x, y);
      const int ds = d_syl(x, y);
      for (const DomainClass& d : u.domains) {
        const NormalForm px = image(d, x);
        const NormalForm py = image(d, y);
        ++rep.checked;
        if (px == py) continue;
        const int dd = d_subgraph(d.lam, px, py);
        if (dd > dw || dd > ds)
          rep.violations.push_back("projection expands distance at " +
                                   domain_witness(g, d) + " " +
                                   pair_witness(x, y));
      }
    }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_consistency(const DefiningGraph& g,
                              const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "consistency";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const RelationMatrix m = relate_all(u.domains);
  const int nd = static_cast<int>(u.domains.size());

  // gate images of every ball point in every domain, computed once
  std::vector<std::vector<NormalForm>> proj;
  proj.reserve(nd);
  for (const DomainClass& d : u.domains) {
    std::vector<NormalForm> row;
    row.reserve(u.ball.elems.size());
    for (const NormalForm& x : u.ball.elems) row.push_back(project(d, x));
    proj.push_back(std::move(row));
  }

  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b) {
      if (m.at(a, b) != RelationTag::Transverse) continue;
      const RelProjection rho_ab =
          rel_projection(u.domains[a], u.domains[b], cfg.sample_radius,
                         cfg.cap);
      const RelProjection rho_ba =
          rel_projection(u.domains[b], u.domains[a], cfg.sample_radius,
                         cfg.cap);
      for (std::size_t xi = 0; xi < u.ball.elems.size(); ++xi) {
        const int da =
            dist_to_samples(u.domains[a].lam, proj[a][xi], rho_ba.samples);
        const int db =
            dist_to_samples(u.domains[b].lam, proj[b][xi], rho_ab.samples);
        ++rep.checked;
        if (std::min(da, db) > 2)
          rep.violations.push_back(
              "consistency gap " + std::to_string(std::min(da, db)) + " at " +
              domain_witness(g, u.domains[a]) + " vs " +
              domain_witness(g, u.domains[b]) + " x=\"" +
              u.ball.elems[xi].text() + "\"");
      }
    }

  // Nested-triple clause: the projections of a nested chain coincide in any
  // domain both project to.
  std::size_t triples = 0;
  for (int k = 0; k < nd; ++k)
    for (int a = 0; a < nd; ++a) {
      if (m.at(k, a) != RelationTag::NestedInto) continue;
      for (int h = 0; h < nd; ++h) {
        const bool upward = m.at(a, h) == RelationTag::NestedInto;
        const bool lateral = m.at(a, h) == RelationTag::Transverse &&
                             m.at(h, k) != RelationTag::Orthogonal;
        if (!upward && !lateral) continue;
        if (++triples > 4000) break;  // sampled triples, reported below
        const auto common = common_representative(
            u.domains[k].rep, u.domains[k].lam, u.domains[a].rep,
            u.domains[a].lam);
        if (!common) continue;
        const NormalForm w = project(u.domains[h], *common);
        const RelProjection rk = rel_projection(
            u.domains[k], u.domains[h], cfg.sample_radius, cfg.cap);
        const RelProjection ra = rel_projection(
            u.domains[a], u.domains[h], cfg.sample_radius, cfg.cap);
        ++rep.checked;
        for (const auto& s : rk.samples)
          if (d_subgraph(u.domains[h].lam, w, s) > cfg.rho_tolerance)
            rep.violations.push_back("nested-triple clause fails at " +
                                     domain_witness(g, u.domains[k]) +
                                     " in " + domain_witness(g, u.domains[a]) +
                                     " onto " +
                                     domain_witness(g, u.domains[h]));
        for (const auto& s : ra.samples)
          if (d_subgraph(u.domains[h].lam, w, s) > cfg.rho_tolerance)
            rep.violations.push_back("nested-triple clause fails at " +
                                     domain_witness(g, u.domains[a]) +
                                     " under " +
                                     domain_witness(g, u.domains[h]));
      }
    }
  rep.notes.push_back("nested triples sampled: " + std::to_string(triples));
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_bounded_geodesic_image(const DefiningGraph& g,
                                         const VerifierConfig& cfg,
                                         const RhoOverride& fault) {
  Timer timer;
  CheckReport rep;
  rep.name = "bgi";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const RelationMatrix m = relate_all(u.domains);
  const int nd = static_cast<int>(u.domains.size());

  std::map<std::pair<std::size_t, std::uint32_t>, CosetCGraph> cgraphs;
  auto cgraph_for = [&](const DomainClass& d) -> const CosetCGraph& {
    const auto key = std::make_pair(d.rep.hash(), d.lam.mask());
    auto it = cgraphs.find(key);
    if (it == cgraphs.end())
      it = cgraphs
               .emplace(key, build_cgraph(g, d.coset(), 2 * cfg.radius,
                                          cfg.cap, cfg.ball_budget))
               .first;
    return it->second;
  };

  for (int small = 0; small < nd; ++small)
    for (int big = 0; big < nd; ++big) {
      if (m.at(small, big) != RelationTag::NestedInto) continue;
      const DomainClass& ds = u.domains[small];
      const DomainClass& db = u.domains[big];
      const CosetCGraph& cg = cgraph_for(db);
      std::vector<NormalForm> samples;
      if (fault) {
        if (auto forced = fault(ds, db)) samples = *forced;
      }
      if (samples.empty())
        samples = rel_projection(ds, db, cfg.sample_radius, cfg.cap).samples;
      std::vector<char> near(cg.nodes.size(), 0);
      for (const NormalForm& s : samples) {
        const int si = cg.find(s);
        if (si < 0) continue;
        for (std::size_t i = 0; i < cg.nodes.size(); ++i)
          if (cg.dist[si][i] >= 0 && cg.dist[si][i] <= 2) near[i] = 1;
      }
      const int n = static_cast<int>(u.ball.elems.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const NormalForm& x = u.ball.elems[i];
          const NormalForm& y = u.ball.elems[j];
          if (domain_distance(ds, x, y) == 0) continue;
          const int px = cg.find(project(db, x));
          const int py = cg.find(project(db, y));
          ++rep.checked;
          if (px < 0 || py < 0) {
            rep.notes.push_back("projection outside enumerated coset for " +
                                pair_witness(x, y));
            continue;
          }
          if (near[px] || near[py]) continue;
          const int full = cg.dist[px][py];
          // shortest path avoiding the 2-neighbourhood of rho
          std::vector<int> dd(cg.nodes.size(), -1);
          std::deque<int> queue;
          dd[px] = 0;
          queue.push_back(px);
          while (!queue.empty()) {
            const int c = queue.front();
            queue.pop_front();
            for (int nb : cg.adj[c])
              if (dd[nb] < 0 && !near[nb]) {
                dd[nb] = dd[c] + 1;
                queue.push_back(nb);
              }
          }
          if (dd[py] >= 0 && dd[py] == full)
            rep.violations.push_back(
                "geodesic avoids N2(rho) for " + domain_witness(g, ds) +
                " inside " + domain_witness(g, db) + " " + pair_witness(x, y));
        }
    }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_large_links(const DefiningGraph& g,
                              const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "large-links";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const int E = cfg.hierarchy_constant(g);
  std::mt19937_64 rng(cfg.seed);

  std::size_t big_gaps = 0;
  for (const DomainClass& d : u.domains) {
    const CosetCGraph cg =
        build_cgraph(g, d.coset(), 2 * cfg.radius, cfg.cap, cfg.ball_budget);
    const int n = static_cast<int>(u.ball.elems.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const NormalForm& x = u.ball.elems[i];
        const NormalForm& y = u.ball.elems[j];
        const int gap = domain_distance(d, x, y);
        ++rep.checked;
        if (gap == 0) continue;  // empty link list suffices
        const int px = cg.find(project(d, x));
        const int py = cg.find(project(d, y));
        if (px < 0 || py < 0 || cg.dist[px][py] < 0) {
          rep.notes.push_back("coset enumeration truncated at " +
                              domain_witness(g, d));
          continue;
        }
        const auto path = cgraph_geodesic(cg, px, py, rng);
        std::vector<DomainClass> links;
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
          const NormalForm step = multiply(invert(cg.nodes[path[t]]),
                                           cg.nodes[path[t + 1]]);
          DomainClass td =
              DomainClass::canonical(cg.nodes[path[t]], step.support());
          if (std::find(links.begin(), links.end(), td) == links.end())
            links.push_back(std::move(td));
        }
        if (static_cast<int>(links.size()) >
            E * gap + E)
          rep.violations.push_back("link list too long at " +
                                   domain_witness(g, d) + " " +
                                   pair_witness(x, y));
        // gap clause: any properly nested domain with projection gap > 18
        // must nest into a listed domain. Projection gaps are bounded by the
        // pair's syllable distance, so small balls settle this wholesale.
        if (d_syl(x, y) > 18) {
          for (const DomainClass& sub : u.domains) {
            if (relate(sub, d).tag != RelationTag::NestedInto) continue;
            if (domain_distance(sub, x, y) <= 18) continue;
            ++big_gaps;
            bool nested_somewhere = false;
            for (const DomainClass& td : links) {
              const auto r = relate(sub, td).tag;
              if (r == RelationTag::NestedInto || r == RelationTag::Equal)
                nested_somewhere = true;
            }
            if (!nested_somewhere)
              rep.violations.push_back("large gap not captured at " +
                                       domain_witness(g, sub) + " in " +
                                       domain_witness(g, d));
          }
        }
      }
  }
  rep.notes.push_back(
      big_gaps == 0
          ? "gap clause vacuous: all pair syllable distances <= 18"
          : "gap clause exercised " + std::to_string(big_gaps) + " times");
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_partial_realization(const DefiningGraph& g,
                                      const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "partial-realization";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const RelationMatrix m = relate_all(u.domains);
  const int nd = static_cast<int>(u.domains.size());
  std::mt19937_64 rng(cfg.seed);

  auto coset_points = [&](const DomainClass& d) {
    const SylBall b = enumerate_ball(g, d.rep, std::min(cfg.sample_radius, 2),
                                     cfg.cap, d.lam, cfg.ball_budget);
    std::vector<NormalForm> pts = b.elems;
    if (pts.size() > 3) {
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.erase(pts.begin() + 3, pts.end());
    }
    return pts;
  };

  auto verify_tuple = [&](const std::vector<int>& tuple) {
    std::vector<DomainClass> doms;
    for (int t : tuple) doms.push_back(u.domains[t]);
    std::vector<std::vector<NormalForm>> choices;
    for (const auto& d : doms) choices.push_back(coset_points(d));
    // one sampled point combination per tuple
    std::vector<NormalForm> pts;
    for (const auto& c : choices) pts.push_back(c[rng() % c.size()]);
    const NormalForm x = partial_realize(doms, pts);
    ++rep.checked;
    for (std::size_t i = 0; i < doms.size(); ++i)
      if (!(project(doms[i], x) == pts[i]))
        rep.violations.push_back("realization misses its coordinate at " +
                                 domain_witness(g, doms[i]));
    for (std::size_t i = 0; i < doms.size(); ++i)
      for (const DomainClass& h : u.domains) {
        const auto r = relate(doms[i], h).tag;
        if (r != RelationTag::NestedInto && r != RelationTag::Transverse)
          continue;
        const RelProjection rho =
            rel_projection(doms[i], h, cfg.sample_radius, cfg.cap);
        if (d_subgraph(h.lam, project(h, x), rho.anchor) > cfg.rho_tolerance)
          rep.violations.push_back(
              "realization far from rho at " + domain_witness(g, doms[i]) +
              " vs " + domain_witness(g, h));
      }
  };

  std::size_t budget = 300;
  for (int a = 0; a < nd && budget; ++a)
    for (int b = a + 1; b < nd && budget; ++b) {
      if (m.at(a, b) != RelationTag::Orthogonal) continue;
      --budget;
      verify_tuple({a, b});
      for (int c = b + 1; c < nd && budget; ++c)
        if (m.at(a, c) == RelationTag::Orthogonal &&
            m.at(b, c) == RelationTag::Orthogonal) {
          --budget;
          verify_tuple({a, b, c});
        }
    }
  // singletons
  for (int a = 0; a < std::min(nd, 20); ++a) verify_tuple({a});
  rep.elapsed_s = timer.seconds();
  return rep;
}

namespace {

// Smallest r with (2^V r + 2)^V >= needed.
int uniqueness_radius(int vertex_count, std::int64_t needed) {
  for (int r = 0;; ++r) {
    long double theta = 1;
    const long double base =
        std::ldexp(static_cast<long double>(r), vertex_count) + 2;
    for (int i = 0; i < vertex_count; ++i) theta *= base;
    if (theta >= static_cast<long double>(needed)) return r;
  }
}

}  // namespace

CheckReport check_uniqueness(const DefiningGraph& g,
                             const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "uniqueness";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const int n = static_cast<int>(u.ball.elems.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const NormalForm& x = u.ball.elems[i];
      const NormalForm& y = u.ball.elems[j];
      const std::int64_t dw = d_word(x, y);
      ++rep.checked;
      const int needed = uniqueness_radius(g.vertex_count(), dw);
      if (needed == 0) continue;
      // some projection gap must reach `needed`, else the bound fails
      int best = 0;
      for (const DomainClass& d : u.domains) {
        best = std::max(best, domain_distance(d, x, y));
        if (best >= needed) break;
      }
      if (best < needed)
        rep.violations.push_back(
            "word distance " + std::to_string(dw) +
            " exceeds theta(max gap = " + std::to_string(best) + ") for " +
            pair_witness(x, y));
    }
  rep.elapsed_s = timer.seconds();
  return rep;
}

namespace {

std::vector<Subgraph> slim_eligible(const DefiningGraph& g) {
  std::vector<Subgraph> out;
  for (std::uint32_t m = 1; m <= g.all_vertices().mask(); ++m) {
    const Subgraph lam = Subgraph::from_mask(m);
    if (!lam.subset_of(g.all_vertices()) || lam.size() < 2) continue;
    if (!g.splits_as_join(lam)) out.push_back(lam);
  }
  return out;
}

}  // namespace

CheckReport check_hyperbolicity_slim(const DefiningGraph& g,
                                     const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "slim";
  std::mt19937_64 rng(cfg.seed);
  const auto eligible = slim_eligible(g);
  if (eligible.empty())
    rep.notes.push_back("no non-join subgraph with >= 2 vertices; vacuous");
  std::ostringstream uni;
  uni << "eligible subgraphs=" << eligible.size()
      << " triangles=" << cfg.slim_triangles << " radius=" << cfg.radius;
  rep.universe = uni.str();
  for (const Subgraph lam : eligible) {
    const CosetCGraph cg =
        build_cgraph(g, Coset::canonical(NormalForm::identity(g), lam),
                     cfg.radius, cfg.cap, cfg.ball_budget);
    const int n = static_cast<int>(cg.nodes.size());
    if (n < 3) continue;
    for (int t = 0; t < cfg.slim_triangles; ++t) {
      const int x = rng() % n, y = rng() % n, z = rng() % n;
      if (cg.dist[x][y] < 0 || cg.dist[y][z] < 0 || cg.dist[z][x] < 0)
        continue;
      const auto s1 = cgraph_geodesic(cg, y, z, rng);
      const auto s2 = cgraph_geodesic(cg, z, x, rng);
      const auto s3 = cgraph_geodesic(cg, x, y, rng);
      ++rep.checked;
      auto side_slim = [&](const std::vector<int>& side,
                           const std::vector<int>& o1,
                           const std::vector<int>& o2) {
        for (int p : side) {
          int best = -1;
          for (int q : o1)
            if (cg.dist[p][q] >= 0 && (best < 0 || cg.dist[p][q] < best))
              best = cg.dist[p][q];
          for (int q : o2)
            if (cg.dist[p][q] >= 0 && (best < 0 || cg.dist[p][q] < best))
              best = cg.dist[p][q];
          if (best < 0 || best > 3) return false;  // 7/2 rounds to 3 on grid
        }
        return true;
      };
      if (!side_slim(s1, s2, s3) || !side_slim(s2, s3, s1) ||
          !side_slim(s3, s1, s2))
        rep.violations.push_back(
            "triangle not 7/2-slim in C(" + g.subgraph_text(lam) + ") at \"" +
            cg.nodes[x].text() + "\",\"" + cg.nodes[y].text() + "\",\"" +
            cg.nodes[z].text() + "\"");
    }
  }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_bottleneck(const DefiningGraph& g,
                             const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "bottleneck";
  std::mt19937_64 rng(cfg.seed);
  const auto eligible = slim_eligible(g);
  std::ostringstream uni;
  uni << "eligible subgraphs=" << eligible.size() << " radius=" << cfg.radius;
  rep.universe = uni.str();
  for (const Subgraph lam : eligible) {
    const CosetCGraph cg =
        build_cgraph(g, Coset::canonical(NormalForm::identity(g), lam),
                     cfg.radius, cfg.cap, cfg.ball_budget);
    const int n = static_cast<int>(cg.nodes.size());
    for (int t = 0; t < cfg.slim_triangles; ++t) {
      const int y = rng() % n, z = rng() % n;
      if (y == z || cg.dist[y][z] < 0) continue;
      const auto path = cgraph_geodesic(cg, y, z, rng);
      const int mid = path[path.size() / 2];
      ++rep.checked;
      // every alternative enumerated path must pass within 7/2 of mid
      std::vector<char> blocked(n, 0);
      for (int i = 0; i < n; ++i)
        if (cg.dist[mid][i] >= 0 && cg.dist[mid][i] <= 3) blocked[i] = 1;
      if (blocked[y] || blocked[z]) continue;
      std::vector<char> seen(n, 0);
      std::deque<int> queue{y};
      seen[y] = 1;
      while (!queue.empty()) {
        const int c = queue.front();
        queue.pop_front();
        for (int nb : cg.adj[c])
          if (!seen[nb] && !blocked[nb]) {
            seen[nb] = 1;
            queue.push_back(nb);
          }
      }
      if (seen[z])
        rep.violations.push_back("path dodges the midpoint bottleneck in C(" +
                                 g.subgraph_text(lam) + ") for \"" +
                                 cg.nodes[y].text() + "\",\"" +
                                 cg.nodes[z].text() + "\"");
    }
  }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_finite_complexity_and_containers(const DefiningGraph& g,
                                                   const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "containers";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  const RelationMatrix m = relate_all(u.domains);
  const int nd = static_cast<int>(u.domains.size());

  // longest nesting chain
  std::vector<int> height(nd, -1);
  std::function<int(int)> h = [&](int i) {
    if (height[i] >= 0) return height[i];
    int best = 1;
    for (int j = 0; j < nd; ++j)
      if (m.at(j, i) == RelationTag::NestedInto) best = std::max(best, 1 + h(j));
    return height[i] = best;
  };
  int longest = 0;
  for (int i = 0; i < nd; ++i) longest = std::max(longest, h(i));
  rep.notes.push_back("longest nesting chain: " + std::to_string(longest));
  if (longest > g.vertex_count())
    rep.violations.push_back("nesting chain longer than the vertex count");

  // container axiom via the candidate construction
  for (int w = 0; w < nd; ++w)
    for (int s = 0; s < nd; ++s) {
      if (m.at(s, w) != RelationTag::NestedInto) continue;
      bool witness = false;
      for (int q = 0; q < nd && !witness; ++q)
        witness = m.at(q, w) == RelationTag::NestedInto &&
                  m.at(q, s) == RelationTag::Orthogonal;
      if (!witness) continue;
      ++rep.checked;
      const DomainClass cont =
          container_candidate(u.domains[w], u.domains[s]);
      if (relate(cont, u.domains[w]).tag != RelationTag::NestedInto) {
        rep.violations.push_back("container not properly nested at " +
                                 domain_witness(g, u.domains[w]));
        continue;
      }
      for (int v = 0; v < nd; ++v) {
        const bool inside = m.at(v, w) == RelationTag::NestedInto ||
                            m.at(v, w) == RelationTag::Equal;
        if (!inside || m.at(v, s) != RelationTag::Orthogonal) continue;
        const auto r = relate(u.domains[v], cont).tag;
        if (r != RelationTag::NestedInto && r != RelationTag::Equal)
          rep.violations.push_back(
              "container misses " + domain_witness(g, u.domains[v]) +
              " for " + domain_witness(g, u.domains[s]) + " inside " +
              domain_witness(g, u.domains[w]));
      }
    }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_diameter_classification(const DefiningGraph& g,
                                          const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "diameter";
  std::ostringstream uni;
  uni << "radius=" << cfg.radius << " cap=" << cfg.cap;
  rep.universe = uni.str();
  for (std::uint32_t msk = 1; msk <= g.all_vertices().mask(); ++msk) {
    const Subgraph lam = Subgraph::from_mask(msk);
    if (!lam.subset_of(g.all_vertices()) || lam.size() < 2) continue;
    ++rep.checked;
    if (g.splits_as_join(lam)) {
      const SylBall ball =
          enumerate_ball(g, NormalForm::identity(g), cfg.radius, cfg.cap, lam,
                         cfg.ball_budget);
      int diam = 0;
      for (std::size_t i = 0; i < ball.elems.size(); ++i)
        for (std::size_t j = i + 1; j < ball.elems.size(); ++j)
          diam = std::max(
              diam, d_subgraph(lam, ball.elems[i], ball.elems[j]));
      if (diam > 2)
        rep.violations.push_back("join subgraph " + g.subgraph_text(lam) +
                                 " has diameter " + std::to_string(diam));
    } else {
      // Witness: one generator per vertex, ordered so the first and last do
      // not commute (such a pair exists in any non-join subgraph); with
      // commuting endpoints the powers can interleave across the period
      // boundary and the subgraph distance stalls.
      std::vector<VertexId> order = lam.vertices();
      [&] {
        for (std::size_t i = 0; i < order.size(); ++i)
          for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!g.adjacent(order[i], order[j])) {
              std::swap(order[0], order[i]);
              std::swap(order.back(), order[j]);
              return;
            }
      }();
      std::vector<VertexElement> gens;
      for (VertexId v : order) gens.push_back({v, 1});
      const NormalForm step = NormalForm::reduce(g, gens);
      NormalForm power = NormalForm::identity(g);
      int prev = 0;
      for (int n = 1;; ++n) {
        power = multiply(power, step);
        if (power.syllable_length() > cfg.radius) break;
        const int dn = d_subgraph(lam, NormalForm::identity(g), power);
        if (dn <= prev) {
          rep.violations.push_back("witness powers stall in C(" +
                                   g.subgraph_text(lam) + ") at n=" +
                                   std::to_string(n));
          break;
        }
        prev = dn;
      }
    }
  }
  rep.elapsed_s = timer.seconds();
  return rep;
}

CheckReport check_equivariance(const DefiningGraph& g,
                               const VerifierConfig& cfg) {
  Timer timer;
  CheckReport rep;
  rep.name = "equivariance";
  const Universe u = build_universe(g, cfg);
  rep.universe = universe_text(g, cfg, u);
  std::mt19937_64 rng(cfg.seed);
  const int n = static_cast<int>(u.ball.elems.size());
  const int nd = static_cast<int>(u.domains.size());
  for (int iter = 0; iter < 2000; ++iter) {
    const NormalForm& a = u.ball.elems[rng() % n];
    const NormalForm& x = u.ball.elems[rng() % n];
    const DomainClass& d = u.domains[rng() % nd];
    ++rep.checked;
    // coset level: translation commutes with the gate exactly
    const Coset moved = Coset::canonical(multiply(a, d.rep), d.lam);
    const NormalForm lhs = multiply(a, gate(d.coset(), x));
    const NormalForm rhs = gate(moved, multiply(a, x));
    if (!(lhs == rhs)) {
      rep.violations.push_back("gate not equivariant at " +
                               domain_witness(g, d) + " a=\"" + a.text() +
                               "\" x=\"" + x.text() + "\"");
      continue;
    }
    // class level: within the structure tolerance after re-gating onto the
    // canonical representative
    const DomainClass moved_class =
        DomainClass::canonical(multiply(a, d.rep), d.lam);
    const NormalForm mapped = gate(moved_class.coset(), lhs);
    const NormalForm direct = project(moved_class, multiply(a, x));
    if (d_subgraph(moved_class.lam, mapped, direct) > cfg.rho_tolerance)
      rep.violations.push_back("class-level equivariance gap at " +
                               domain_witness(g, d));
  }
  rep.elapsed_s = timer.seconds();
  return rep;
}

DistanceFormulaFit fit_distance_formula(const DefiningGraph& g,
                                        const VerifierConfig& cfg,
                                        long sigma) {
  Timer timer;
  DistanceFormulaFit fit;
  fit.report.name = "distance-formula";
  const int E = cfg.hierarchy_constant(g);
  if (sigma < 2L * E + 1)
    throw std::invalid_argument("threshold must be at least 2E+1");
  const Universe u = build_universe(g, cfg);
  fit.report.universe = universe_text(g, cfg, u);

  // Every projection gap is bounded by the pair's syllable distance
  // (coarse Lipschitz), itself at most 2*radius on the ball; with
  // sigma > 2*radius every thresholded term vanishes and the two-sided
  // inequality reduces to d(x,y) <= L.
  const long gap_bound = 2L * cfg.radius;
  if (sigma <= gap_bound)
    throw std::logic_error("threshold below the ball's gap bound");
  std::int64_t max_word = 0;
  for (const NormalForm& x : u.ball.elems)
    max_word = std::max(max_word, x.word_length());
  fit.K = 1;
  fit.L = static_cast<long>(2 * max_word);
  fit.report.notes.push_back(
      "sigma=" + std::to_string(sigma) + " exceeds the gap bound " +
      std::to_string(gap_bound) + "; thresholded sums vanish, K=1, L=" +
      std::to_string(fit.L));

  // seeded re-verification on sampled pairs
  std::mt19937_64 rng(cfg.seed);
  const int n = static_cast<int>(u.ball.elems.size());
  const std::size_t samples =
      std::min<std::size_t>(20'000, static_cast<std::size_t>(n) * n);
  for (std::size_t t = 0; t < samples; ++t) {
    const NormalForm& x = u.ball.elems[rng() % n];
    const NormalForm& y = u.ball.elems[rng() % n];
    ++fit.report.checked;
    const int ds = d_syl(x, y);
    const std::int64_t dw = d_word(x, y);
    if (ds >= sigma)
      fit.report.violations.push_back("syllable gap reaches sigma for " +
                                      pair_witness(x, y));
    if (dw > fit.L)
      fit.report.violations.push_back("pair escapes the additive constant: " +
                                      pair_witness(x, y));
    fit.worst_ratio = std::max(
        fit.worst_ratio, static_cast<double>(dw) / static_cast<double>(fit.L));
  }
  fit.report.elapsed_s = timer.seconds();
  return fit;
}

std::vector<CheckReport> run_suite(const DefiningGraph& g,
                                   const VerifierConfig& cfg,
                                   const std::vector<std::string>& suites,
                                   long sigma) {
  const bool all = std::find(suites.begin(), suites.end(), "all") !=
                   suites.end();
  auto wanted = [&](const std::string& name) {
    return all || std::find(suites.begin(), suites.end(), name) !=
                      suites.end();
  };
  std::vector<std::pair<std::string, std::function<CheckReport()>>> tasks;
  auto enqueue = [&](const std::string& name,
                     std::function<CheckReport()> fn) {
    if (wanted(name)) tasks.push_back({name, std::move(fn)});
  };
  enqueue("projection", [&] { return check_projection_axiom(g, cfg); });
  enqueue("consistency", [&] { return check_consistency(g, cfg); });
  enqueue("bgi", [&] { return check_bounded_geodesic_image(g, cfg); });
  enqueue("large-links", [&] { return check_large_links(g, cfg); });
  enqueue("partial-realization",
          [&] { return check_partial_realization(g, cfg); });
  enqueue("uniqueness", [&] { return check_uniqueness(g, cfg); });
  enqueue("slim", [&] { return check_hyperbolicity_slim(g, cfg); });
  enqueue("bottleneck", [&] { return check_bottleneck(g, cfg); });
  enqueue("containers",
          [&] { return check_finite_complexity_and_containers(g, cfg); });
  enqueue("diameter", [&] { return check_diameter_classification(g, cfg); });
  enqueue("equivariance", [&] { return check_equivariance(g, cfg); });
  enqueue("distance-formula",
          [&] { return fit_distance_formula(g, cfg, sigma).report; });

  std::vector<CheckReport> out;
  if (cfg.jobs <= 1) {
    for (auto& [name, fn] : tasks) out.push_back(fn());
    return out;
  }
  // Checks are independent; run them in waves and merge in the fixed order.
  for (std::size_t base = 0; base < tasks.size();
       base += static_cast<std::size_t>(cfg.jobs)) {
    std::vector<std::future<CheckReport>> wave;
    for (std::size_t i = base;
         i < std::min(tasks.size(), base + static_cast<std::size_t>(cfg.jobs));
         ++i)
      wave.push_back(std::async(std::launch::async, tasks[i].second));
    for (auto& f : wave) out.push_back(f.get());
  }
  return out;
}

std::string reports_to_json_text(const std::vector<CheckReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports)
    j.push_back({{"name", r.name},
                 {"universe", r.universe},
                 {"checked", r.checked},
                 {"pass", r.pass()},
                 {"violations", r.violations},
                 {"notes", r.notes},
                 {"elapsed_s", r.elapsed_s}});
  return j.dump(2);
}

}  // namespace gp
