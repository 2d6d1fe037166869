#include "gp/proto.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "gp/ball.hpp"
#include "gp/coset.hpp"

namespace gp {

std::optional<int> ProtoStructure::find(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (domains_[i].id == id) return i;
  return std::nullopt;
}

int ProtoStructure::add_domain(ProtoDomain d) {
  if (find(d.id))
    throw std::invalid_argument("duplicate domain id: " + d.id);
  const int n = size();
  std::vector<Rel> grown((n + 1) * (n + 1), Rel::Transverse);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grown[static_cast<std::size_t>(i) * (n + 1) + j] = rel_[index(i, j)];
  domains_.push_back(std::move(d));
  rel_ = std::move(grown);
  rel_[index(n, n)] = Rel::Equal;
  return n;
}

void ProtoStructure::set_relation(int a, int b, Rel r) {
  if (a == b) throw std::invalid_argument("diagonal relation is fixed");
  rel_[index(a, b)] = r;
  switch (r) {
    case Rel::Nested:
      rel_[index(b, a)] = Rel::Contains;
      break;
    case Rel::Contains:
      rel_[index(b, a)] = Rel::Nested;
      break;
    case Rel::Equal:
      throw std::invalid_argument("distinct domains cannot be equal");
    default:
      rel_[index(b, a)] = r;
  }
}

void ProtoStructure::set_projection(int from, int to, ProtoProjection p) {
  proj_[{from, to}] = std::move(p);
}

const ProtoProjection* ProtoStructure::projection(int from, int to) const {
  auto it = proj_.find({from, to});
  return it == proj_.end() ? nullptr : &it->second;
}

std::vector<int> ProtoStructure::maximal_domains() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size(); ++j)
      if (rel(i, j) == Rel::Nested) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

int ProtoStructure::max_orthogonal_family() const {
  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> grow = [&](int start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int i = start; i < size(); ++i) {
      bool ok = true;
      for (int c : chosen)
        if (rel(c, i) != Rel::Orthogonal) ok = false;
      if (!ok) continue;
      chosen.push_back(i);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

int ProtoStructure::longest_nesting_chain() const {
  std::vector<int> height(size(), -1);
  std::function<int(int)> h = [&](int i) {
    if (height[i] >= 0) return height[i];
    int best = 1;
    for (int j = 0; j < size(); ++j)
      if (rel(i, j) == Rel::Contains) best = std::max(best, 1 + h(j));
    return height[i] = best;
  };
  int out = 0;
  for (int i = 0; i < size(); ++i) out = std::max(out, h(i));
  return out;
}

ProtoReport validate(const ProtoStructure& ps) {
  ProtoReport rep;
  const int n = ps.size();
  auto id = [&](int i) { return ps.domain(i).id; };

  for (int i = 0; i < n; ++i) {
    if (ps.rel(i, i) != Rel::Equal)
      rep.violations.push_back("diagonal of " + id(i) + " is not Equal");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rel r = ps.rel(i, j);
      const Rel m = ps.rel(j, i);
      const bool mirror_ok =
          (r == Rel::Nested && m == Rel::Contains) ||
          (r == Rel::Contains && m == Rel::Nested) ||
          (r == Rel::Orthogonal && m == Rel::Orthogonal) ||
          (r == Rel::Transverse && m == Rel::Transverse);
      if (r == Rel::Equal)
        rep.violations.push_back("distinct domains marked equal: " + id(i) +
                                 ", " + id(j));
      else if (!mirror_ok)
        rep.violations.push_back("asymmetric relation entry: " + id(i) +
                                 " vs " + id(j));
    }
  }

  // nesting transitive
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (ps.rel(i, j) != Rel::Nested) continue;
      for (int k = 0; k < n; ++k)
        if (ps.rel(j, k) == Rel::Nested && !ps.nested_le(i, k))
          rep.violations.push_back("nesting not transitive at " + id(i) +
                                   " in " + id(j) + " in " + id(k));
    }

  const auto maxima = ps.maximal_domains();
  if (maxima.size() != 1)
    rep.violations.push_back("expected a unique maximal domain, found " +
                             std::to_string(maxima.size()));

  // orthogonality: excludes comparability (structural), inherited by nesting
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (ps.rel(i, j) != Rel::Nested) continue;
      for (int k = 0; k < n; ++k)
        if (ps.rel(j, k) == Rel::Orthogonal &&
            ps.rel(i, k) != Rel::Orthogonal)
          rep.violations.push_back("orthogonality not inherited: " + id(i) +
                                   " in " + id(j) + " perp " + id(k));
    }

  // projections defined exactly for transverse pairs (both ways) and
  // properly nested pairs (upwards), diameters within 4E
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rel r = ps.rel(i, j);
      const bool expect =
          r == Rel::Transverse || r == Rel::Nested;
      const ProtoProjection* p = ps.projection(i, j);
      if (expect && !p)
        rep.violations.push_back("missing projection " + id(i) + " -> " +
                                 id(j));
      if (!expect && p)
        rep.violations.push_back("spurious projection " + id(i) + " -> " +
                                 id(j));
      if (p && p->diam > 4 * ps.hierarchy_constant())
        rep.violations.push_back("projection diameter above 4E: " + id(i) +
                                 " -> " + id(j));
    }

  const int rank = ps.max_orthogonal_family();
  if (rank > ps.hierarchy_constant())
    rep.violations.push_back("orthogonal family of size " +
                             std::to_string(rank) + " exceeds E");
  return rep;
}

ProtoReport check_containers(const ProtoStructure& ps) {
  ProtoReport rep;
  const int n = ps.size();
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) {
      if (ps.rel(u, w) != Rel::Nested) continue;
      bool witness = false;
      for (int q = 0; q < n; ++q)
        if (ps.rel(q, w) == Rel::Nested && ps.rel(q, u) == Rel::Orthogonal)
          witness = true;
      if (!witness) continue;
      bool found = false;
      for (int c = 0; c < n && !found; ++c) {
        if (ps.rel(c, w) != Rel::Nested) continue;
        bool absorbs = true;
        for (int v = 0; v < n; ++v)
          if (ps.nested_le(v, w) && ps.rel(v, u) == Rel::Orthogonal &&
              !ps.nested_le(v, c))
            absorbs = false;
        found = absorbs;
      }
      if (!found)
        rep.violations.push_back("no container for " + ps.domain(u).id +
                                 " inside " + ps.domain(w).id);
    }
  return rep;
}

namespace {

std::string family_id(const ProtoStructure& ps, int w,
                      const std::vector<int>& family) {
  std::string out = "D[" + ps.domain(w).id + "|";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ",";
    out += ps.domain(family[i]).id;
  }
  return out + "]";
}

}  // namespace

ProtoStructure complete(const ProtoStructure& ps) {
  const int n = ps.size();
  // Container pairs: (w, pairwise-orthogonal family nested in w) admitting a
  // nested domain orthogonal to the whole family. Only the original (non
  // completion-created) domains seed pairs, which keeps completion idempotent.
  struct Pair {
    int base;
    std::vector<int> family;
  };
  std::vector<Pair> pairs;
  for (int w = 0; w < n; ++w) {
    if (ps.domain(w).container_base) continue;
    std::vector<int> nested;
    for (int v = 0; v < n; ++v)
      if (ps.rel(v, w) == Rel::Nested && !ps.domain(v).container_base)
        nested.push_back(v);
    std::vector<int> family;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
      if (!family.empty()) {
        for (int q : nested) {
          bool perp_all = true;
          for (int v : family)
            if (ps.rel(q, v) != Rel::Orthogonal) perp_all = false;
          if (perp_all) {
            pairs.push_back({w, family});
            break;
          }
        }
      }
      for (std::size_t i = start; i < nested.size(); ++i) {
        bool ok = true;
        for (int v : family)
          if (ps.rel(v, nested[i]) != Rel::Orthogonal) ok = false;
        if (!ok) continue;
        family.push_back(nested[i]);
        grow(i + 1);
        family.pop_back();
      }
    };
    grow(0);
  }

  ProtoStructure out = ps;
  std::vector<int> added;
  for (const Pair& pr : pairs) {
    ProtoDomain d;
    d.id = family_id(ps, pr.base, pr.family);
    d.flag = DiamFlag::Point;
    d.container_base = pr.base;
    d.container_family = pr.family;
    if (out.find(d.id)) continue;  // already completed earlier
    added.push_back(out.add_domain(std::move(d)));
  }
  if (added.empty()) return ps;

  auto base_of = [&](int i) { return *out.domain(i).container_base; };
  auto family_of = [&](int i) { return out.domain(i).container_family; };

  // Relations between a new container domain and an original domain.
  for (int d : added) {
    const int w = base_of(d);
    const auto& fam = family_of(d);
    for (int q = 0; q < n; ++q) {
      bool q_perp_fam = true, q_in_some = false;
      for (int v : fam) {
        if (ps.rel(q, v) != Rel::Orthogonal) q_perp_fam = false;
        if (ps.nested_le(q, v)) q_in_some = true;
      }
      if (ps.nested_le(q, w) && q_perp_fam) {
        out.set_relation(q, d, Rel::Nested);
      } else if (ps.nested_le(w, q)) {
        out.set_relation(d, q, Rel::Nested);
      } else if (ps.rel(q, w) == Rel::Orthogonal || q_in_some) {
        out.set_relation(q, d, Rel::Orthogonal);
      } else {
        out.set_relation(q, d, Rel::Transverse);
      }
    }
  }

  // Relations between two container domains.
  for (int d1 : added)
    for (int d2 : added) {
      if (d1 == d2) continue;
      const int w = base_of(d1), t = base_of(d2);
      const auto &fam1 = family_of(d1), &fam2 = family_of(d2);
      auto nests = [&](const std::vector<int>& va, int base_a,
                       const std::vector<int>& vb, int base_b) {
        if (!ps.nested_le(base_a, base_b)) return false;
        for (int r : vb) {
          bool ok = ps.rel(r, base_a) == Rel::Orthogonal;
          for (int v : va)
            if (ps.nested_le(r, v)) ok = true;
          if (!ok) return false;
        }
        return true;
      };
      if (d1 < d2 || true) {
        if (nests(fam1, w, fam2, t) && !(w == t && fam1 == fam2)) {
          if (nests(fam2, t, fam1, w))
            throw std::logic_error("container nesting not antisymmetric");
          out.set_relation(d1, d2, Rel::Nested);
        } else if (ps.rel(w, t) == Rel::Orthogonal) {
          out.set_relation(d1, d2, Rel::Orthogonal);
        } else if (!nests(fam2, t, fam1, w)) {
          out.set_relation(d1, d2, Rel::Transverse);
        }
      }
    }

  // The literal relation rules leave orthogonality inheritance open between
  // two container domains whose bases nest; close under V nested-in W
  // orthogonal-to U => V orthogonal-to U, which is the minimal fix that
  // restores the proto axioms. Comparable pairs reaching the closure are a
  // hard error.
  {
    const int m = out.size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w) {
          if (v == w || out.rel(v, w) != Rel::Nested) continue;
          for (int q = 0; q < m; ++q) {
            if (out.rel(w, q) != Rel::Orthogonal) continue;
            const Rel cur = out.rel(v, q);
            if (cur == Rel::Orthogonal) continue;
            if (cur != Rel::Transverse)
              throw std::logic_error(
                  "completion produced comparable orthogonal pair: " +
                  out.domain(v).id + " vs " + out.domain(q).id);
            out.set_relation(v, q, Rel::Orthogonal);
            changed = true;
          }
        }
    }
  }

  // Relative projections: onto a container domain the target is a point;
  // from a container domain into an original domain use the union of the
  // family's projections, falling back to the base's projection.
  const int m = out.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Rel r = out.rel(i, j);
      if (r != Rel::Nested && r != Rel::Transverse) continue;
      if (out.projection(i, j)) continue;
      if (out.domain(j).flag == DiamFlag::Point && j >= n) {
        out.set_projection(i, j, {"pt:" + out.domain(j).id, 0});
        continue;
      }
      if (i >= n && j < n) {
        const auto& fam = family_of(i);
        std::vector<int> active;
        for (int v : fam)
          if (ps.rel(v, j) == Rel::Nested || ps.rel(v, j) == Rel::Transverse)
            active.push_back(v);
        if (!active.empty()) {
          std::string set_id = "union(";
          for (std::size_t k = 0; k < active.size(); ++k) {
            if (k) set_id += ",";
            const ProtoProjection* p = ps.projection(active[k], j);
            set_id += p ? p->set_id : "?";
          }
          out.set_projection(i, j,
                             {set_id + ")", 4 * ps.hierarchy_constant()});
        } else {
          const ProtoProjection* p = ps.projection(base_of(i), j);
          if (!p)
            throw std::logic_error(
                "completion fallback projection missing for " +
                out.domain(i).id + " -> " + out.domain(j).id);
          out.set_projection(i, j, *p);
        }
      }
    }
  return out;
}

ProtoReport check_completed_complexity(const ProtoStructure& ps) {
  ProtoReport rep;
  const int E = ps.hierarchy_constant();
  const int chain = ps.longest_nesting_chain();
  if (chain > E * E * E + E * E + E)
    rep.violations.push_back("nesting chain of length " +
                             std::to_string(chain) + " exceeds E^3+E^2+E");

  // Chains of container domains over a common base.
  const int n = ps.size();
  std::vector<int> height(n, -1);
  std::function<int(int)> h = [&](int i) {
    if (height[i] >= 0) return height[i];
    int best = 1;
    for (int j = 0; j < n; ++j) {
      if (!ps.domain(j).container_base || !ps.domain(i).container_base)
        continue;
      if (*ps.domain(j).container_base != *ps.domain(i).container_base)
        continue;
      if (ps.rel(j, i) == Rel::Nested) best = std::max(best, 1 + h(j));
    }
    return height[i] = best;
  };
  for (int i = 0; i < n; ++i) {
    if (!ps.domain(i).container_base) continue;
    if (h(i) > E * E + E)
      rep.violations.push_back("common-base container chain at " +
                               ps.domain(i).id + " exceeds E^2+E");
  }
  return rep;
}

ProtoStructure combine(
    const ProtoStructure& rel,
    const std::vector<std::pair<std::string, ProtoStructure>>& leaves) {
  // Designated domains must exist and be nesting-minimal.
  std::vector<int> designated;
  for (const auto& [id, leaf] : leaves) {
    const auto idx = rel.find(id);
    if (!idx)
      throw std::invalid_argument("designated domain not found: " + id);
    for (int j = 0; j < rel.size(); ++j)
      if (rel.rel(j, *idx) == Rel::Nested)
        throw std::invalid_argument("designated domain not minimal: " + id);
    designated.push_back(*idx);
  }

  int e0 = rel.hierarchy_constant();
  for (const auto& [id, leaf] : leaves)
    e0 = std::max(e0, leaf.hierarchy_constant());
  const int e1 = e0 * e0 + e0;
  ProtoStructure out(e1);

  // Kept rel domains, then every leaf domain under a qualified id.
  std::map<int, int> keep;  // rel index -> out index
  for (int i = 0; i < rel.size(); ++i) {
    if (std::find(designated.begin(), designated.end(), i) !=
        designated.end())
      continue;
    ProtoDomain d = rel.domain(i);
    keep[i] = out.add_domain(std::move(d));
  }
  struct LeafRef {
    int rel_index;
    const ProtoStructure* leaf;
    std::vector<int> out_index;  // per leaf domain
  };
  std::vector<LeafRef> refs;
  for (std::size_t l = 0; l < leaves.size(); ++l) {
    const auto& [id, leaf] = leaves[l];
    LeafRef ref{designated[static_cast<int>(l)], &leaf, {}};
    for (int i = 0; i < leaf.size(); ++i) {
      ProtoDomain d = leaf.domain(i);
      d.id = id + "/" + d.id;
      d.container_base.reset();
      d.container_family.clear();
      ref.out_index.push_back(out.add_domain(std::move(d)));
    }
    refs.push_back(std::move(ref));
  }

  auto lift = [&](const ProtoProjection* p, int diam_cap) {
    ProtoProjection q = p ? *p : ProtoProjection{"?", 0};
    q.diam = std::min(q.diam, diam_cap);
    return q;
  };

  // rel-to-rel entries are inherited wholesale.
  for (auto [i, oi] : keep)
    for (auto [j, oj] : keep) {
      if (i == j) continue;
      const Rel r = rel.rel(i, j);
      if (r != Rel::Transverse) out.set_relation(oi, oj, r);
      if (const auto* p = rel.projection(i, j))
        out.set_projection(oi, oj, *p);
    }

  // leaf-internal entries are inherited within each leaf.
  for (const auto& ref : refs) {
    const ProtoStructure& leaf = *ref.leaf;
    for (int i = 0; i < leaf.size(); ++i)
      for (int j = 0; j < leaf.size(); ++j) {
        if (i == j) continue;
        const Rel r = leaf.rel(i, j);
        if (r != Rel::Transverse)
          out.set_relation(ref.out_index[i], ref.out_index[j], r);
        if (const auto* p = leaf.projection(i, j))
          out.set_projection(ref.out_index[i], ref.out_index[j], *p);
      }
  }

  // leaf domain vs kept rel domain: the relation of the leaf's base.
  for (const auto& ref : refs) {
    const int v = ref.rel_index;
    for (auto [w, ow] : keep) {
      const Rel base_rel = rel.rel(v, w);
      for (int u = 0; u < ref.leaf->size(); ++u) {
        const int ou = ref.out_index[u];
        switch (base_rel) {
          case Rel::Nested:
            out.set_relation(ou, ow, Rel::Nested);
            out.set_projection(ou, ow, lift(rel.projection(v, w), e1));
            break;
          case Rel::Orthogonal:
            out.set_relation(ou, ow, Rel::Orthogonal);
            break;
          case Rel::Transverse: {
            out.set_relation(ou, ow, Rel::Transverse);
            out.set_projection(ou, ow, lift(rel.projection(v, w), e1));
            const ProtoProjection* back = rel.projection(w, v);
            out.set_projection(
                ow, ou,
                {"pull(" + (back ? back->set_id : std::string("?")) + ")",
                 e1});
            break;
          }
          default:
            throw std::logic_error(
                "designated domain unexpectedly comparable to kept domain");
        }
      }
    }
  }

  // leaf domain vs other leaf's domain: the relation of the two bases.
  for (std::size_t a = 0; a < refs.size(); ++a)
    for (std::size_t b = 0; b < refs.size(); ++b) {
      if (a == b) continue;
      const auto& ra = refs[a];
      const auto& rb = refs[b];
      const Rel base_rel = rel.rel(ra.rel_index, rb.rel_index);
      for (int i = 0; i < ra.leaf->size(); ++i)
        for (int j = 0; j < rb.leaf->size(); ++j) {
          const int oi = ra.out_index[i];
          const int oj = rb.out_index[j];
          if (base_rel == Rel::Orthogonal) {
            if (a < b) out.set_relation(oi, oj, Rel::Orthogonal);
          } else if (base_rel == Rel::Transverse) {
            if (a < b) out.set_relation(oi, oj, Rel::Transverse);
            const ProtoProjection* p =
                rel.projection(rb.rel_index, ra.rel_index);
            out.set_projection(
                oj, oi,
                {"pull(" + (p ? p->set_id : std::string("?")) + ")", e1});
          } else {
            throw std::logic_error("two minimal domains are comparable");
          }
        }
    }
  return out;
}

std::string proto_to_json_text(const ProtoStructure& ps) {
  nlohmann::json j;
  j["hierarchy_constant"] = ps.hierarchy_constant();
  j["domains"] = nlohmann::json::array();
  for (int i = 0; i < ps.size(); ++i) {
    const auto& d = ps.domain(i);
    nlohmann::json jd{{"id", d.id}};
    switch (d.flag) {
      case DiamFlag::Point:
        jd["flag"] = "point";
        break;
      case DiamFlag::Bounded:
        jd["flag"] = "bounded";
        jd["bound"] = d.bound;
        break;
      case DiamFlag::Unbounded:
        jd["flag"] = "unbounded";
        break;
    }
    j["domains"].push_back(jd);
  }
  j["relations"] = nlohmann::json::array();
  for (int a = 0; a < ps.size(); ++a)
    for (int b = 0; b < ps.size(); ++b) {
      if (a == b) continue;
      const Rel r = ps.rel(a, b);
      if (r == Rel::Nested)
        j["relations"].push_back({{"a", ps.domain(a).id},
                                  {"b", ps.domain(b).id},
                                  {"rel", "nested"}});
      else if (r == Rel::Orthogonal && a < b)
        j["relations"].push_back({{"a", ps.domain(a).id},
                                  {"b", ps.domain(b).id},
                                  {"rel", "orthogonal"}});
    }
  j["projections"] = nlohmann::json::array();
  for (int a = 0; a < ps.size(); ++a)
    for (int b = 0; b < ps.size(); ++b)
      if (const auto* p = ps.projection(a, b))
        j["projections"].push_back({{"from", ps.domain(a).id},
                                    {"to", ps.domain(b).id},
                                    {"set", p->set_id},
                                    {"diam", p->diam}});
  return j.dump(2);
}

ProtoStructure proto_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ProtoStructure ps(j.at("hierarchy_constant").get<int>());
  for (const auto& jd : j.at("domains")) {
    ProtoDomain d;
    d.id = jd.at("id").get<std::string>();
    const std::string flag = jd.value("flag", "unbounded");
    if (flag == "point")
      d.flag = DiamFlag::Point;
    else if (flag == "bounded") {
      d.flag = DiamFlag::Bounded;
      d.bound = jd.value("bound", 0);
    } else
      d.flag = DiamFlag::Unbounded;
    ps.add_domain(std::move(d));
  }
  for (const auto& jr : j.at("relations")) {
    const auto a = ps.find(jr.at("a").get<std::string>());
    const auto b = ps.find(jr.at("b").get<std::string>());
    if (!a || !b) throw std::invalid_argument("relation names unknown domain");
    const std::string r = jr.at("rel").get<std::string>();
    if (r == "nested")
      ps.set_relation(*a, *b, Rel::Nested);
    else if (r == "orthogonal")
      ps.set_relation(*a, *b, Rel::Orthogonal);
    else
      throw std::invalid_argument("unknown relation tag: " + r);
  }
  if (j.contains("projections"))
    for (const auto& jp : j.at("projections")) {
      const auto a = ps.find(jp.at("from").get<std::string>());
      const auto b = ps.find(jp.at("to").get<std::string>());
      if (!a || !b)
        throw std::invalid_argument("projection names unknown domain");
      ps.set_projection(*a, *b,
                        {jp.at("set").get<std::string>(),
                         jp.at("diam").get<int>()});
    }
  return ps;
}

ProtoStructure proto_from_graph(const DefiningGraph& g, int radius, int cap,
                                int sample_radius) {
  const auto ball = enumerate_ball(g, NormalForm::identity(g), radius, cap);
  std::vector<DomainClass> domains;
  for (const NormalForm& x : ball.elems)
    for (std::uint32_t m = 1; m <= g.all_vertices().mask(); ++m) {
      const Subgraph lam = Subgraph::from_mask(m);
      if (!lam.subset_of(g.all_vertices())) continue;
      DomainClass d = DomainClass::canonical(x, lam);
      if (std::find(domains.begin(), domains.end(), d) == domains.end())
        domains.push_back(std::move(d));
    }

  const int E = std::max(18, g.vertex_count());
  ProtoStructure ps(E);
  for (const auto& d : domains) {
    ProtoDomain pd;
    pd.id = "[" + d.rep.text() + ";" + g.subgraph_text(d.lam) + "]";
    if (d.lam.size() == 1) {
      const VertexId v = d.lam.vertices().front();
      if (g.spec(v).is_finite()) {
        pd.flag = DiamFlag::Bounded;
        pd.bound = static_cast<int>(*g.spec(v).order());
      } else {
        pd.flag = DiamFlag::Unbounded;
      }
    } else if (g.splits_as_join(d.lam)) {
      pd.flag = DiamFlag::Bounded;
      pd.bound = 2;
    } else {
      pd.flag = DiamFlag::Unbounded;
    }
    ps.add_domain(std::move(pd));
  }
  for (std::size_t i = 0; i < domains.size(); ++i)
    for (std::size_t j = 0; j < domains.size(); ++j) {
      if (i == j) continue;
      const Relation r = relate(domains[i], domains[j]);
      const int a = static_cast<int>(i);
      const int b = static_cast<int>(j);
      switch (r.tag) {
        case RelationTag::NestedInto:
          ps.set_relation(a, b, Rel::Nested);
          break;
        case RelationTag::Orthogonal:
          if (a < b) ps.set_relation(a, b, Rel::Orthogonal);
          break;
        case RelationTag::Transverse:
          if (a < b) ps.set_relation(a, b, Rel::Transverse);
          break;
        case RelationTag::NestedFrom:
          break;  // mirror handled by the (j, i) visit
        default:
          throw std::logic_error("distinct classes compare equal");
      }
    }
  for (std::size_t i = 0; i < domains.size(); ++i)
    for (std::size_t j = 0; j < domains.size(); ++j) {
      if (i == j) continue;
      const int a = static_cast<int>(i);
      const int b = static_cast<int>(j);
      if (ps.rel(a, b) != Rel::Nested && ps.rel(a, b) != Rel::Transverse)
        continue;
      const RelProjection rho =
          rel_projection(domains[i], domains[j], sample_radius, cap);
      int diam = 0;
      for (const auto& s : rho.samples)
        for (const auto& t : rho.samples)
          diam = std::max(diam, d_subgraph(domains[j].lam, s, t));
      ps.set_projection(a, b, {"rho(" + ps.domain(a).id + ")", diam});
    }
  return ps;
}

}  // namespace gp
