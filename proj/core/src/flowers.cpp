#include "tricut/flowers.hpp"

#include <algorithm>
#include <map>

namespace tricut {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

// Union of parts i, i+1, ..., j-1 (cyclic) — the vertex set G_{i,j}.
VertexSet part_union(const Flower& f, int i, int j) {
  int m = f.petal_count();
  VertexSet out;
  for (int x = wrap(i, m); x != wrap(j, m); x = wrap(x + 1, m))
    out |= f.parts[x].vertices;
  return out;
}

// Rotate/reflect the petal cycle to its lexicographically minimal form and
// realign parts[i] with the pair (petals[i], petals[i+1]).
void canonicalize(Flower& f) {
  int m = f.petal_count();
  std::map<std::pair<VertexId, VertexId>, Part> by_pair;
  for (int i = 0; i < m; ++i) {
    VertexId a = f.petals[i], b = f.petals[(i + 1) % m];
    by_pair[std::minmax(a, b)] = f.parts[i];
  }
  std::vector<VertexId> best = f.petals;
  for (int start = 0; start < m; ++start)
    for (int dir : {1, -1}) {
      std::vector<VertexId> cand(m);
      for (int k = 0; k < m; ++k) cand[k] = f.petals[wrap(start + dir * k, m)];
      if (cand < best) best = cand;
    }
  f.petals = std::move(best);
  for (int i = 0; i < m; ++i) {
    VertexId a = f.petals[i], b = f.petals[(i + 1) % m];
    f.parts[i] = by_pair.at(std::minmax(a, b));
  }
}

// Every 3-cutset through p, in sorted order.
std::vector<Cutset3> cutsets_through(const Graph& g, VertexId p) {
  std::vector<Cutset3> out;
  int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a) {
    if (a == p) continue;
    for (VertexId b = a + 1; b < n; ++b) {
      if (b == p) continue;
      Cutset3 s(p, a, b);
      if (is_cutset(g, s)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_degenerate_flower(const Graph& g, const Flower& f) {
  if (f.petal_count() != 4) return false;
  VertexSet vf = f.vertex_set();
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (vf.contains(w)) continue;
    // Look for a 3-edge cut whose six ends are exactly V(F) + w: try every
    // perfect matching of those six vertices by graph edges.
    auto six = (vf | VertexSet::single(w)).to_vector();
    auto match = [&](auto&& self, VertexSet used, std::vector<Edge>& picked) -> bool {
      if (int(picked.size()) == 3) return is_cut(g, VertexSet{}, picked);
      VertexId a = -1;
      for (VertexId v : six)
        if (!used.contains(v)) { a = v; break; }
      for (VertexId b : six) {
        if (b <= a || used.contains(b) || !g.adjacent(a, b)) continue;
        picked.emplace_back(a, b);
        if (self(self, used | VertexSet::of({a, b}), picked)) return true;
        picked.pop_back();
      }
      return false;
    };
    std::vector<Edge> picked;
    if (match(match, VertexSet{}, picked)) return true;
  }
  return false;
}

FlowerKind classify_impl(const Graph& g, const Flower& f) {
  FlowerKind kind{is_degenerate_flower(g, f), g.degree(f.center) == 3};
  int m = f.petal_count();
  if (kind.degenerate) {
    bool pattern = false;
    for (int i = 0; i < 2; ++i)
      pattern |= f.parts[i].is_empty() && f.parts[i + 2].is_empty();
    if (m != 4 || !pattern)
      throw IntegrityError(to_string(f) + " degenerate without the 4-petal pattern");
  }
  if (kind.singular && !kind.degenerate && f.maximal) {
    int nonempty = 0;
    for (const Part& pt : f.parts)
      if (!pt.is_empty()) ++nonempty;
    if (nonempty < 2 || nonempty > 3 || m > 6)
      throw IntegrityError(to_string(f) + " violates the singular-flower census");
  }
  return kind;
}

std::vector<VertexId> compute_u(const Graph& g, const Flower& f) {
  int m = f.petal_count();
  VertexId p = f.center;
  VertexSet nbp = g.neighbors(p);
  std::vector<VertexId> us(m, p);
  for (int i = 0; i < m; ++i) {
    const Part& pt = f.parts[i];
    if (f.singular) {
      if (pt.is_empty()) continue;
      VertexSet cand = pt.vertices & nbp;
      if (cand.count() != 1 || !cand.subset_of(pt.interior))
        throw IntegrityError("part " + to_string(pt.vertices) + " of " + to_string(f) +
                             " lacks a unique interior center-neighbor");
      us[i] = cand.min_vertex();
    } else if (f.parts[wrap(i - 1, m)].is_empty() && f.parts[wrap(i + 1, m)].is_empty()) {
      VertexSet cand = pt.vertices & nbp;
      if (cand.count() == 1) us[i] = cand.min_vertex();
    }
  }
  return us;
}

}  // namespace

VertexId Flower::petal(int i) const { return petals[wrap(i, petal_count())]; }

const Part& Flower::part(int i) const { return parts[wrap(i, petal_count())]; }

VertexSet Flower::vertex_set() const {
  VertexSet s = VertexSet::single(center);
  for (VertexId q : petals) s.add(q);
  return s;
}

Cutset3 Flower::boundary(int i) const {
  return Cutset3(center, petal(i), petal(i + 1));
}

std::vector<Cutset3> Flower::inner_sets() const {
  int m = petal_count();
  std::vector<Cutset3> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // neighboring across the wrap
      out.emplace_back(center, petals[i], petals[j]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Flower& f) {
  std::string s = "(" + std::to_string(f.center) + ";";
  for (std::size_t i = 0; i < f.petals.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.petals[i]);
  return s + ")";
}

std::optional<Flower> generate_flower(const Graph& g, std::span<const Cutset3> family) {
  if (family.size() < 2) throw InputError("flower family needs at least two cutsets");
  if (dependence_components(g, family).size() != 1)
    throw InputError("flower family is not dependence-connected");

  auto parts = decompose(g, family);
  for (const Part& pt : parts)
    if (pt.is_small()) return std::nullopt;

  VertexSet common = family[0].set();
  VertexSet all;
  for (const Cutset3& s : family) {
    common &= s.set();
    all |= s.set();
  }
  if (common.count() != 1) return std::nullopt;
  VertexId p = common.min_vertex();
  VertexSet petal_set = all - common;
  int m = petal_set.count();
  if (m < 4 || int(parts.size()) != m) return std::nullopt;

  // Each part boundary must be {p, a, b} with petals a, b; consecutive
  // parts share one petal, so the pairs form a single m-cycle.
  std::map<VertexId, std::vector<std::pair<VertexId, int>>> ring;
  for (int i = 0; i < m; ++i) {
    const Part& pt = parts[i];
    if (pt.boundary.count() != 3 || !pt.boundary.contains(p)) return std::nullopt;
    auto qs = (pt.boundary - common).to_vector();
    if (!petal_set.contains(qs[0]) || !petal_set.contains(qs[1])) return std::nullopt;
    ring[qs[0]].emplace_back(qs[1], i);
    ring[qs[1]].emplace_back(qs[0], i);
  }
  for (auto& [q, nb] : ring)
    if (nb.size() != 2) return std::nullopt;

  Flower f;
  f.center = p;
  VertexId start = petal_set.min_vertex();
  VertexId prev = start, cur = ring[start][0].first;
  f.petals.push_back(start);
  f.parts.push_back(parts[ring[start][0].second]);
  while (cur != start) {
    f.petals.push_back(cur);
    auto& nb = ring[cur];
    auto [next, pi] = nb[0].first == prev ? nb[1] : nb[0];
    f.parts.push_back(parts[pi]);
    prev = cur;
    cur = next;
  }
  if (f.petal_count() != m) return std::nullopt;
  canonicalize(f);

  // The family must consist of inner sets of the reconstructed flower.
  auto inner = f.inner_sets();
  for (const Cutset3& s : family)
    if (!std::binary_search(inner.begin(), inner.end(), s)) return std::nullopt;

  // Every inner set must split the graph into exactly G_{i,j} and G_{j,i};
  // boundaries are cutsets exactly for nonempty parts, with G_{i+1,i} a part.
  auto part_sets = [&](const Cutset3& s) {
    std::vector<VertexSet> vs;
    for (const Part& pt : parts_of(g, s)) vs.push_back(pt.vertices);
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      Cutset3 q(p, f.petals[i], f.petals[j]);
      if (!is_cutset(g, q)) return std::nullopt;
      std::vector<VertexSet> expect{part_union(f, i, j), part_union(f, j, i)};
      std::sort(expect.begin(), expect.end());
      if (part_sets(q) != expect) return std::nullopt;
    }
    Cutset3 b = f.boundary(i);
    if (f.parts[i].is_empty()) {
      if (is_cutset(g, b)) return std::nullopt;
    } else {
      if (!is_cutset(g, b)) return std::nullopt;
      VertexSet rest = part_union(f, i + 1, i);
      auto ps = part_sets(b);
      if (std::find(ps.begin(), ps.end(), rest) == ps.end()) return std::nullopt;
    }
  }
  return f;
}

Flower maximal_flower(const Graph& g, const Flower& f) {
  auto family = cutsets_through(g, f.center);
  auto comps = dependence_components(g, family);
  auto inner = f.inner_sets();
  const std::vector<Cutset3>* home = nullptr;
  for (const auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), inner[0])) { home = &c; break; }
  if (!home) throw IntegrityError(to_string(inner[0]) + " is not a cutset of the graph");
  for (const Cutset3& s : inner)
    if (!std::binary_search(home->begin(), home->end(), s))
      throw IntegrityError("inner sets of " + to_string(f) +
                           " span several dependence components");

  auto res = generate_flower(g, *home);
  if (!res || res->center != f.center || !f.vertex_set().subset_of(res->vertex_set()))
    throw IntegrityError("closure of " + to_string(f) + " does not generate a flower");
  res->maximal = true;
  FlowerKind kind = classify_impl(g, *res);
  res->degenerate = kind.degenerate;
  res->singular = kind.singular;
  return *res;
}

FlowerKind classify_flower(const Graph& g, const Flower& f) {
  if (!f.maximal) throw InputError("classify_flower needs a maximal flower");
  return classify_impl(g, f);
}

FlowerNeighborhood flower_neighborhood(const Graph& g, const Flower& f) {
  if (!f.maximal || f.degenerate)
    throw InputError("flower neighborhood needs a maximal nondegenerate flower");
  int m = f.petal_count();
  FlowerNeighborhood out;
  out.u_vertices = compute_u(g, f);

  for (int i = 0; i < m; ++i)
    if (out.u_vertices[i] != f.center) out.center_neighborhood.add(out.u_vertices[i]);
  for (int j = 0; j < m; ++j)
    if (f.parts[wrap(j - 1, m)].is_empty() && f.parts[j].is_empty() &&
        out.u_vertices[wrap(j - 2, m)] != f.center &&
        out.u_vertices[wrap(j + 1, m)] != f.center)
      out.center_neighborhood.add(f.petals[j]);

  out.neighborhood = f.vertex_set();
  for (VertexId u : out.u_vertices) out.neighborhood.add(u);

  if (f.singular) {
    if (out.center_neighborhood != g.neighbors(f.center))
      throw IntegrityError("T(p) of " + to_string(f) +
                           " does not match the center's neighbors");
    for (int i = 0; i < m; ++i) {
      bool shrinks = out.u_vertices[i] != f.center ||
                     (f.parts[i].is_empty() &&
                      (out.u_vertices[wrap(i - 1, m)] != f.center ||
                       out.u_vertices[wrap(i + 1, m)] != f.center));
      if (!shrinks)
        throw IntegrityError("singular flower " + to_string(f) +
                             " has a part with G' = G");
    }
  }
  return out;
}

FlowerBoundaryCuts boundary_cuts(const Graph& g, const Flower& f, int i) {
  if (!f.maximal || f.degenerate)
    throw InputError("boundary cuts need a maximal nondegenerate flower");
  int m = f.petal_count();
  if (i < 0 || i >= m) throw InputError("part index out of range");
  auto us = compute_u(g, f);
  VertexId p = f.center;
  VertexId qi = f.petal(i), qi1 = f.petal(i + 1);

  FlowerBoundaryCuts out;
  out.u = us[i];
  out.m_vertices = VertexSet::single(p);
  auto take = [&](int empty_part, VertexId qa, VertexId qb, VertexId keep) {
    if (f.part(empty_part).is_empty()) {
      if (!g.adjacent(qa, qb))
        throw IntegrityError("empty part of " + to_string(f) +
                             " without adjacent petals");
      out.m_edges.emplace_back(qa, qb);
    } else {
      out.m_vertices.add(keep);
    }
  };
  take(i - 1, f.petal(i - 1), qi, qi);
  take(i + 1, qi1, f.petal(i + 2), qi1);
  std::sort(out.m_edges.begin(), out.m_edges.end());

  if (is_cut(g, out.m_vertices, out.m_edges))
    out.m = make_cut(g, out.m_vertices, out.m_edges);

  if (out.m) {
    // By the boundary-cut complement rule the only candidate edges are p·x
    // with x an interior center-neighbor of the part.
    (f.parts[i].interior & g.neighbors(p)).for_each([&](VertexId x) {
      auto c = complement_by_edge(g, *out.m, p, x);
      if (!c) return;
      if (out.m_star)
        throw IntegrityError(to_string(*out.m) + " has two center complements");
      out.m_star = std::move(c);
    });
  }

  if (out.u != p) {
    if (!out.m_star ||
        std::find(out.m_star->cut_edges.begin(), out.m_star->cut_edges.end(),
                  Edge(p, out.u)) == out.m_star->cut_edges.end())
      throw IntegrityError("u vertex of " + to_string(f) +
                           " without the matching complemented cut");
    out.m_prime = out.m_star;
    out.m_prime_vertices = out.m_star->cut_vertices;
    out.m_prime_edges = out.m_star->cut_edges;
    out.q_prime = Cutset3(qi, out.u, qi1);
  } else {
    out.m_prime = out.m;
    out.m_prime_vertices = out.m_vertices;
    out.m_prime_edges = out.m_edges;
    out.q_prime = Cutset3(p, qi, qi1);
  }

  const Part& pt = f.parts[i];
  bool shrink = out.u != p ||
                (pt.is_empty() &&
                 (us[wrap(i - 1, m)] != p || us[wrap(i + 1, m)] != p));
  out.g_prime = shrink ? pt.vertices - VertexSet::single(p) : pt.vertices;
  out.g_prime_neighborhood =
      out.m_prime && !out.m_prime_edges.empty()
          ? out.g_prime | out.m_prime->vertex_span()
          : out.g_prime;
  return out;
}

std::optional<VertexId> wheel_hub(const Graph& g) {
  int n = g.vertex_count();
  if (n < 5) return std::nullopt;
  for (VertexId h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    bool rim = true;
    for (VertexId v = 0; v < n && rim; ++v)
      if (v != h && g.degree(v) != 3) rim = false;
    if (!rim) continue;
    // Degree-2 on the rim plus connectivity of G - h makes it one cycle.
    if (components_after_removal(g, VertexSet::single(h)).size() == 1) return h;
  }
  return std::nullopt;
}

}  // namespace tricut
