#include "tricut/cuts.hpp"

#include <algorithm>

namespace tricut {

std::string to_string(const VertexEdgeCut& m) {
  std::string out = "{";
  bool first = true;
  m.cut_vertices.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  for (const Edge& e : m.cut_edges) {
    if (!first) out += ",";
    out += to_string(e);
    first = false;
  }
  return out + "}";
}

static bool incidence_free(VertexSet vs, const std::vector<Edge>& es) {
  for (const Edge& e : es)
    if (vs.intersects(e.ends())) return false;
  return true;
}

bool is_cut(const Graph& g, VertexSet vs, const std::vector<Edge>& es) {
  if (vs.count() + int(es.size()) != 3) return false;
  if (!incidence_free(vs, es)) return false;
  return components_after_removal(g, vs, es).size() > 1;
}

VertexEdgeCut make_cut(const Graph& g, VertexSet vs, std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw InputError("duplicate cut edge");
  if (vs.count() + int(es.size()) != 3) throw InputError("cut must have 3 elements");
  vs.for_each([&](VertexId v) { g.require_vertex(v); });
  for (const Edge& e : es)
    if (!g.has_edge(e)) throw InputError("cut edge not in graph: " + to_string(e));
  if (!incidence_free(vs, es)) throw InputError("cut vertex incident to cut edge");

  auto comps = components_after_removal(g, vs, es);
  if (comps.size() < 2) throw InputError("elements do not disconnect the graph");

  VertexEdgeCut m{vs, std::move(es), VertexSet{}};
  if (!m.cut_edges.empty()) {
    if (comps.size() != 2)
      throw IntegrityError("edge cut with " + std::to_string(comps.size()) + " components");
    m.side1 = g.vertices() - comps[1];
  }
  return m;
}

VertexEdgeCut as_cut(const Graph& g, const Cutset3& s) {
  return make_cut(g, s.set(), {});
}

std::vector<VertexEdgeCut> enumerate_cuts(const Graph& g) {
  if (!is_triconnected(g)) throw PreconditionError("graph is not triconnected");
  const auto& all_edges = g.edges();
  std::size_t ec = all_edges.size();
  std::vector<VertexEdgeCut> out;

  auto scan_vertices = [&](std::vector<Edge> es, int nv) {
    VertexSet forbidden;
    for (const Edge& e : es) forbidden |= e.ends();
    std::vector<VertexId> free = (g.vertices() - forbidden).to_vector();
    auto emit = [&](VertexSet vs) {
      if (components_after_removal(g, vs, es).size() > 1)
        out.push_back(make_cut(g, vs, es));
    };
    if (nv == 0) {
      emit(VertexSet{});
    } else if (nv == 1) {
      for (VertexId a : free) emit(VertexSet::single(a));
    } else {
      for (std::size_t i = 0; i < free.size(); ++i)
        for (std::size_t j = i + 1; j < free.size(); ++j)
          emit(VertexSet::of({free[i], free[j]}));
    }
  };

  for (std::size_t i = 0; i < ec; ++i) {
    scan_vertices({all_edges[i]}, 2);
    for (std::size_t j = i + 1; j < ec; ++j) {
      scan_vertices({all_edges[i], all_edges[j]}, 1);
      for (std::size_t k = j + 1; k < ec; ++k)
        scan_vertices({all_edges[i], all_edges[j], all_edges[k]}, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<CutSide, 2> sides(const Graph& g, const VertexEdgeCut& m) {
  if (m.cut_edges.empty()) throw InputError("sides of a pure vertex cut");
  VertexSet span = m.vertex_span();
  VertexSet g1 = m.side1;
  VertexSet g2 = (g.vertices() - g1) | m.cut_vertices;
  auto mk = [&](VertexSet s) { return CutSide{s, s & span, s | span}; };
  return {mk(g1), mk(g2)};
}

std::optional<VertexEdgeCut> complement_by_edge(const Graph& g, const VertexEdgeCut& m,
                                                VertexId x, VertexId y) {
  if (!m.cut_vertices.contains(x)) throw InputError("x is not a cut vertex");
  if (!g.adjacent(x, y)) throw InputError("xy is not an edge");
  auto comps = components_after_removal(g, m.cut_vertices, m.cut_edges);
  const VertexSet* home = nullptr;
  for (const VertexSet& c : comps)
    if (c.contains(y)) { home = &c; break; }
  if (!home) return std::nullopt;  // y is itself a cut vertex
  if ((g.neighbors(x) & *home) != VertexSet::single(y)) return std::nullopt;

  std::vector<Edge> es = m.cut_edges;
  es.emplace_back(x, y);
  try {
    return make_cut(g, m.cut_vertices - VertexSet::single(x), std::move(es));
  } catch (const InputError& err) {
    throw IntegrityError(std::string("complement of ") + to_string(m) + " by " +
                         to_string(Edge(x, y)) + " is not a cut: " + err.what());
  }
}

static std::vector<VertexEdgeCut> successors(const Graph& g, const VertexEdgeCut& m) {
  std::vector<VertexEdgeCut> next;
  m.cut_vertices.for_each([&](VertexId x) {
    g.neighbors(x).for_each([&](VertexId y) {
      if (auto c = complement_by_edge(g, m, x, y)) next.push_back(*c);
    });
  });
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  if (m.edge_count() == 2 && next.size() > 1)
    throw IntegrityError("two-edge cut " + to_string(m) + " has multiple complements");
  return next;
}

bool is_maximal_cut(const Graph& g, const VertexEdgeCut& m) {
  return successors(g, m).empty();
}

std::vector<VertexEdgeCut> maximal_extensions(const Graph& g, const VertexEdgeCut& m) {
  std::vector<VertexEdgeCut> seen{m}, queue{m}, out;
  while (!queue.empty()) {
    VertexEdgeCut cur = queue.back();
    queue.pop_back();
    auto next = successors(g, cur);
    if (next.empty()) {
      out.push_back(cur);
      continue;
    }
    for (VertexEdgeCut& c : next)
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        seen.push_back(c);
        queue.push_back(std::move(c));
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CutKind classify_cut(const Graph& g, const VertexEdgeCut& m) {
  auto comps = components_after_removal(g, m.cut_vertices, m.cut_edges);
  VertexSet span = m.vertex_span();
  bool trivial = false, degenerate = false;
  for (const VertexSet& c : comps) {
    if (c.count() == 1) trivial = true;
    if ((c - span).empty()) degenerate = true;
  }
  return {trivial, degenerate};
}

std::array<Cutset3, 2> boundary_sets(const Graph& g, const VertexEdgeCut& m) {
  auto ss = sides(g, m);
  if (ss[0].boundary.count() != 3 || ss[1].boundary.count() != 3)
    throw InputError("cut boundary is not a vertex triple (trivial cut)");
  return {Cutset3::from_set(ss[0].boundary), Cutset3::from_set(ss[1].boundary)};
}

std::vector<Cutset3> inner_sets(const Graph& g, const VertexEdgeCut& m) {
  if (classify_cut(g, m).trivial) throw InputError("inner sets of a trivial cut");
  if (m.cut_edges.empty()) return {};
  auto ss = sides(g, m);
  int e = m.edge_count();
  std::vector<Cutset3> out;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    VertexSet sel = m.cut_vertices;
    for (int i = 0; i < e; ++i) {
      const Edge& ed = m.cut_edges[std::size_t(i)];
      VertexId side1_end = m.side1.contains(ed.a) ? ed.a : ed.b;
      sel.add((mask >> i) & 1 ? ed.other(side1_end) : side1_end);
    }
    if (sel == ss[0].boundary || sel == ss[1].boundary) continue;
    Cutset3 s = Cutset3::from_set(sel);
    if (!is_cutset(g, s) || parts_of(g, s).size() != 2 ||
        !separates(g, sel, ss[0].vertices - sel, ss[1].vertices - sel))
      throw IntegrityError("inner set " + to_string(s) + " of " + to_string(m) +
                           " does not split the cut sides");
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  if (int(out.size()) != (1 << e) - 2)
    throw IntegrityError("inner set count mismatch for " + to_string(m));
  return out;
}

bool is_singular_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw InputError("not an edge: " + to_string(e));
  std::vector<VertexSet> pairs;
  VertexSet candidates = g.vertices() - e.ends();
  std::vector<VertexId> vs = candidates.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      VertexSet p = VertexSet::of({vs[i], vs[j]});
      if (is_cut(g, p, {e})) pairs.push_back(p);
    }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (!pairs[i].intersects(pairs[j])) return true;
  return false;
}

bool cut_contains(const VertexEdgeCut& big, const VertexEdgeCut& small) {
  if (!big.cut_vertices.subset_of(small.cut_vertices)) return false;
  for (const Edge& e : small.cut_edges)
    if (std::find(big.cut_edges.begin(), big.cut_edges.end(), e) == big.cut_edges.end())
      return false;
  VertexSet extra = small.cut_vertices - big.cut_vertices;
  VertexSet picked;
  for (const Edge& e : big.cut_edges) {
    if (std::find(small.cut_edges.begin(), small.cut_edges.end(), e) != small.cut_edges.end())
      continue;
    VertexSet hit = e.ends() & extra;
    if (hit.count() != 1 || hit.intersects(picked)) return false;
    picked |= hit;
  }
  return picked == extra;
}

}  // namespace tricut
