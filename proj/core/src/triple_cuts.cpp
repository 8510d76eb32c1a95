#include "tricut/triple_cuts.hpp"

#include <algorithm>

namespace tricut {

namespace {

// The unique 3-edge cut containing m, found by trying every way to replace
// each cut vertex with an incident edge. IntegrityError if two distinct
// 3-edge cuts contain m.
std::optional<VertexEdgeCut> unique_three_edge_extension(const Graph& g,
                                                         const VertexEdgeCut& m) {
  if (m.edge_count() == 3) return m;
  auto vs = m.cut_vertices.to_vector();
  std::vector<VertexEdgeCut> found;
  auto scan = [&](auto&& self, std::size_t idx, std::vector<Edge>& edges) -> void {
    if (idx == vs.size()) {
      if (is_cut(g, VertexSet{}, edges)) {
        VertexEdgeCut c = make_cut(g, VertexSet{}, edges);
        if (std::find(found.begin(), found.end(), c) == found.end())
          found.push_back(c);
      }
      return;
    }
    g.neighbors(vs[idx]).for_each([&](VertexId y) {
      Edge e(vs[idx], y);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) return;
      edges.push_back(e);
      self(self, idx + 1, edges);
      edges.pop_back();
    });
  };
  std::vector<Edge> edges = m.cut_edges;
  scan(scan, 0, edges);
  if (found.size() > 1)
    throw IntegrityError(to_string(m) + " has several 3-edge extensions");
  if (found.empty()) return std::nullopt;
  return found.front();
}

Part side_to_part(const CutSide& s) {
  return Part{s.vertices, s.boundary, s.vertices - s.boundary};
}

}  // namespace

bool set_contained_in_cut(VertexSet s, const VertexEdgeCut& m) {
  if (!m.cut_vertices.subset_of(s)) return false;
  for (const Edge& e : m.cut_edges)
    if (!s.intersects(e.ends())) return false;
  return s.subset_of(m.vertex_span());
}

std::vector<Cutset3> subordinated_trivials(const Graph& g, const Cutset3& s) {
  auto parts = parts_of(g, s);
  if (parts.size() != 3) return {};
  std::vector<Cutset3> out;
  for (VertexId a : s.v) {
    if (g.degree(a) != 3) continue;
    Cutset3 t = Cutset3::from_set(g.neighbors(a));
    bool all = true;
    for (const Part& pt : parts) all &= pt.interior.intersects(t.set());
    if (all) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TripleCut> build_triple_cut(const Graph& g, const Cutset3& s) {
  auto subs = subordinated_trivials(g, s);
  if (subs.empty()) return std::nullopt;
  auto aparts = parts_of(g, s);

  TripleCut f{s};
  f.subordinated = std::move(subs);
  for (int i = 0; i < 3; ++i) {
    const Part& a = aparts[i];
    f.line_parts[i] = a;

    VertexSet mv;
    std::vector<Edge> me;
    for (VertexId x : s.v) {
      if (g.degree(x) != 3) {
        mv.add(x);
        continue;
      }
      VertexSet into = g.neighbors(x) & a.interior;
      if (into.count() != 1)
        throw IntegrityError("degree-3 line vertex " + std::to_string(x) +
                             " has no unique neighbor inside a part of " +
                             to_string(s));
      me.emplace_back(x, into.min_vertex());
    }
    VertexEdgeCut m = [&] {
      try {
        return make_cut(g, mv, std::move(me));
      } catch (const InputError& err) {
        throw IntegrityError("replacing line vertices of " + to_string(s) +
                             " did not yield a cut: " + err.what());
      }
    }();
    auto mp = unique_three_edge_extension(g, m);
    f.cuts[i] = m;
    f.extended[i] = mp ? *mp : m;

    VertexSet rest = g.vertices() - a.interior;  // A_{i+1} ∪ A_{i+2}
    auto pick_inner = [&](const VertexEdgeCut& cut, VertexSet within) {
      auto ss = sides(g, cut);
      int inner = ss[0].vertices.subset_of(within) ? 0 : 1;
      if (!ss[inner].vertices.subset_of(within) ||
          ss[1 - inner].vertices != rest)
        throw IntegrityError("sides of " + to_string(cut) +
                             " do not match the parts of " + to_string(s));
      return side_to_part(ss[inner]);
    };
    f.parts[i] = pick_inner(m, a.vertices);
    if ((f.parts[i].vertices | m.vertex_span()) != a.vertices)
      throw IntegrityError("neighborhood of the inner part of " + to_string(m) +
                           " is not the owning part of " + to_string(s));
    f.extended_parts[i] = pick_inner(f.extended[i], f.parts[i].vertices);

    f.vertex_set |= m.vertex_span();
    f.neighborhood |= f.extended[i].vertex_span();
  }
  return f;
}

std::vector<Cutset3> triple_cut_inner_sets(const Graph& g, const TripleCut& f) {
  std::vector<Cutset3> out{f.line};
  out.insert(out.end(), f.subordinated.begin(), f.subordinated.end());
  for (int i = 0; i < 3; ++i)
    if (!classify_cut(g, f.cuts[i]).trivial)
      for (const Cutset3& s : inner_sets(g, f.cuts[i])) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // Every 3-cutset inside V(F) must be an inner set or a boundary T_i, and
  // every 3-cutset inside O(F) must be subordinated to the line or
  // contained in some M'_i.
  auto each_triple = [&](VertexSet range, auto&& check) {
    auto vs = range.to_vector();
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y)
        for (std::size_t z = y + 1; z < vs.size(); ++z) {
          Cutset3 t(vs[x], vs[y], vs[z]);
          if (is_cutset(g, t)) check(t);
        }
  };
  each_triple(f.vertex_set, [&](const Cutset3& t) {
    if (std::binary_search(out.begin(), out.end(), t)) return;
    for (int i = 0; i < 3; ++i)
      if (f.parts[i].boundary == t.set()) return;
    throw IntegrityError(to_string(t) + " inside the triple cut of " +
                         to_string(f.line) + " is neither inner nor a boundary");
  });
  each_triple(f.neighborhood, [&](const Cutset3& t) {
    if (std::find(f.subordinated.begin(), f.subordinated.end(), t) !=
        f.subordinated.end())
      return;
    for (int i = 0; i < 3; ++i)
      if (set_contained_in_cut(t.set(), f.extended[i])) return;
    throw IntegrityError(to_string(t) + " inside the neighborhood of " +
                         to_string(f.line) + " escapes the extended cuts");
  });
  return out;
}

}  // namespace tricut
