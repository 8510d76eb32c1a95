#include "tricut/cutsets.hpp"

#include <algorithm>

namespace tricut {

Cutset3::Cutset3(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw InputError("cutset vertices not distinct");
}

Cutset3 Cutset3::from_set(VertexSet s) {
  if (s.count() != 3) throw InputError("cutset must have exactly 3 vertices");
  auto vs = s.to_vector();
  return Cutset3(vs[0], vs[1], vs[2]);
}

std::string to_string(const Cutset3& s) { return to_string(s.set()); }

bool is_cutset(const Graph& g, const Cutset3& s) {
  return components_after_removal(g, s.set()).size() > 1;
}

std::vector<Cutset3> enumerate_cutsets(const Graph& g) {
  if (!is_triconnected(g))
    throw PreconditionError("graph is not triconnected");
  if (g.vertex_count() <= 6)
    throw PreconditionError("graph has 6 or fewer vertices");
  std::vector<Cutset3> out;
  int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c) {
        Cutset3 s(a, b, c);
        if (is_cutset(g, s)) out.push_back(s);
      }
  return out;
}

bool splits(const Graph& g, VertexSet r, VertexSet x) {
  VertexSet rest = x - r;
  if (rest.count() < 2) return false;
  auto comps = components_after_removal(g, r);
  int touched = 0;
  for (const VertexSet& c : comps)
    if (c.intersects(rest)) ++touched;
  return touched >= 2;
}

bool separates(const Graph& g, VertexSet r, VertexSet u, VertexSet w) {
  if (u.subset_of(r) || w.subset_of(r)) return false;
  auto comps = components_after_removal(g, r);
  for (const VertexSet& c : comps)
    if (c.intersects(u - r) && c.intersects(w - r)) return false;
  return true;
}

std::vector<Part> parts_of(const Graph& g, const Cutset3& s) {
  auto comps = components_after_removal(g, s.set());
  if (comps.size() < 2) throw InputError(to_string(s) + " is not a cutset");
  std::vector<Part> parts;
  for (const VertexSet& h : comps)
    parts.push_back(Part{h | s.set(), s.set(), h});
  sort_parts(parts);
  return parts;
}

void sort_parts(std::vector<Part>& parts) {
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.vertices.count() != b.vertices.count())
      return a.vertices.count() > b.vertices.count();
    if (a.vertices.min_vertex() != b.vertices.min_vertex())
      return a.vertices.min_vertex() < b.vertices.min_vertex();
    return a.vertices < b.vertices;
  });
}

std::vector<Part> decompose(const Graph& g, std::span<const Cutset3> family) {
  VertexSet boundary_union;
  for (const Cutset3& s : family) {
    if (!is_cutset(g, s)) throw InputError(to_string(s) + " is not a cutset");
    boundary_union |= s.set();
  }

  // Incremental refinement: the maximal unsplit sets of S1..Sk+1 are the
  // maximal elements of pairwise intersections of the previous parts with
  // the parts of Sk+1.
  std::vector<VertexSet> current{g.vertices()};
  for (const Cutset3& s : family) {
    auto sparts = parts_of(g, s);
    std::vector<VertexSet> next;
    for (VertexSet a : current)
      for (const Part& f : sparts) {
        VertexSet cand = a & f.vertices;
        if (!cand.empty()) next.push_back(cand);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<VertexSet> maximal;
    for (VertexSet a : next) {
      bool dominated = false;
      for (VertexSet b : next)
        if (a != b && a.subset_of(b)) { dominated = true; break; }
      if (!dominated) maximal.push_back(a);
    }
    current = std::move(maximal);
  }

  std::vector<Part> parts;
  for (VertexSet a : current)
    parts.push_back(Part{a, a & boundary_union, a - boundary_union});
  sort_parts(parts);
  return parts;
}

bool dependent(const Graph& g, const Cutset3& s, const Cutset3& t) {
  if (s == t) return false;
  return splits(g, s.set(), t.set()) || splits(g, t.set(), s.set());
}

std::vector<std::vector<Cutset3>> dependence_components(const Graph& g,
                                                        std::span<const Cutset3> family) {
  std::vector<Cutset3> members(family.begin(), family.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const Cutset3& s : members)
    if (!is_cutset(g, s)) throw InputError(to_string(s) + " is not a cutset");

  std::size_t n = members.size();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Cutset3>> components;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> stack{i};
    assigned[i] = true;
    std::vector<Cutset3> comp;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(members[cur]);
      for (std::size_t j = 0; j < n; ++j)
        if (!assigned[j] && dependent(g, members[cur], members[j])) {
          assigned[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace tricut
