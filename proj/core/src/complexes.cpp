#include "tricut/complexes.hpp"

#include <algorithm>

namespace tricut {

namespace {

bool contains_in(VertexSet t, VertexSet cut_vertices, std::span<const Edge> edges) {
  if (!cut_vertices.subset_of(t)) return false;
  VertexSet span = cut_vertices;
  for (const Edge& e : edges) {
    if (!t.intersects(e.ends())) return false;
    span |= e.ends();
  }
  return t.subset_of(span);
}

bool is_trivial_cutset(const Graph& g, const Cutset3& t) {
  for (const Part& p : parts_of(g, t))
    if (p.interior.count() == 1) return true;
  return false;
}

PartClass classify_part(const Part& p) {
  if (p.is_small()) return PartClass::small;
  if (p.is_empty()) return PartClass::empty;
  return PartClass::normal;
}

std::vector<Cutset3> members_inside(std::span<const Cutset3> all, VertexSet range,
                                    std::span<const Cutset3> excluded) {
  std::vector<Cutset3> out;
  for (const Cutset3& t : all)
    if (t.set().subset_of(range) &&
        std::find(excluded.begin(), excluded.end(), t) == excluded.end())
      out.push_back(t);
  return out;
}

VertexSet union_of(std::span<const Cutset3> members) {
  VertexSet s;
  for (const Cutset3& t : members) s |= t.set();
  return s;
}

// All maximal nondegenerate flowers: for every vertex p, each dependence
// component of the cutsets through p that generates a flower yields the
// unique maximal flower with center p over that component.
std::vector<Flower> maximal_nondegenerate_flowers(const Graph& g,
                                                  std::span<const Cutset3> all) {
  std::vector<Flower> out;
  g.vertices().for_each([&](VertexId p) {
    std::vector<Cutset3> through;
    for (const Cutset3& t : all)
      if (t.contains(p)) through.push_back(t);
    for (const auto& comp : dependence_components(g, through)) {
      if (comp.size() < 2) continue;
      auto seed = generate_flower(g, comp);
      if (!seed) continue;
      Flower f = maximal_flower(g, *seed);
      if (!f.degenerate) out.push_back(std::move(f));
    }
  });
  return out;
}

Complex make_triple_complex(const Graph& g, std::span<const Cutset3> all,
                            TripleCut f) {
  std::vector<Cutset3> bounds;
  for (const Part& b : f.extended_parts)
    if (b.boundary.count() == 3) bounds.push_back(Cutset3::from_set(b.boundary));
  std::sort(bounds.begin(), bounds.end());

  Complex c{ComplexKind::triple, members_inside(all, f.neighborhood, bounds),
            std::move(bounds)};
  for (const Cutset3& t : triple_cut_inner_sets(g, f))
    if (!std::binary_search(c.members.begin(), c.members.end(), t))
      throw IntegrityError("inner set " + to_string(t) +
                           " of the triple cut escaped its complex");
  c.vertex_set = union_of(c.members);
  c.triple_source = std::move(f);
  return c;
}

Complex make_flower_complex(const Graph& g, std::span<const Cutset3> all,
                            Flower f) {
  FlowerNeighborhood nb = flower_neighborhood(g, f);
  std::vector<FlowerBoundaryCuts> bcs;
  for (int i = 0; i < f.petal_count(); ++i) bcs.push_back(boundary_cuts(g, f, i));

  std::vector<Cutset3> bounds;
  for (const FlowerBoundaryCuts& bc : bcs)
    if (bc.g_prime.count() >= 3) bounds.push_back(bc.q_prime);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<Cutset3> mem;
  for (const Cutset3& t : all)
    if (t.set().subset_of(nb.neighborhood) && splits(g, t.set(), nb.neighborhood))
      mem.push_back(t);

  // Every member must be an inner set of the flower, the neighborhood of a
  // singular center, or lie in a boundary cut without being its shrunk
  // boundary; boundaries never belong to the complex.
  auto inner = f.inner_sets();
  for (const Cutset3& t : mem) {
    if (std::binary_search(bounds.begin(), bounds.end(), t))
      throw IntegrityError("boundary " + to_string(t) +
                           " splits the flower neighborhood");
    bool ok = std::binary_search(inner.begin(), inner.end(), t) ||
              (f.singular && t.set() == nb.center_neighborhood);
    for (std::size_t i = 0; !ok && i < bcs.size(); ++i)
      ok = t != bcs[i].q_prime &&
           contains_in(t.set(), bcs[i].m_prime_vertices, bcs[i].m_prime_edges);
    if (!ok)
      throw IntegrityError("unexpected member " + to_string(t) +
                           " in the complex of " + to_string(f));
  }

  Complex c{ComplexKind::flower, std::move(mem), std::move(bounds)};
  c.vertex_set = union_of(c.members);
  c.flower_source = std::move(f);
  return c;
}

Complex make_big_cut_complex(const Graph& g, std::span<const Cutset3> all,
                             const VertexEdgeCut& m) {
  auto bs = boundary_sets(g, m);
  std::vector<Cutset3> bounds{bs[0], bs[1]};
  std::sort(bounds.begin(), bounds.end());

  Complex c{ComplexKind::big_cut, members_inside(all, m.vertex_span(), bounds),
            std::move(bounds)};
  for (const Cutset3& t : c.members)
    if (!set_contained_in_cut(t.set(), m))
      throw IntegrityError("member " + to_string(t) +
                           " of a big-cut complex is not contained in " +
                           to_string(m));
  c.vertex_set = union_of(c.members);
  c.cut_source = m;
  return c;
}

Complex make_single_complex(const Cutset3& t, bool single_member) {
  Complex c{ComplexKind::single, {t}, {}};
  c.vertex_set = t.set();
  c.member_single = single_member;
  return c;
}

int kind_rank(ComplexKind k) { return static_cast<int>(k); }

// O(A) for a part with nonempty interior of a complex with more than one
// cutset (or a nonsingle single-member complex): complement the boundary
// cutset by all possible edges lying in the opposite part, then take the
// neighborhood of A's side of the resulting cut.
VertexSet neighborhood_by_rule(const Graph& g, const Part& a) {
  if (a.boundary.count() != 3)
    throw IntegrityError("boundary of a part with interior is not a triple");
  Cutset3 r = Cutset3::from_set(a.boundary);
  if (!is_cutset(g, r))
    throw IntegrityError("boundary " + to_string(r) +
                         " of a part with interior is not a cutset");

  const Part* abar = nullptr;
  for (const Part& rp : parts_of(g, r)) {
    if (rp.interior.intersects(a.interior)) continue;
    if (abar)
      throw IntegrityError("several parts of " + to_string(r) +
                           " avoid the interior of a complex part");
    abar = &rp;
  }
  if (!abar)
    throw IntegrityError("no part of " + to_string(r) +
                         " avoids the interior of a complex part");

  VertexEdgeCut base = as_cut(g, r);
  VertexSet rest;
  std::vector<Edge> edges;
  for (VertexId x : r.v) {
    std::optional<VertexId> pick;
    (abar->interior & g.neighbors(x)).for_each([&](VertexId y) {
      if (!complement_by_edge(g, base, x, y)) return;
      if (pick)
        throw IntegrityError("two edges at " + std::to_string(x) +
                             " complement " + to_string(r) + " into one part");
      pick = y;
    });
    if (pick)
      edges.emplace_back(x, *pick);
    else
      rest.add(x);
  }
  if (edges.empty()) return a.vertices;

  VertexEdgeCut m = [&] {
    try {
      return make_cut(g, rest, std::move(edges));
    } catch (const InputError& err) {
      throw IntegrityError(std::string("complementing ") + to_string(r) +
                           " by all edges of one part failed: " + err.what());
    }
  }();
  for (const CutSide& s : sides(g, m))
    if (a.interior.subset_of(s.vertices)) {
      if (!a.vertices.subset_of(s.neighborhood))
        throw IntegrityError("part escapes its side of " + to_string(m));
      return s.neighborhood;
    }
  throw IntegrityError("no side of " + to_string(m) + " holds a complex part");
}

void check_triple_shape(const TripleCut& f, std::span<const ComplexPart> parts) {
  for (const ComplexPart& cp : parts) {
    const Part& a = cp.part;
    if (a.is_small()) {
      if (!a.vertices.intersects(f.line.set()))
        throw IntegrityError("small part of a triple complex misses the line");
      continue;
    }
    bool ok = false;
    for (int i = 0; i < 3 && !ok; ++i)
      ok = a.vertices == f.parts[i].vertices ||
           a.vertices == f.extended_parts[i].vertices;
    if (!ok)
      throw IntegrityError("unexpected part of a triple complex");
  }
}

void check_flower_shape(const Graph& g, const Flower& f,
                        std::span<const ComplexPart> parts) {
  FlowerNeighborhood nb = flower_neighborhood(g, f);
  std::vector<VertexSet> expected;
  std::vector<std::pair<VertexSet, Cutset3>> normals;
  for (int i = 0; i < f.petal_count(); ++i) {
    FlowerBoundaryCuts bc = boundary_cuts(g, f, i);
    expected.push_back(bc.g_prime);
    if (bc.g_prime.count() >= 3) normals.emplace_back(bc.g_prime, bc.q_prime);
  }
  nb.center_neighborhood.for_each([&](VertexId x) {
    expected.push_back(VertexSet::of({f.center, x}));
  });

  if (expected.size() != parts.size())
    throw IntegrityError("flower complex part count mismatch");
  for (const ComplexPart& cp : parts) {
    if (std::find(expected.begin(), expected.end(), cp.part.vertices) ==
        expected.end())
      throw IntegrityError("unexpected part of a flower complex");
    for (const auto& [vs, q] : normals)
      if (cp.part.vertices == vs && cp.part.boundary != q.set())
        throw IntegrityError("normal flower part with boundary different from " +
                             to_string(q));
  }
}

void check_big_cut_shape(const Graph& g, const VertexEdgeCut& m,
                         std::span<const ComplexPart> parts) {
  std::vector<VertexSet> expected;
  for (const CutSide& s : sides(g, m)) expected.push_back(s.vertices);
  for (const Edge& e : m.cut_edges) expected.push_back(e.ends());
  if (expected.size() != parts.size())
    throw IntegrityError("big-cut complex part count mismatch");
  for (const ComplexPart& cp : parts)
    if (std::find(expected.begin(), expected.end(), cp.part.vertices) ==
        expected.end())
      throw IntegrityError("unexpected part of a big-cut complex");
}

void check_small_pair_shape(const Graph& g, const VertexEdgeCut& m,
                            std::span<const ComplexPart> parts) {
  std::vector<VertexSet> expected;
  for (const CutSide& s : sides(g, m)) expected.push_back(s.vertices);
  expected.push_back(m.vertex_span());
  if (expected.size() != parts.size())
    throw IntegrityError("small-cut complex part count mismatch");
  for (const ComplexPart& cp : parts)
    if (std::find(expected.begin(), expected.end(), cp.part.vertices) ==
        expected.end())
      throw IntegrityError("unexpected part of a small-cut complex");
}

}  // namespace

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::wheel_flower: return "wheel-flower";
    case ComplexKind::triple: return "triple";
    case ComplexKind::flower: return "flower";
    case ComplexKind::big_cut: return "big-cut";
    case ComplexKind::small_cut_pair: return "small-cut-pair";
    case ComplexKind::single: return "single";
  }
  return "?";
}

std::string to_string(const Complex& c) {
  std::string s = to_string(c.kind) + " complex of " +
                  std::to_string(c.members.size()) + " cutset(s) on " +
                  to_string(c.vertex_set);
  return s;
}

std::vector<std::pair<Edge, VertexEdgeCut>> complementing_edges(const Graph& g,
                                                                const Cutset3& t) {
  VertexEdgeCut base = as_cut(g, t);
  std::vector<std::pair<Edge, VertexEdgeCut>> out;
  for (VertexId x : t.v)
    g.neighbors(x).for_each([&](VertexId y) {
      if (t.contains(y)) return;
      if (auto m = complement_by_edge(g, base, x, y)) out.emplace_back(Edge(x, y), *m);
    });
  return out;
}

std::vector<Complex> classify_complexes(const Graph& g) {
  std::vector<Cutset3> all = enumerate_cutsets(g);
  std::sort(all.begin(), all.end());

  if (wheel_hub(g)) {
    auto comps = dependence_components(g, all);
    if (comps.size() != 1)
      throw IntegrityError("cutsets of a wheel are not dependence-connected");
    auto seed = generate_flower(g, comps.front());
    if (!seed) throw IntegrityError("cutsets of a wheel generate no flower");
    Complex c{ComplexKind::wheel_flower, all, {}};
    c.vertex_set = union_of(c.members);
    c.flower_source = maximal_flower(g, *seed);
    return {std::move(c)};
  }

  std::vector<Complex> out;

  std::vector<TripleCut> triples;
  for (const Cutset3& s : all)
    if (auto f = build_triple_cut(g, s)) triples.push_back(std::move(*f));
  for (const TripleCut& f : triples)
    out.push_back(make_triple_complex(g, all, f));

  std::vector<Flower> flowers = maximal_nondegenerate_flowers(g, all);
  std::vector<VertexSet> flower_neighborhoods;
  for (const Flower& f : flowers)
    flower_neighborhoods.push_back(flower_neighborhood(g, f).neighborhood);
  for (Flower& f : flowers)
    out.push_back(make_flower_complex(g, all, std::move(f)));

  for (const VertexEdgeCut& m : enumerate_cuts(g)) {
    if (m.edge_count() != 3 || classify_cut(g, m).trivial) continue;
    VertexSet vm = m.vertex_span();
    bool covered = false;
    for (const TripleCut& f : triples) covered |= vm.subset_of(f.neighborhood);
    for (const VertexSet& o : flower_neighborhoods) covered |= vm.subset_of(o);
    if (!covered) out.push_back(make_big_cut_complex(g, all, m));
  }

  auto in_big = [&](const Cutset3& t) {
    for (const Complex& c : out)
      if (std::binary_search(c.members.begin(), c.members.end(), t)) return true;
    return false;
  };
  auto boundary_of_big = [&](const Cutset3& t) {
    for (const Complex& c : out)
      if (std::binary_search(c.boundaries.begin(), c.boundaries.end(), t))
        return true;
    return false;
  };
  std::vector<bool> single(all.size(), true);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size() && single[i]; ++j)
      if (i != j && dependent(g, all[i], all[j])) single[i] = false;
  auto is_single = [&](const Cutset3& t) {
    return single[std::lower_bound(all.begin(), all.end(), t) - all.begin()];
  };

  std::vector<Cutset3> paired;
  for (const Cutset3& t : all) {
    if (in_big(t) || std::find(paired.begin(), paired.end(), t) != paired.end())
      continue;
    if (is_single(t)) {
      out.push_back(make_single_complex(t, true));
      continue;
    }
    if (parts_of(g, t).size() != 2)
      throw IntegrityError("nonsingle cutset " + to_string(t) +
                           " outside big complexes has three or more parts");
    if (is_trivial_cutset(g, t) || boundary_of_big(t)) {
      out.push_back(make_single_complex(t, false));
      continue;
    }
    auto comps = complementing_edges(g, t);
    if (comps.size() != 1)
      throw IntegrityError(to_string(t) +
                           " must be complemented by exactly one edge, found " +
                           std::to_string(comps.size()));
    const Edge& e = comps.front().first;
    VertexId x = t.contains(e.a) ? e.a : e.b;
    VertexId x1 = e.other(x);
    VertexSet rest = t.set();
    rest.remove(x);
    Cutset3 t1 = Cutset3::from_set(rest | VertexSet::of({x1}));
    if (!is_cutset(g, t1))
      throw IntegrityError("partner " + to_string(t1) + " of " + to_string(t) +
                           " is not a cutset");
    if (is_single(t1) || is_trivial_cutset(g, t1) || boundary_of_big(t1)) {
      out.push_back(make_single_complex(t, false));
      continue;
    }
    if (in_big(t1))
      throw IntegrityError("partner " + to_string(t1) +
                           " of a small-cut boundary lies in a big complex");
    Complex c{ComplexKind::small_cut_pair, {std::min(t, t1), std::max(t, t1)}, {}};
    c.vertex_set = union_of(c.members);
    c.cut_source = comps.front().second;
    out.push_back(std::move(c));
    paired.push_back(t1);
  }

  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (kind_rank(a.kind) != kind_rank(b.kind))
      return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.members != b.members) return a.members < b.members;
    // Flower complexes of distinct flowers may share every member
    // (e.g. two centers whose neighborhoods both cover the whole graph).
    VertexId ca = a.flower_source ? a.flower_source->center : 0;
    VertexId cb = b.flower_source ? b.flower_source->center : 0;
    return ca < cb;
  });
  return out;
}

std::vector<ComplexPart> complex_parts(const Graph& g, const Complex& c) {
  std::vector<ComplexPart> out;
  for (const Part& a : decompose(g, c.members)) {
    ComplexPart cp{a, a.vertices, classify_part(a)};
    bool own = c.kind == ComplexKind::wheel_flower ||
               (c.kind == ComplexKind::single && c.member_single) ||
               a.interior.empty();
    if (!own) cp.neighborhood = neighborhood_by_rule(g, a);
    out.push_back(std::move(cp));
  }

  switch (c.kind) {
    case ComplexKind::triple:
      check_triple_shape(*c.triple_source, out);
      break;
    case ComplexKind::flower:
      check_flower_shape(g, *c.flower_source, out);
      break;
    case ComplexKind::big_cut:
      check_big_cut_shape(g, *c.cut_source, out);
      break;
    case ComplexKind::small_cut_pair:
      check_small_pair_shape(g, *c.cut_source, out);
      break;
    case ComplexKind::single: {
      auto expected = parts_of(g, c.members.front());
      sort_parts(expected);
      if (expected.size() != out.size())
        throw IntegrityError("single complex part count mismatch");
      for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].part != expected[i])
          throw IntegrityError("single complex parts differ from the cutset parts");
      break;
    }
    case ComplexKind::wheel_flower:
      break;
  }
  return out;
}

std::size_t belongs_index(const Graph& g, const Complex& c,
                          std::span<const ComplexPart> parts, const Cutset3& t) {
  if (std::binary_search(c.members.begin(), c.members.end(), t))
    throw InputError(to_string(t) + " is a member of the complex");
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Part& a = parts[i].part;
    if (a.interior.empty()) continue;
    if (!t.set().subset_of(parts[i].neighborhood)) continue;
    if (t.set() != a.boundary && !t.set().intersects(a.interior)) continue;
    if (found)
      throw IntegrityError(to_string(t) + " belongs to two parts of a " +
                           to_string(c.kind) + " complex");
    found = i;
  }
  if (!found)
    throw IntegrityError(to_string(t) + " belongs to no part of a " +
                         to_string(c.kind) + " complex");
  return *found;
}

ComplexPart belongs(const Graph& g, const Complex& c, const Cutset3& t) {
  auto parts = complex_parts(g, c);
  return parts[belongs_index(g, c, parts, t)];
}

}  // namespace tricut
