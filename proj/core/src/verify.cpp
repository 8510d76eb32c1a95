#include "tricut/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "tricut/triple_cuts.hpp"

namespace tricut {

namespace {

constexpr std::size_t kMaxWitnesses = 4;

class Recorder {
 public:
  void declare(const std::string& id) { slot(id); }

  void check(const std::string& id, bool ok, const std::string& witness) {
    LemmaCheck& c = slot(id);
    ++c.instances;
    if (!ok) {
      ++c.violations;
      if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(witness);
    }
  }

  std::vector<LemmaCheck> take() {
    std::vector<LemmaCheck> out;
    for (auto& [id, c] : checks_) out.push_back(std::move(c));
    return out;
  }

 private:
  LemmaCheck& slot(const std::string& id) {
    LemmaCheck& c = checks_[id];
    if (c.lemma.empty()) c.lemma = id;
    return c;
  }

  std::map<std::string, LemmaCheck> checks_;
};

// The vertices of scope - t grouped by their component of G - t.
std::vector<VertexSet> split_groups(const Graph& g, VertexSet t, VertexSet scope) {
  VertexSet rest = scope - t;
  std::vector<VertexSet> out;
  for (const VertexSet& c : components_after_removal(g, t))
    if (c.intersects(rest)) out.push_back(c & rest);
  return out;
}

// The single vertex t separates from the rest of scope, when the shape is
// exactly "one vertex against everything else".
std::optional<VertexId> lone_vertex(const std::vector<VertexSet>& groups) {
  if (groups.size() != 2) return std::nullopt;
  if (groups[0].count() == 1) return groups[0].min_vertex();
  if (groups[1].count() == 1) return groups[1].min_vertex();
  return std::nullopt;
}

std::vector<Flower> all_maximal_flowers(const Graph& g,
                                        std::span<const Cutset3> rs) {
  std::vector<Flower> out;
  for (VertexId p = 0; p < g.vertex_count(); ++p) {
    std::vector<Cutset3> family;
    for (const Cutset3& r : rs)
      if (r.contains(p)) family.push_back(r);
    if (family.size() < 2) continue;
    for (const auto& comp : dependence_components(g, family)) {
      if (comp.size() < 2) continue;
      if (auto f = generate_flower(g, comp)) {
        Flower mf = maximal_flower(g, *f);
        if (std::find(out.begin(), out.end(), mf) == out.end())
          out.push_back(std::move(mf));
      }
    }
  }
  return out;
}

std::string pair_witness(const Cutset3& s, const Cutset3& t) {
  return to_string(s) + " / " + to_string(t);
}

}  // namespace

std::size_t VerificationReport::violation_count() const {
  std::size_t n = 0;
  for (const LemmaCheck& c : checks) n += c.violations;
  return n;
}

std::size_t VerificationReport::instance_count() const {
  std::size_t n = 0;
  for (const LemmaCheck& c : checks) n += c.instances;
  return n;
}

const LemmaCheck* VerificationReport::find(std::string_view lemma) const {
  for (const LemmaCheck& c : checks)
    if (c.lemma == lemma) return &c;
  return nullptr;
}

VerificationReport verify_graph(const Graph& g) {
  if (g.vertex_count() <= 6 || !is_triconnected(g))
    throw PreconditionError("verify_graph needs a triconnected graph with more than 6 vertices");

  Recorder rec;
  for (const char* id :
       {"l1c1", "l1c2", "l1c3", "lds1", "lrr1", "lor12", "l31", "l31c1",
        "ll12", "ll31c1", "ll32", "ll32c1", "ll34", "ll35", "ll36", "ll37",
        "ll38", "ll39", "ll391", "l40", "l41", "lmk0", "lmk1", "lmk2", "lmk3",
        "l3v0", "t30", "tr5", "tcr", "ts2", "lts00", "lts1", "ls1"})
    rec.declare(id);

  const std::vector<Cutset3> rs = [&] {
    auto v = enumerate_cutsets(g);
    std::sort(v.begin(), v.end());
    return v;
  }();
  const std::size_t nr = rs.size();

  std::vector<std::vector<Part>> pf(nr);
  for (std::size_t i = 0; i < nr; ++i) pf[i] = parts_of(g, rs[i]);

  std::vector<std::vector<bool>> dep(nr, std::vector<bool>(nr, false));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = i + 1; j < nr; ++j)
      dep[i][j] = dep[j][i] = dependent(g, rs[i], rs[j]);

  // --- Dependence of cutsets -------------------------------------------

  std::set<VertexSet> singular_pairs;  // 2-vertex parts of dependent pairs
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = i + 1; j < nr; ++j) {
      const Cutset3 &s = rs[i], &t = rs[j];
      bool symmetric = splits(g, s.set(), t.set()) == splits(g, t.set(), s.set());
      if (!dep[i][j]) {
        rec.check("l1c1", symmetric, pair_witness(s, t));
        continue;
      }
      int common = (s.set() & t.set()).count();
      rec.check("l1c1",
                symmetric && common <= 1 && pf[i].size() <= 3 && pf[j].size() <= 3,
                pair_witness(s, t));

      std::array<Cutset3, 2> family{s, t};
      auto parts = decompose(g, family);
      if (common == 0) {
        bool ok = false;
        bool shape = true;
        for (const Part& a : parts)
          if (a.is_small()) {
            ok = true;
            auto vs = a.vertices.to_vector();
            bool one_each = (s.contains(vs[0]) && t.contains(vs[1])) ||
                            (s.contains(vs[1]) && t.contains(vs[0]));
            shape &= one_each && g.adjacent(vs[0], vs[1]);
            singular_pairs.insert(a.vertices);
          }
        rec.check("l1c2", ok && shape, pair_witness(s, t));
      } else if (common == 1) {
        VertexId p = (s.set() & t.set()).min_vertex();
        bool ok = pf[i].size() == 2 && pf[j].size() == 2;
        for (const Part& a : parts) {
          if (a.is_small()) ok = false;
          if (a.is_empty() && a.vertices.count() == 3) {
            auto vs = (a.vertices - VertexSet::single(p)).to_vector();
            ok &= a.vertices.contains(p) && vs.size() == 2 &&
                  g.adjacent(vs[0], vs[1]) &&
                  ((s.contains(vs[0]) && t.contains(vs[1])) ||
                   (s.contains(vs[1]) && t.contains(vs[0])));
          }
        }
        rec.check("l1c3", ok, pair_witness(s, t));
      }
    }

  // Check lds1: a cutset avoiding the interiors of some parts of another
  // cutset's decomposition does not split their union.
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      if (i == j) continue;
      VertexSet avoided;
      for (const Part& a : pf[j])
        if (!rs[i].set().intersects(a.interior)) avoided |= a.vertices;
      if (avoided.empty()) continue;
      rec.check("lds1", !splits(g, rs[i].set(), avoided),
                pair_witness(rs[i], rs[j]));
    }

  // --- Vertex-edge cuts -------------------------------------------------

  const std::vector<VertexEdgeCut> cuts = enumerate_cuts(g);
  std::vector<CutKind> kinds;
  std::vector<bool> maximal;
  for (const VertexEdgeCut& m : cuts) {
    kinds.push_back(classify_cut(g, m));
    maximal.push_back(is_maximal_cut(g, m));
  }

  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const VertexEdgeCut& m = cuts[k];
    if (kinds[k].trivial) continue;
    VertexSet vm = m.vertex_span();
    for (const Edge& e : m.cut_edges) {
      bool ok = true;
      for (const Cutset3& r : rs)
        if (e.ends().subset_of(r.set())) ok = false;
      rec.check("l31", ok, to_string(m) + " edge " + to_string(e));
    }
    auto inner = inner_sets(g, m);
    auto bounds = boundary_sets(g, m);
    for (const Cutset3& r : rs) {
      if (!r.set().subset_of(vm)) continue;
      bool ok = std::find(inner.begin(), inner.end(), r) != inner.end() ||
                r == bounds[0] || r == bounds[1];
      rec.check("l31c1", ok, to_string(m) + " holds " + to_string(r));
    }
  }

  // Check ll31c1: a 2-edge cut complements in at most one way.
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const VertexEdgeCut& m = cuts[k];
    if (m.edge_count() != 2) continue;
    int ways = 0;
    m.cut_vertices.for_each([&](VertexId x) {
      g.neighbors(x).for_each([&](VertexId y) {
        if (complement_by_edge(g, m, x, y)) ++ways;
      });
    });
    rec.check("ll31c1", ways <= 1, to_string(m));
  }

  // Checks ll32 and ll32c1 on shared edges.
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = a + 1; b < cuts.size(); ++b) {
      std::vector<Edge> shared;
      std::set_intersection(cuts[a].cut_edges.begin(), cuts[a].cut_edges.end(),
                            cuts[b].cut_edges.begin(), cuts[b].cut_edges.end(),
                            std::back_inserter(shared));
      if (cuts[a].edge_count() == 2 && cuts[b].edge_count() == 2 &&
          shared.size() == 2) {
        bool ok = false;
        for (const VertexEdgeCut& m3 : cuts)
          if (m3.edge_count() == 3 && cut_contains(m3, cuts[a]) &&
              cut_contains(m3, cuts[b]))
            ok = true;
        rec.check("ll32", ok, to_string(cuts[a]) + " / " + to_string(cuts[b]));
      }
      if (maximal[a] && maximal[b])
        rec.check("ll32c1", shared.size() <= 1,
                  to_string(cuts[a]) + " / " + to_string(cuts[b]));
    }

  // Check ll34: cutsets splitting the vertex set of a maximal nontrivial cut.
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const VertexEdgeCut& m = cuts[k];
    if (!maximal[k] || kinds[k].trivial || m.edge_count() == 0) continue;
    VertexSet vm = m.vertex_span();
    auto inner = inner_sets(g, m);
    auto bounds = boundary_sets(g, m);
    auto two_sides = sides(g, m);
    for (const Cutset3& s : rs) {
      if (std::find(inner.begin(), inner.end(), s) != inner.end()) continue;
      if (!splits(g, s.set(), vm)) continue;
      bool ok = parts_of(g, s).size() == 2;
      bool case2 = false;
      for (const CutSide& side : two_sides) {
        if (!s.set().subset_of(side.neighborhood)) continue;
        VertexSet outside = s.set() - side.vertices;
        if (outside.count() != 1) continue;
        VertexId x2 = outside.min_vertex();
        for (const Edge& e : m.cut_edges) {
          if (!e.incident(x2)) continue;
          VertexId x1 = e.other(x2);
          if (!side.boundary.contains(x1)) continue;
          if (separates(g, s.set(), VertexSet::single(x1), vm - s.set() - VertexSet::single(x1)))
            case2 = true;
        }
      }
      bool case1 = false;
      if (!case2) {
        std::vector<Cutset3> family = inner;
        family.push_back(s);
        family.push_back(bounds[0]);
        family.push_back(bounds[1]);
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        try {
          if (auto f = generate_flower(g, family))
            case1 = vm.subset_of(f->vertex_set());
        } catch (const InputError&) {
          case1 = false;
        }
      }
      rec.check("ll34", ok && (case1 || case2),
                to_string(m) + " split by " + to_string(s));
    }
  }

  // --- Flowers ----------------------------------------------------------

  const bool wheel = wheel_hub(g).has_value();
  const std::vector<Flower> flowers = all_maximal_flowers(g, rs);

  for (const Flower& f : flowers) {
    auto fam = f.inner_sets();
    VertexSet meet = fam.front().set();
    for (const Cutset3& r : fam) meet &= r.set();
    rec.check("lrr1", meet == VertexSet::single(f.center), to_string(f));

    VertexSet vf = f.vertex_set();
    for (const Cutset3& r : rs)
      if (r.set().subset_of(vf))
        rec.check("lor12", r.contains(f.center),
                  to_string(f) + " holds " + to_string(r));

    // Check ll12: degeneracy is equivalent to lying inside a 3-edge cut
    // and forces 4 petals with two opposite empty parts.
    bool inside3 = false;
    for (const VertexEdgeCut& m : cuts)
      if (m.edge_count() == 3 && vf.subset_of(m.vertex_span())) inside3 = true;
    bool shape = true;
    if (f.degenerate) {
      shape = f.petal_count() == 4 &&
              ((f.part(0).is_empty() && f.part(2).is_empty()) ||
               (f.part(1).is_empty() && f.part(3).is_empty()));
    }
    rec.check("ll12", inside3 == f.degenerate && shape, to_string(f));
  }

  for (const Flower& f : flowers) {
    if (f.degenerate) continue;
    VertexSet vf = f.vertex_set();
    auto fam = f.inner_sets();
    const int m = f.petal_count();

    for (const Cutset3& t : rs) {
      if (std::find(fam.begin(), fam.end(), t) != fam.end()) continue;
      if (!splits(g, t.set(), vf)) continue;
      std::string w = to_string(f) + " split by " + to_string(t);
      auto groups = split_groups(g, t.set(), vf);
      bool two_parts = parts_of(g, t).size() == 2;

      auto lone = lone_vertex(groups);
      bool petals_case = false;
      if (!lone && groups.size() == 2)
        for (int i = 0; i < m && !petals_case; ++i) {
          VertexSet two = VertexSet::of({f.petal(i + 1), f.petal(i + 2)});
          if (groups[0] != two && groups[1] != two) continue;
          // T = {q_i, x, q_{i+3}} with x the only part vertex adjacent to
          // the center, flanked by empty parts.
          VertexSet adj = f.part(i + 1).vertices & g.neighbors(f.center);
          if (f.part(i).is_empty() && f.part(i + 2).is_empty() &&
              adj.count() == 1 && f.part(i + 1).interior.intersects(adj) &&
              t.set() == (VertexSet::of({f.petal(i), f.petal(i + 3)}) | adj))
            petals_case = true;
        }
      rec.check("ll36", two_parts && (lone.has_value() || petals_case), w);

      if (lone && *lone != f.center) {
        // Check ll37: the separated vertex is a petal.
        int idx = -1;
        for (int i = 0; i < m; ++i)
          if (f.petal(i) == *lone) idx = i;
        if (idx >= 0) {
          const Part& before = f.part(idx - 1 + m);  // G_{i-1,i}
          const Part& after = f.part(idx);           // G_{i,i+1}
          bool ok = before.is_empty() != after.is_empty();
          if (ok) {
            const Part& empty = before.is_empty() ? before : after;
            const Part& other = before.is_empty() ? after : before;
            VertexId second =
                before.is_empty() ? f.petal(idx - 1 + m) : f.petal(idx + 1);
            VertexSet restt = t.set() - VertexSet::single(second);
            ok = t.contains(second) && restt.count() == 2 &&
                 restt.subset_of(other.vertices) && !empty.interior.intersects(t.set());
          }
          rec.check("ll37", ok, w);
        }
      }
      if (lone && *lone == f.center) {
        // Check ll38: the center is cut off from the entire graph.
        bool alone = false;
        for (const VertexSet& c : components_after_removal(g, t.set()))
          if (c == VertexSet::single(f.center)) alone = true;
        int nonempty = 0;
        bool per_part = true;
        for (int i = 0; i < m; ++i) {
          const Part& a = f.part(i);
          if (a.is_empty()) continue;
          ++nonempty;
          per_part &= (a.interior & t.set()).count() == 1 &&
                      !a.boundary.intersects(t.set());
        }
        rec.check("ll38", alone && m <= 6 && nonempty <= 3 && per_part, w);
      }
    }
  }

  // Neighborhood-based flower checks (wheels short-circuit this machinery).
  std::vector<std::vector<Cutset3>> flower_members(flowers.size());
  if (!wheel)
    for (std::size_t fi = 0; fi < flowers.size(); ++fi) {
      const Flower& f = flowers[fi];
      if (f.degenerate) continue;
      auto nbh = flower_neighborhood(g, f);
      VertexSet of = nbh.neighborhood;
      auto fam = f.inner_sets();
      const int m = f.petal_count();
      std::vector<FlowerBoundaryCuts> bc;
      for (int i = 0; i < m; ++i) bc.push_back(boundary_cuts(g, f, i));
      for (const Cutset3& r : rs)
        if (r.set().subset_of(of) && splits(g, r.set(), of))
          flower_members[fi].push_back(r);

      // Check ll39(1): classification of cutsets inside O(F).
      for (const Cutset3& t : rs) {
        if (!t.set().subset_of(of)) continue;
        bool in_fam = std::find(fam.begin(), fam.end(), t) != fam.end();
        bool in_mprime = false;
        bool is_qprime = false;
        for (int i = 0; i < m; ++i) {
          VertexEdgeCut probe{bc[i].m_prime_vertices, bc[i].m_prime_edges, {}};
          if (set_contained_in_cut(t.set(), probe)) in_mprime = true;
          if (t == bc[i].q_prime) is_qprime = true;
        }
        bool is_tp = f.singular && t.set() == nbh.center_neighborhood;
        bool ok = in_fam || in_mprime || is_tp;
        if (ok && !is_qprime)
          ok = parts_of(g, t).size() == 2 && splits(g, t.set(), of);
        rec.check("ll39", ok, to_string(f) + " inside " + to_string(t));
      }
      for (int i = 0; i < m; ++i) {
        bool qsplit = splits(g, bc[i].q_prime.set(), of);
        bool qcut = is_cutset(g, bc[i].q_prime);
        bool has_interior = !(bc[i].g_prime - bc[i].q_prime.set()).empty();
        rec.check("ll39", !qsplit && (qcut == has_interior),
                  to_string(f) + " boundary " + to_string(bc[i].q_prime));
      }

      // Check ll39(2): cutsets splitting O(F) from outside.
      for (const Cutset3& s : rs) {
        if (s.set().subset_of(of) || !splits(g, s.set(), of)) continue;
        auto groups = split_groups(g, s.set(), of);
        auto lone = lone_vertex(groups);
        rec.check("ll39",
                  parts_of(g, s).size() == 2 && lone.has_value() &&
                      *lone != f.center,
                  to_string(f) + " split by " + to_string(s));
      }

      // Check ll391 for singular flowers.
      if (f.singular) {
        bool shrunk = true;
        for (int i = 0; i < m; ++i)
          shrunk &= bc[i].g_prime != f.part(i).vertices;
        VertexSet formula;
        for (int i = 0; i < m; ++i)
          if (bc[i].u != f.center) formula.add(bc[i].u);
        for (int j = 0; j < m; ++j)
          if (f.part(j - 1 + m).is_empty() && f.part(j).is_empty() &&
              bc[(j - 2 + m) % m].u != f.center &&
              bc[(j + 1) % m].u != f.center)
            formula.add(f.petal(j));
        rec.check("ll391",
                  shrunk && formula == nbh.center_neighborhood &&
                      nbh.center_neighborhood == g.neighbors(f.center),
                  to_string(f));
      }

      // Check l40: a complex member separates the center from each
      // shrunken part, with the stated trace on the part.
      for (int i = 0; i < m; ++i) {
        if (bc[i].g_prime == f.part(i).vertices) continue;
        bool ok = false;
        for (const Cutset3& s : flower_members[fi]) {
          if (s.contains(f.center)) continue;
          if (!separates(g, s.set(), VertexSet::single(f.center),
                         bc[i].g_prime - s.set()))
            continue;
          VertexSet trace = s.set() & f.part(i).vertices;
          if (!f.part(i).is_empty())
            ok = trace == VertexSet::single(bc[i].u);
          else
            ok = trace == VertexSet::single(f.petal(i)) ||
                 trace == VertexSet::single(f.petal(i + 1));
          if (ok) break;
        }
        rec.check("l40", ok, to_string(f) + " part " + std::to_string(i));
      }

      // Check l41: the decomposition by the flower complex.
      if (!flower_members[fi].empty()) {
        std::set<VertexSet> expected;
        for (int i = 0; i < m; ++i) expected.insert(bc[i].g_prime);
        nbh.center_neighborhood.for_each([&](VertexId x) {
          expected.insert(VertexSet::of({f.center, x}));
        });
        std::set<VertexSet> actual;
        bool fine = true;
        for (const Part& a : decompose(g, flower_members[fi])) {
          actual.insert(a.vertices);
          for (int i = 0; i < m; ++i)
            if (a.vertices == bc[i].g_prime) {
              bool small_rule = f.part(i).is_empty() &&
                                (bc[(i - 1 + m) % m].u != f.center ||
                                 bc[(i + 1) % m].u != f.center);
              fine &= a.is_small() == small_rule;
              if (a.is_normal())
                fine &= a.boundary == bc[i].q_prime.set();
            }
        }
        rec.check("l41", fine && expected == actual, to_string(f));
      }
    }

  // --- Trivial cutsets, lines, triple cuts -------------------------------

  std::vector<bool> trivial(nr, false);
  for (std::size_t i = 0; i < nr; ++i)
    for (VertexId a = 0; a < g.vertex_count(); ++a)
      if (g.degree(a) == 3 && g.neighbors(a) == rs[i].set()) trivial[i] = true;

  std::vector<std::vector<Cutset3>> subs(nr);
  for (std::size_t i = 0; i < nr; ++i)
    if (pf[i].size() == 3) subs[i] = subordinated_trivials(g, rs[i]);

  for (std::size_t i = 0; i < nr; ++i) {
    if (pf[i].size() < 3) continue;
    bool ok = true;
    for (std::size_t j = 0; j < nr; ++j) {
      if (i == j || !dep[i][j]) continue;
      if (pf[i].size() >= 4)
        ok = false;  // must be independent of everything
      else
        ok &= trivial[j] && std::find(subs[i].begin(), subs[i].end(), rs[j]) !=
                                subs[i].end();
    }
    rec.check("l3v0", ok, to_string(rs[i]));
  }
  for (std::size_t j = 0; j < nr; ++j) {
    if (!trivial[j]) continue;
    int owners = 0;
    for (std::size_t i = 0; i < nr; ++i)
      if (pf[i].size() == 3 &&
          std::find(subs[i].begin(), subs[i].end(), rs[j]) != subs[i].end())
        ++owners;
    rec.check("l3v0", owners <= 1, to_string(rs[j]));
  }

  std::vector<TripleCut> triples;
  for (const Cutset3& s : rs)
    if (auto tc = build_triple_cut(g, s)) triples.push_back(std::move(*tc));

  for (const TripleCut& f : triples) {
    for (const Cutset3& t : rs) {
      if (t.set().subset_of(f.neighborhood) || !splits(g, t.set(), f.neighborhood))
        continue;
      std::string w = "line " + to_string(f.line) + " split by " + to_string(t);
      int idx = -1;
      for (int i = 0; i < 3; ++i)
        if (t.set().subset_of(f.line_parts[i].vertices)) idx = i;
      bool ok = parts_of(g, t).size() == 2 && idx >= 0;
      if (ok) {
        auto lone = lone_vertex(split_groups(g, t.set(), f.neighborhood));
        VertexSet outside = t.set() - f.extended_parts[idx].vertices;
        ok = lone.has_value() &&
             f.line_parts[idx].interior.contains(*lone) &&
             outside.count() == 1 && f.line.contains(outside.min_vertex()) &&
             std::find(f.extended[idx].cut_edges.begin(),
                       f.extended[idx].cut_edges.end(),
                       Edge(outside.min_vertex(), *lone)) !=
                 f.extended[idx].cut_edges.end();
      }
      rec.check("ll35", ok, w);
    }
  }

  // --- Complexes and small cutsets ---------------------------------------

  const std::vector<Complex> complexes = classify_complexes(g);

  std::vector<Cutset3> big_members;
  for (const Complex& c : complexes)
    if (c.kind != ComplexKind::single && c.kind != ComplexKind::small_cut_pair)
      big_members.insert(big_members.end(), c.members.begin(), c.members.end());
  std::sort(big_members.begin(), big_members.end());
  big_members.erase(std::unique(big_members.begin(), big_members.end()),
                    big_members.end());

  for (std::size_t i = 0; i < nr; ++i) {
    const Cutset3& t = rs[i];
    bool has_dep = false;
    for (std::size_t j = 0; j < nr; ++j) has_dep |= dep[i][j];
    if (!has_dep) continue;

    // Check lmk0 applies to any 2-part cutset with complements on both sides.
    auto ce = complementing_edges(g, t);
    if (pf[i].size() == 2) {
      auto part_of_end = [&](VertexId y) {
        return pf[i][0].interior.contains(y) ? 0 : 1;
      };
      for (std::size_t a = 0; a < ce.size(); ++a)
        for (std::size_t b = a + 1; b < ce.size(); ++b) {
          VertexId x = t.contains(ce[a].first.a) ? ce[a].first.a : ce[a].first.b;
          VertexId y = t.contains(ce[b].first.a) ? ce[b].first.a : ce[b].first.b;
          VertexId x1 = ce[a].first.other(x);
          VertexId y1 = ce[b].first.other(y);
          if (x == y || part_of_end(x1) == part_of_end(y1)) continue;
          VertexSet rest = t.set();
          rest.remove(x);
          rest.remove(y);
          bool combines = is_cut(g, rest, {ce[a].first, ce[b].first});
          rec.check("lmk0", combines == !g.adjacent(x, y),
                    to_string(t) + " edges " + to_string(ce[a].first) + "," +
                        to_string(ce[b].first));
        }
    }

    if (std::binary_search(big_members.begin(), big_members.end(), t)) continue;

    // Check lmk1: dependent pairs of a residual cutset and its complements.
    {
      bool ok = pf[i].size() == 2;
      for (std::size_t j = 0; j < nr && ok; ++j) {
        if (!dep[i][j]) continue;
        ok &= !t.set().intersects(rs[j].set());
        if (!ok) break;
        std::array<Cutset3, 2> family{t, rs[j]};
        int small = 0;
        VertexSet sv;
        for (const Part& a : decompose(g, family))
          if (a.is_small()) {
            ++small;
            sv = a.vertices;
          }
        ok &= small == 1;
        if (ok) {
          auto vs = sv.to_vector();
          ok &= g.adjacent(vs[0], vs[1]) && is_singular_edge(g, Edge(vs[0], vs[1]));
        }
      }
      if (ok && !ce.empty()) {
        int side = -1;
        std::vector<Edge> all_edges;
        VertexSet removed;
        for (const auto& [e, cut] : ce) {
          VertexId x = t.contains(e.a) ? e.a : e.b;
          VertexId far = e.other(x);
          int s = pf[i][0].interior.contains(far) ? 0 : 1;
          if (side == -1) side = s;
          ok &= s == side;
          all_edges.push_back(e);
          removed.add(x);
        }
        ok &= is_cut(g, t.set() - removed, all_edges);
      }
      rec.check("lmk1", ok, to_string(t));
    }

    // Checks lmk2 (trichotomy) and lmk3 (pairing).
    {
      bool is_trivial = trivial[i];
      bool is_boundary = false;
      for (const Complex& c : complexes) {
        if (c.kind == ComplexKind::single || c.kind == ComplexKind::small_cut_pair)
          continue;
        if (std::find(c.boundaries.begin(), c.boundaries.end(), t) ==
            c.boundaries.end())
          continue;
        // All of the complex and all complements on one side of t.
        for (const Part& a : pf[i]) {
          bool fits = true;
          for (const Cutset3& r : c.members)
            fits &= r.set().subset_of(a.vertices);
          for (const auto& [e, cut] : ce) {
            VertexId far = e.other(t.contains(e.a) ? e.a : e.b);
            fits &= a.interior.contains(far);
          }
          if (fits) is_boundary = true;
        }
      }
      bool one_edge = false;
      if (!is_trivial && !is_boundary && ce.size() == 1) {
        const Edge& e = ce[0].first;
        VertexId x = t.contains(e.a) ? e.a : e.b;
        VertexId x1 = e.other(x);
        one_edge = is_singular_edge(g, e);
        for (std::size_t j = 0; j < nr; ++j)
          if (dep[i][j]) one_edge &= rs[j].contains(x1);
        if (one_edge) {
          Cutset3 t1 = Cutset3::from_set((t.set() - VertexSet::single(x)) |
                                         VertexSet::single(x1));
          bool paired = false;
          bool alone = false;
          for (const Complex& c : complexes) {
            if (c.kind == ComplexKind::small_cut_pair &&
                std::find(c.members.begin(), c.members.end(), t) !=
                    c.members.end() &&
                std::find(c.members.begin(), c.members.end(), t1) !=
                    c.members.end())
              paired = true;
            if (c.kind == ComplexKind::single &&
                c.members == std::vector<Cutset3>{t1})
              alone = true;
          }
          rec.check("lmk3", is_cutset(g, t1) && (paired || alone), to_string(t));
        }
      }
      rec.check("lmk2", is_trivial || is_boundary || one_edge, to_string(t));
    }
  }

  // Check t30: singular edges are exactly the 2-vertex parts above.
  for (const Edge& e : g.edges())
    rec.check("t30",
              is_singular_edge(g, e) == (singular_pairs.count(e.ends()) > 0),
              to_string(e));

  // Check tr5: dependence components without small parts generate flowers.
  for (const auto& comp : dependence_components(g, rs)) {
    bool small = false;
    for (const Part& a : decompose(g, comp)) small |= a.is_small();
    bool flowerish = comp.size() == 1;
    if (!flowerish) flowerish = generate_flower(g, comp).has_value();
    rec.check("tr5", small == !flowerish, to_string(comp.front()));
  }

  // --- The hypertree of decomposition ------------------------------------

  DecompositionHypertree tree;
  try {
    tree = build_hypertree(g, complexes);
  } catch (const IntegrityError& e) {
    rec.check("ts2", false, e.what());
    return VerificationReport{rec.take()};
  }
  const std::size_t nc = tree.nodes.size();

  // Check tcr: unique receiving part for every non-member cutset.
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const Complex& c = tree.nodes[ci];
    for (const Cutset3& t : rs) {
      if (std::binary_search(c.members.begin(), c.members.end(), t)) continue;
      bool ok = true;
      std::size_t idx = 0;
      try {
        idx = belongs_index(g, c, tree.parts[ci], t);
      } catch (const IntegrityError&) {
        ok = false;
      }
      rec.check("tcr", ok, to_string(c) + " <- " + to_string(t));
      if (!ok) continue;

      // Check lts00 when t additionally splits V(C).
      if (!splits(g, t.set(), c.vertex_set)) continue;
      const ComplexPart& a = tree.parts[ci][idx];
      std::string w = to_string(c) + " split by " + to_string(t);
      bool good = a.part.boundary.count() == 3;
      Cutset3 r = good ? Cutset3::from_set(a.part.boundary) : t;
      good = good && is_cutset(g, r) && dependent(g, r, t);
      auto lone = lone_vertex(split_groups(g, t.set(), c.vertex_set));
      good = good && lone.has_value() && r.contains(*lone);
      if (good) {
        VertexSet outside = t.set() - a.part.vertices;
        good = (t.set() & a.part.vertices).count() == 2 && outside.count() == 1;
        if (good) {
          VertexId y = outside.min_vertex();
          good = complement_by_edge(g, as_cut(g, r), *lone, y).has_value() &&
                 complement_by_edge(g, as_cut(g, t), y, *lone).has_value();
        }
      }
      rec.check("lts00", good, w);
    }
  }

  // Check lts1: the whole difference lands in one part whose neighborhood
  // holds the other complex.
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (i == j) continue;
      std::vector<Cutset3> diff;
      for (const Cutset3& t : tree.nodes[j].members)
        if (!std::binary_search(tree.nodes[i].members.begin(),
                                tree.nodes[i].members.end(), t))
          diff.push_back(t);
      if (diff.empty()) continue;
      bool ok = tree.belongs[i][j].has_value();
      if (ok) {
        std::size_t idx = *tree.belongs[i][j];
        for (const Cutset3& t : diff) {
          try {
            ok &= belongs_index(g, tree.nodes[i], tree.parts[i], t) == idx;
          } catch (const IntegrityError&) {
            ok = false;
          }
        }
        ok &= tree.nodes[j].vertex_set.subset_of(tree.parts[i][idx].neighborhood);
      }
      rec.check("lts1", ok,
                to_string(tree.nodes[i]) + " <- " + to_string(tree.nodes[j]));

      // Check ls1 on the remaining nonempty parts of the other complex.
      if (!tree.belongs[j][i]) continue;
      std::size_t aji = *tree.belongs[j][i];
      std::size_t aij = *tree.belongs[i][j];
      for (std::size_t b = 0; b < tree.parts[j].size(); ++b) {
        if (b == aji || tree.parts[j][b].part.interior.empty()) continue;
        const ComplexPart& bp = tree.parts[j][b];
        const ComplexPart& ap = tree.parts[i][aij];
        bool ok1 = bp.neighborhood.subset_of(ap.neighborhood);
        if (!bp.part.vertices.subset_of(ap.part.vertices))
          ok1 = ok1 && tree.nodes[j].members.size() == 1 &&
                splits(g, tree.nodes[j].members[0].set(),
                       tree.nodes[i].vertex_set);
        rec.check("ls1",
                  ok1,
                  to_string(tree.nodes[j]) + " part " + std::to_string(b) +
                      " vs " + to_string(tree.nodes[i]));
      }
    }

  // Check ts2, including the hypertree-theorem hypothesis.
  rec.check("ts2", is_hypertree(tree), "2-section cycle not covered");
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b)
      for (std::size_t c = 0; c < nc; ++c)
        if (separates(tree, a, b, c))
          rec.check("ts2", !separates(tree, b, a, c),
                    to_string(tree.nodes[a]) + " / " + to_string(tree.nodes[b]));
  if (nc > 1) {
    std::vector<std::vector<bool>> adj(nc, std::vector<bool>(nc, false));
    for (const auto& e : tree.hyperedges)
      for (std::size_t a : e)
        for (std::size_t b : e)
          if (a != b) adj[a][b] = true;
    for (std::size_t i = 0; i < nc; ++i) {
      // Separation classes: j and k stay together iff node i does not
      // separate them (transitively closed via union-find).
      std::vector<std::size_t> root(nc);
      for (std::size_t j = 0; j < nc; ++j) root[j] = j;
      auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t k = j + 1; k < nc; ++k)
          if (j != i && k != i && !separates(tree, i, j, k))
            root[find(j)] = find(k);
      std::map<std::size_t, std::set<std::size_t>> classes;
      for (std::size_t j = 0; j < nc; ++j)
        if (j != i) classes[find(j)].insert(j);
      std::vector<std::set<std::size_t>> expected;
      for (auto& [key, cls] : classes) expected.push_back(cls);
      std::sort(expected.begin(), expected.end());

      std::vector<std::set<std::size_t>> comps;
      std::set<std::size_t> left;
      for (std::size_t j = 0; j < nc; ++j)
        if (j != i) left.insert(j);
      while (!left.empty()) {
        std::vector<std::size_t> stack{*left.begin()};
        std::set<std::size_t> comp;
        left.erase(left.begin());
        while (!stack.empty()) {
          std::size_t v = stack.back();
          stack.pop_back();
          comp.insert(v);
          for (auto it = left.begin(); it != left.end();)
            if (adj[v][*it]) {
              stack.push_back(*it);
              it = left.erase(it);
            } else {
              ++it;
            }
        }
        comps.push_back(std::move(comp));
      }
      std::sort(comps.begin(), comps.end());
      rec.check("ts2", comps == expected,
                "classes of " + to_string(tree.nodes[i]));
    }
  }

  return VerificationReport{rec.take()};
}

}  // namespace tricut
