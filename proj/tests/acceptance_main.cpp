// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
//
//   1. fixture censuses recomputed from definitions (< 5 s)
//   2. singular-edge equivalence (t30) on a 200-graph random corpus (< 60 s)
//   3. flower-generation equivalence (tr5) per dependence component
//   4. hypertree shape (ts2) on every corpus graph
//   5. decompose vs. the definitional oracle on small families
//   6. full invariant suite: zero violations, every check id exercised
//   7. byte-identical JSON reports across repeated runs

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "tricut/fixtures.hpp"
#include "tricut/io.hpp"
#include "tricut/oracle.hpp"
#include "tricut/verify.hpp"

using namespace tricut;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

VertexId vid(const Graph& g, const std::string& label) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  throw InputError("no vertex labeled " + label);
}

VertexSet vset(const Graph& g, std::initializer_list<const char*> labels) {
  VertexSet s;
  for (const char* l : labels) s.add(vid(g, l));
  return s;
}

// The 200-graph corpus: fixed seeds, 8 <= n <= 13.
const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> v;
    for (int i = 0; i < 200; ++i) {
      int n = 8 + i % 6;
      v.push_back(gen_random_triconnected(n, 1000 * n + i));
    }
    return v;
  }();
  return graphs;
}

// Extra hand-built graphs that exercise structures the random corpus
// rarely produces (triple cuts with mixed degrees, small-cut pairs).
Graph mixed_line_graph() {
  std::vector<Edge> e;
  auto add = [&](VertexId u, VertexId v) { e.emplace_back(u, v); };
  add(0, 3); add(1, 4); add(2, 5);
  add(3, 4); add(4, 5); add(3, 5);
  add(0, 6); add(6, 7); add(1, 6); add(1, 7); add(2, 7);
  add(0, 8); add(8, 9); add(1, 8); add(1, 9); add(2, 9);
  add(1, 2);
  return Graph(10, std::move(e),
               {"a", "b", "c", "a1", "b1", "c1", "a2", "x2", "a3", "x3"});
}

Graph small_pair_graph() {
  std::vector<Edge> e = {{2, 4}, {2, 5}, {4, 5}, {0, 4}, {0, 5},
                         {1, 4}, {1, 5}, {3, 6}, {3, 7}, {6, 7},
                         {0, 6}, {0, 7}, {1, 6}, {1, 7}, {2, 3}};
  return Graph(8, std::move(e), {"y", "z", "x", "x1", "a1", "a2", "b1", "b2"});
}

// Cutset count straight from the definition: every vertex triple whose
// removal disconnects the rest.
std::size_t brute_cutset_count(const Graph& g) {
  std::size_t count = 0;
  int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        if (components_after_removal(g, VertexSet::of({a, b, c})).size() >= 2)
          ++count;
  return count;
}

std::multiset<std::pair<std::string, std::string>> part_census(
    const Graph& g, std::span<const ComplexPart> parts) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const ComplexPart& p : parts) {
    const char* cls = p.classification == PartClass::normal  ? "normal"
                      : p.classification == PartClass::small ? "small"
                                                             : "empty";
    out.insert({cls, to_string(p.part.vertices)});
  }
  return out;
}

bool same_parts(std::span<const Part> a, std::span<const Part> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].vertices != b[i].vertices || a[i].boundary != b[i].boundary ||
        a[i].interior != b[i].interior)
      return false;
  return true;
}

// ---- criterion 1: fixture censuses -------------------------------------

void fixture_censuses(Check& c) {
  auto t0 = Clock::now();

  {
    const Graph& g = fixture("WHEEL6");
    c.require(brute_cutset_count(g) == 9, "WHEEL6 cutset count");
    auto cx = classify_complexes(g);
    c.require(cx.size() == 1 && cx[0].kind == ComplexKind::wheel_flower &&
                  cx[0].members.size() == 9,
              "WHEEL6 wheel complex");
    auto t = build_hypertree(g);
    c.require(t.nodes.size() == 1 && t.hyperedges.empty(),
              "WHEEL6 hypertree");
  }

  {
    const Graph& g = fixture("SING1");
    auto cx = classify_complexes(g);
    const Complex* fc = nullptr;
    for (const Complex& x : cx)
      if (x.kind == ComplexKind::flower && x.flower_source &&
          x.flower_source->center == vid(g, "p"))
        fc = &x;
    c.require(fc != nullptr, "SING1 flower complex centered at p");
    if (fc) {
      const Flower& f = *fc->flower_source;
      c.require(f.petals.size() == 4 && f.maximal && f.singular &&
                    !f.degenerate,
                "SING1 flower shape");
      auto nb = flower_neighborhood(g, f);
      c.require(nb.center_neighborhood == vset(g, {"u", "v", "q3"}),
                "SING1 T(p)");
      // The seven parts of the complex: two petal triangles and five
      // 2-vertex parts, the latter classified small.
      auto parts = complex_parts(g, *fc);
      std::multiset<std::string> got, expected;
      bool smalls_ok = true;
      for (const ComplexPart& p : parts) {
        got.insert(to_string(p.part.vertices));
        if (p.part.vertices.count() == 2)
          smalls_ok &= p.classification == PartClass::small;
      }
      for (auto labels : {std::initializer_list<const char*>{"q1", "u", "q2"},
                          {"q4", "v", "q1"}, {"q2", "q3"}, {"q3", "q4"},
                          {"p", "u"}, {"p", "v"}, {"p", "q3"}})
        expected.insert(to_string(vset(g, labels)));
      c.require(got == expected && smalls_ok, "SING1 complex parts");
    }
  }

  {
    const Graph& g = fixture("FLOWER1");
    c.require(brute_cutset_count(g) == 7, "FLOWER1 cutset count");
    auto cx = classify_complexes(g);
    c.require(cx.size() == 3, "FLOWER1 complex count");
    const Complex* fc = nullptr;
    for (const Complex& x : cx)
      if (x.kind == ComplexKind::flower && x.flower_source &&
          x.flower_source->center == vid(g, "p"))
        fc = &x;
    c.require(fc != nullptr, "FLOWER1 flower complex");
    if (fc) {
      const Flower& f = *fc->flower_source;
      VertexSet petals;
      for (VertexId q : f.petals) petals.add(q);
      c.require(f.maximal && petals == vset(g, {"q1", "q2", "q3", "y", "q4"}),
                "FLOWER1 maximal flower");
    }
    auto t = build_hypertree(g);
    bool path = t.nodes.size() == 3 && t.hyperedges.size() == 2 &&
                t.hyperedges[0].size() == 2 && t.hyperedges[1].size() == 2;
    c.require(path, "FLOWER1 hypertree path");
    if (path) {
      // The node on both hyperedges must be the single holding {p,q1,q2}.
      std::vector<int> degree(3, 0);
      for (const auto& e : t.hyperedges)
        for (std::size_t i : e) ++degree[i];
      Cutset3 pq = Cutset3::from_set(vset(g, {"p", "q1", "q2"}));
      bool mid_ok = false;
      for (std::size_t i = 0; i < 3; ++i)
        if (degree[i] == 2)
          mid_ok = t.nodes[i].members == std::vector<Cutset3>{pq};
      c.require(mid_ok, "FLOWER1 hypertree middle node");
    }
  }

  {
    const Graph& g = fixture("DK4");
    c.require(brute_cutset_count(g) == 8, "DK4 cutset count");
    auto cx = classify_complexes(g);
    std::size_t big = 0, single = 0;
    const Complex* bc = nullptr;
    for (const Complex& x : cx) {
      if (x.kind == ComplexKind::big_cut) { ++big; bc = &x; }
      if (x.kind == ComplexKind::single) ++single;
    }
    c.require(big == 1 && single == 2 && bc && bc->members.size() == 6,
              "DK4 complexes");
    auto t = build_hypertree(g);
    bool path = t.nodes.size() == 3 && t.hyperedges.size() == 2;
    c.require(path, "DK4 hypertree path");
    if (path && bc) {
      std::size_t bi = 0;
      while (t.nodes[bi].kind != ComplexKind::big_cut) ++bi;
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (j != bi && k != bi && j != k)
            c.require(separates(t, bi, j, k), "DK4 big cut separates");
    }
  }

  {
    const Graph& g = fixture("Y3");
    c.require(brute_cutset_count(g) == 22, "Y3 cutset count");
    auto cx = classify_complexes(g);
    c.require(cx.size() == 1 && cx[0].kind == ComplexKind::triple,
              "Y3 triple complex");
    if (cx.size() == 1) {
      auto parts = complex_parts(g, cx[0]);
      std::size_t small = 0, triangle = 0;
      for (const ComplexPart& p : parts) {
        if (p.classification == PartClass::small) ++small;
        else if (p.part.vertices.count() == 3) ++triangle;
      }
      c.require(parts.size() == 12 && small == 9 && triangle == 3,
                "Y3 parts");
    }
    auto t = build_hypertree(g);
    c.require(t.nodes.size() == 1 && t.hyperedges.empty(), "Y3 hypertree");
  }

  double dt = seconds_since(t0);
  c.require(dt < 5.0, "runtime " + std::to_string(dt) + " s >= 5 s");
}

// ---- criterion 2: t30 ------------------------------------------

void t30_equivalence(Check& c) {
  auto t0 = Clock::now();
  for (const Graph& g : corpus()) {
    auto rs = enumerate_cutsets(g);
    std::set<VertexSet> singular_pairs;
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        if (!dependent(g, rs[i], rs[j])) continue;
        std::vector<Cutset3> fam{rs[i], rs[j]};
        for (const Part& a : decompose(g, fam))
          if (a.is_small()) singular_pairs.insert(a.vertices);
      }
    for (const Edge& e : g.edges())
      c.require(is_singular_edge(g, e) == (singular_pairs.count(e.ends()) > 0),
                "edge " + to_string(e) + " of a corpus graph");
  }
  double dt = seconds_since(t0);
  c.require(dt < 60.0, "runtime " + std::to_string(dt) + " s >= 60 s");
}

// ---- criterion 3: tr5 ------------------------------------------

void tr5_equivalence(Check& c) {
  for (const Graph& g : corpus()) {
    auto rs = enumerate_cutsets(g);
    for (const auto& comp : dependence_components(g, rs)) {
      bool small = false;
      for (const Part& a : decompose(g, comp)) small |= a.is_small();
      bool flowerish = comp.size() == 1 || generate_flower(g, comp).has_value();
      c.require(small == !flowerish,
                "component of " + to_string(comp.front()));
    }
  }
}

// ---- criterion 4: ts2 ------------------------------------------

void ts2_shape(Check& c) {
  for (const Graph& g : corpus()) {
    DecompositionHypertree t;
    try {
      t = build_hypertree(g);
    } catch (const IntegrityError& e) {
      c.require(false, std::string("build_hypertree: ") + e.what());
      continue;
    }
    c.require(is_hypertree(t), "is_hypertree");
    std::size_t n = t.nodes.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          c.require(!(separates(t, i, j, k) && separates(t, j, i, k)),
                    "mutually separating pair");
    // Removing node i must split the rest exactly into its separation
    // classes: j, k stay together iff node i does not separate them.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> root(n);
      for (std::size_t j = 0; j < n; ++j) root[j] = j;
      auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (j != i && k != i && !separates(t, i, j, k))
            root[find(j)] = find(k);
      std::map<std::size_t, std::set<std::size_t>> classes;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) classes[find(j)].insert(j);
      std::set<std::set<std::size_t>> expected;
      for (auto& [part, members] : classes) expected.insert(members);
      // Components of the 2-section with node i removed.
      std::vector<bool> seen(n, false);
      seen[i] = true;
      std::set<std::set<std::size_t>> got;
      for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::set<std::size_t> comp;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
          std::size_t u = stack.back();
          stack.pop_back();
          comp.insert(u);
          for (const auto& e : t.hyperedges) {
            if (std::find(e.begin(), e.end(), u) == e.end()) continue;
            for (std::size_t w : e)
              if (!seen[w]) { seen[w] = true; stack.push_back(w); }
          }
        }
        got.insert(comp);
      }
      c.require(expected == got, "belongs-classes vs components");
    }
  }
}

// ---- criterion 5: oracle equivalence -----------------------------------

void oracle_equivalence(Check& c) {
  for (const Graph& g : corpus()) {
    auto rs = enumerate_cutsets(g);
    std::size_t k = rs.size();
    if (k > 40) continue;
    std::vector<Cutset3> fam;
    auto probe = [&] {
      if (!same_parts(decompose(g, fam), oracle_parts(g, fam)))
        c.require(false, "family of " + std::to_string(fam.size()) +
                             " starting at " + to_string(fam.front()));
    };
    for (std::size_t i = 0; i < k; ++i) {
      fam = {rs[i]};
      probe();
      for (std::size_t j = i + 1; j < k; ++j) {
        fam = {rs[i], rs[j]};
        probe();
        for (std::size_t l = j + 1; l < k; ++l) {
          fam = {rs[i], rs[j], rs[l]};
          probe();
        }
      }
    }
  }
  for (const Fixture& f : fixtures())
    for (const Complex& x : classify_complexes(f.graph))
      if (!same_parts(decompose(f.graph, x.members),
                      oracle_parts(f.graph, x.members)))
        c.require(false, f.name + " " + to_string(x.kind) + " members");
}

// ---- criterion 6: invariant suite --------------------------------------

void invariant_suite(Check& c) {
  std::map<std::string, std::size_t> instances;
  std::size_t violations = 0;
  auto absorb = [&](const std::string& name, const Graph& g) {
    VerificationReport r = verify_graph(g);
    for (const LemmaCheck& ch : r.checks) instances[ch.lemma] += ch.instances;
    if (r.violation_count() > 0)
      c.require(false, name + ": " + std::to_string(r.violation_count()) +
                           " violation(s)");
    violations += r.violation_count();
  };
  for (const Fixture& f : fixtures()) absorb(f.name, f.graph);
  absorb("mixed-line", mixed_line_graph());
  absorb("small-pair", small_pair_graph());
  int i = 0;
  for (const Graph& g : corpus()) absorb("corpus[" + std::to_string(i++) + "]", g);
  for (const char* id :
       {"l1c1", "l1c2", "l1c3", "lds1", "lrr1", "lor12", "l31", "l31c1",
        "ll12", "ll31c1", "ll32", "ll32c1", "lmk0", "lmk1", "lmk2", "lmk3",
        "l3v0", "ll34", "ll35", "ll36", "ll37", "ll38", "ll39", "ll391",
        "l40", "l41", "tcr", "lts00", "lts1", "ls1", "t30", "tr5", "ts2"})
    c.require(instances[id] >= 1, std::string(id) + " never exercised");
  c.require(violations == 0, "violations present");
}

// ---- criterion 7: determinism ------------------------------------------

void determinism(Check& c) {
  for (const Fixture& f : fixtures()) {
    std::string first = analysis_report_json(f.graph);
    for (int run = 1; run < 3; ++run)
      c.require(analysis_report_json(f.graph) == first,
                f.name + " report differs between runs");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*fn)(Check&);
  };
  const Criterion criteria[] = {
      {"fixture censuses", fixture_censuses},
      {"t30 singular-edge equivalence", t30_equivalence},
      {"tr5 flower-generation equivalence", tr5_equivalence},
      {"ts2 hypertree shape", ts2_shape},
      {"oracle equivalence", oracle_equivalence},
      {"invariant suite", invariant_suite},
      {"determinism", determinism},
  };
  bool all = true;
  int id = 1;
  for (const Criterion& cr : criteria) {
    Check c;
    auto t0 = Clock::now();
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    all &= c.pass;
    std::cout << "criterion " << id++ << " (" << cr.name << "): "
              << (c.pass ? "PASS" : "FAIL");
    std::cout << "  [" << std::fixed << std::setprecision(1)
              << seconds_since(t0) << " s]";
    if (!c.pass) std::cout << " — " << c.detail.str();
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
