#include <algorithm>

#include "doctest.h"
#include "tricut/triple_cuts.hpp"
#include "util.hpp"

using namespace tricut;
using namespace tricut::testutil;

namespace {

// A line {a,b,c} with d(a)=3, d(b),d(c)>3: part 1 is a triangle a1,b1,c1
// hanging from all three line vertices, parts 2 and 3 are two-vertex
// paths. M_1 = {b,c,a·a1} then extends to the 3-edge cut {a·a1,b·b1,c·c1}
// while M_2, M_3 have no 3-edge extension.
Graph mixed_line_graph() {
  std::vector<Edge> e;
  auto add = [&](VertexId u, VertexId v) { e.emplace_back(u, v); };
  add(0, 3); add(1, 4); add(2, 5);          // a-a1, b-b1, c-c1
  add(3, 4); add(4, 5); add(3, 5);          // triangle
  add(0, 6); add(6, 7); add(1, 6); add(1, 7); add(2, 7);  // part 2: a2=6, x2=7
  add(0, 8); add(8, 9); add(1, 8); add(1, 9); add(2, 9);  // part 3: a3=8, x3=9
  add(1, 2);
  return Graph(10, std::move(e),
               {"a", "b", "c", "a1", "b1", "c1", "a2", "x2", "a3", "x3"});
}

}  // namespace

TEST_CASE("subordinated_trivials") {
  const Graph& y = fixture("Y3");
  auto subs = subordinated_trivials(y, cs(y, "a", "b", "c"));
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == cs(y, "u1", "u2", "u3"));
  CHECK(subs[1] == cs(y, "v1", "v2", "v3"));
  CHECK(subs[2] == cs(y, "w1", "w2", "w3"));

  const Graph& w = fixture("WHEEL6");
  CHECK(subordinated_trivials(w, cs(w, "p", "q1", "q3")).empty());
  const Graph& d = fixture("DK4");
  CHECK(subordinated_trivials(d, cs(d, "a1", "a2", "a3")).empty());
  CHECK_THROWS_AS(subordinated_trivials(w, cs(w, "q1", "q2", "q3")), InputError);
}

TEST_CASE("build_triple_cut on Y3") {
  const Graph& y = fixture("Y3");
  auto f = build_triple_cut(y, cs(y, "a", "b", "c"));
  REQUIRE(f.has_value());
  CHECK(f->subordinated.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(f->cuts[i].edge_count() == 3);
    CHECK(f->extended[i] == f->cuts[i]);
    CHECK(f->parts[i] == f->extended_parts[i]);
    CHECK(f->parts[i].vertices.count() == 3);
    CHECK(f->parts[i].interior.empty());
  }
  CHECK(f->cuts[0].cut_edges ==
        std::vector<Edge>{Edge(vid(y, "a"), vid(y, "u1")),
                          Edge(vid(y, "b"), vid(y, "v1")),
                          Edge(vid(y, "c"), vid(y, "w1"))});
  CHECK(f->parts[0].vertices == vset(y, {"u1", "v1", "w1"}));
  CHECK(f->vertex_set == y.vertices());
  CHECK(f->neighborhood == y.vertices());

  CHECK(!build_triple_cut(y, cs(y, "u1", "u2", "u3")).has_value());
  const Graph& w = fixture("WHEEL6");
  CHECK(!build_triple_cut(w, cs(w, "p", "q1", "q3")).has_value());
}

TEST_CASE("triple_cut_inner_sets on Y3") {
  const Graph& y = fixture("Y3");
  auto f = build_triple_cut(y, cs(y, "a", "b", "c"));
  REQUIRE(f.has_value());
  auto inner = triple_cut_inner_sets(y, *f);
  auto all = enumerate_cutsets(y);
  std::sort(all.begin(), all.end());
  CHECK(inner == all);  // 22 sets: the line, 3 trivials, 18 cut inner sets
  CHECK(std::binary_search(inner.begin(), inner.end(), cs(y, "u1", "b", "c")));
}

TEST_CASE("mixed-degree line") {
  Graph g = mixed_line_graph();
  REQUIRE(is_triconnected(g));
  Cutset3 s = cs(g, "a", "b", "c");
  auto subs = subordinated_trivials(g, s);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0] == cs(g, "a1", "a2", "a3"));

  auto f = build_triple_cut(g, s);
  REQUIRE(f.has_value());
  // Part order: the triangle part is largest, then the two paths.
  CHECK(f->line_parts[0].interior == vset(g, {"a1", "b1", "c1"}));
  CHECK(f->cuts[0].cut_vertices == vset(g, {"b", "c"}));
  CHECK(f->cuts[0].cut_edges == std::vector<Edge>{Edge(vid(g, "a"), vid(g, "a1"))});
  // M_1 extends to the full 3-edge cut; M_2 and M_3 do not.
  CHECK(f->extended[0].cut_edges ==
        std::vector<Edge>{Edge(vid(g, "a"), vid(g, "a1")),
                          Edge(vid(g, "b"), vid(g, "b1")),
                          Edge(vid(g, "c"), vid(g, "c1"))});
  CHECK(f->extended[1] == f->cuts[1]);
  CHECK(f->extended[2] == f->cuts[2]);

  CHECK(f->parts[0].vertices == vset(g, {"b", "c", "a1", "b1", "c1"}));
  CHECK(f->parts[0].boundary == vset(g, {"b", "c", "a1"}));
  CHECK(f->extended_parts[0].vertices == vset(g, {"a1", "b1", "c1"}));
  CHECK(f->extended_parts[0].interior.empty());
  CHECK(f->vertex_set == vset(g, {"a", "b", "c", "a1", "a2", "a3"}));
  CHECK(f->neighborhood ==
        vset(g, {"a", "b", "c", "a1", "b1", "c1", "a2", "a3"}));

  auto inner = triple_cut_inner_sets(g, *f);
  CHECK(std::binary_search(inner.begin(), inner.end(), s));
  CHECK(std::binary_search(inner.begin(), inner.end(), cs(g, "a1", "a2", "a3")));
}

TEST_CASE("set_contained_in_cut") {
  const Graph& d = fixture("DK4");
  VertexEdgeCut big = make_cut(
      d, VertexSet{},
      {Edge(vid(d, "a1"), vid(d, "b1")), Edge(vid(d, "a2"), vid(d, "b2")),
       Edge(vid(d, "a3"), vid(d, "b3"))});
  CHECK(set_contained_in_cut(vset(d, {"a1", "a2", "b3"}), big));
  CHECK(set_contained_in_cut(vset(d, {"a1", "a2", "a3"}), big));
  CHECK(!set_contained_in_cut(vset(d, {"a1", "a2", "a4"}), big));
}
