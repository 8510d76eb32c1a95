#include <algorithm>

#include "doctest.h"
#include "tricut/cuts.hpp"
#include "util.hpp"

using namespace tricut;
using namespace tricut::testutil;

namespace {

VertexEdgeCut dk4_big(const Graph& d) {
  return make_cut(d, VertexSet{},
                  {Edge(vid(d, "a1"), vid(d, "b1")), Edge(vid(d, "a2"), vid(d, "b2")),
                   Edge(vid(d, "a3"), vid(d, "b3"))});
}

}  // namespace

TEST_CASE("make_cut validation") {
  const Graph& d = fixture("DK4");
  CHECK_THROWS_AS(make_cut(d, vset(d, {"a1", "a2"}), {}), InputError);
  CHECK_THROWS_AS(
      make_cut(d, vset(d, {"a1", "a2"}), {Edge(vid(d, "a1"), vid(d, "b1"))}),
      InputError);
  CHECK_THROWS_AS(make_cut(d, vset(d, {"a1", "a2", "a4"}), {}), InputError);
  CHECK(make_cut(d, vset(d, {"a1", "a2", "a3"}), {}).edge_count() == 0);
}

TEST_CASE("cut enumeration") {
  const Graph& d = fixture("DK4");
  auto cuts = enumerate_cuts(d);
  VertexEdgeCut big = dk4_big(d);
  CHECK(std::find(cuts.begin(), cuts.end(), big) != cuts.end());
  // All cuts from replacing big's edges by one end are present too.
  VertexEdgeCut mixed = make_cut(
      d, vset(d, {"a1"}),
      {Edge(vid(d, "a2"), vid(d, "b2")), Edge(vid(d, "a3"), vid(d, "b3"))});
  CHECK(std::find(cuts.begin(), cuts.end(), mixed) != cuts.end());
  CHECK(cut_contains(big, mixed));

  const Graph& w = fixture("WHEEL6");
  auto wcuts = enumerate_cuts(w);
  VertexEdgeCut m1 = make_cut(w, vset(w, {"p", "q4"}),
                              {Edge(vid(w, "q1"), vid(w, "q2"))});
  CHECK(std::find(wcuts.begin(), wcuts.end(), m1) != wcuts.end());
  // The only 3-edge cuts of the wheel are the trivial ones isolating a
  // degree-3 rim vertex.
  for (const VertexEdgeCut& c : wcuts)
    if (c.edge_count() == 3) CHECK(classify_cut(w, c).trivial);

  const Graph& y = fixture("Y3");
  auto ycuts = enumerate_cuts(y);
  VertexEdgeCut tri = make_cut(y, VertexSet{},
                               {Edge(vid(y, "a"), vid(y, "u1")),
                                Edge(vid(y, "b"), vid(y, "v1")),
                                Edge(vid(y, "c"), vid(y, "w1"))});
  CHECK(std::find(ycuts.begin(), ycuts.end(), tri) != ycuts.end());
}

TEST_CASE("sides") {
  const Graph& d = fixture("DK4");
  auto s = sides(d, dk4_big(d));
  CHECK(s[0].vertices == vset(d, {"a1", "a2", "a3", "a4"}));
  CHECK(s[0].boundary == vset(d, {"a1", "a2", "a3"}));
  CHECK(s[0].neighborhood == d.vertices() - vset(d, {"b4"}));
  CHECK(s[1].vertices == vset(d, {"b1", "b2", "b3", "b4"}));
  CHECK(s[0].interior() == vset(d, {"a4"}));

  const Graph& w = fixture("WHEEL6");
  VertexEdgeCut m1 = make_cut(w, vset(w, {"p", "q4"}),
                              {Edge(vid(w, "q1"), vid(w, "q2"))});
  auto ws = sides(w, m1);
  CHECK(ws[0].vertices == vset(w, {"p", "q4", "q1", "q6", "q5"}));
  CHECK(ws[1].vertices == vset(w, {"p", "q4", "q2", "q3"}));

  CHECK_THROWS_AS(sides(d, make_cut(d, vset(d, {"a1", "a2", "a3"}), {})), InputError);
}

TEST_CASE("complement by edge") {
  const Graph& d = fixture("DK4");
  VertexEdgeCut m = make_cut(d, vset(d, {"a1", "a2", "a3"}), {});
  auto c = complement_by_edge(d, m, vid(d, "a1"), vid(d, "b1"));
  REQUIRE(c.has_value());
  CHECK(c->cut_vertices == vset(d, {"a2", "a3"}));
  CHECK(c->cut_edges == std::vector<Edge>{Edge(vid(d, "a1"), vid(d, "b1"))});
  // The a-side component is the singleton {a4}, so a1 complements there too.
  CHECK(complement_by_edge(d, m, vid(d, "a1"), vid(d, "a4")).has_value());

  const Graph& w = fixture("WHEEL6");
  VertexEdgeCut wm = make_cut(w, vset(w, {"p", "q1", "q3"}), {});
  auto wc = complement_by_edge(w, wm, vid(w, "q1"), vid(w, "q2"));
  REQUIRE(wc.has_value());
  CHECK(wc->cut_vertices == vset(w, {"p", "q3"}));
  // {q2} is a singleton component, so p complements toward q2 but not into
  // the three-vertex arc.
  CHECK(complement_by_edge(w, wm, vid(w, "p"), vid(w, "q2")).has_value());
  CHECK(!complement_by_edge(w, wm, vid(w, "p"), vid(w, "q5")).has_value());
  // Complementing by another cut vertex is impossible.
  CHECK(!complement_by_edge(w, wm, vid(w, "q1"), vid(w, "p")).has_value());

  const Graph& f = fixture("FLOWER1");
  VertexEdgeCut fm = make_cut(f, vset(f, {"p", "q1", "q3"}), {});
  CHECK(!complement_by_edge(f, fm, vid(f, "p"), vid(f, "q2")).has_value());
  CHECK(!complement_by_edge(f, fm, vid(f, "p"), vid(f, "q4")).has_value());

  CHECK_THROWS_AS(complement_by_edge(w, wm, vid(w, "q2"), vid(w, "q3")), InputError);
}

TEST_CASE("maximal extensions") {
  const Graph& d = fixture("DK4");
  VertexEdgeCut m = make_cut(d, vset(d, {"a1", "a2", "a3"}), {});
  auto maxes = maximal_extensions(d, m);
  // Complements toward the b side stack into the full 3-edge cut; the
  // a4-side complements stop earlier, so several maximal cuts exist.
  CHECK(std::find(maxes.begin(), maxes.end(), dk4_big(d)) != maxes.end());
  for (const VertexEdgeCut& c : maxes) CHECK(is_maximal_cut(d, c));

  VertexEdgeCut big = dk4_big(d);
  CHECK(maximal_extensions(d, big) == std::vector<VertexEdgeCut>{big});
}

TEST_CASE("classification") {
  const Graph& y = fixture("Y3");
  VertexEdgeCut tri = make_cut(y, VertexSet{},
                               {Edge(vid(y, "a"), vid(y, "u1")),
                                Edge(vid(y, "b"), vid(y, "v1")),
                                Edge(vid(y, "c"), vid(y, "w1"))});
  auto k = classify_cut(y, tri);
  CHECK(k.degenerate);
  CHECK(!k.trivial);

  const Graph& d = fixture("DK4");
  auto kd = classify_cut(d, dk4_big(d));
  CHECK(!kd.degenerate);
  CHECK(!kd.trivial);

  // The three edges at a degree-3 vertex form a trivial cut.
  VertexEdgeCut at_a4 = make_cut(
      d, VertexSet{},
      {Edge(vid(d, "a4"), vid(d, "a1")), Edge(vid(d, "a4"), vid(d, "a2")),
       Edge(vid(d, "a4"), vid(d, "a3"))});
  CHECK(classify_cut(d, at_a4).trivial);
}

TEST_CASE("inner sets") {
  const Graph& d = fixture("DK4");
  auto inner = inner_sets(d, dk4_big(d));
  CHECK(inner.size() == 6);
  CHECK(std::find(inner.begin(), inner.end(), cs(d, "a1", "a2", "b3")) != inner.end());
  CHECK(std::find(inner.begin(), inner.end(), cs(d, "a1", "a2", "a3")) == inner.end());

  const Graph& w = fixture("WHEEL6");
  VertexEdgeCut m1 = make_cut(w, vset(w, {"p", "q4"}),
                              {Edge(vid(w, "q1"), vid(w, "q2"))});
  CHECK(inner_sets(w, m1).empty());

  const Graph& y = fixture("Y3");
  VertexEdgeCut tri = make_cut(y, VertexSet{},
                               {Edge(vid(y, "a"), vid(y, "u1")),
                                Edge(vid(y, "b"), vid(y, "v1")),
                                Edge(vid(y, "c"), vid(y, "w1"))});
  auto yinner = inner_sets(y, tri);
  CHECK(yinner.size() == 6);
  CHECK(std::find(yinner.begin(), yinner.end(), cs(y, "u1", "b", "c")) != yinner.end());
}

TEST_CASE("singular edges") {
  const Graph& d = fixture("DK4");
  CHECK(is_singular_edge(d, Edge(vid(d, "a1"), vid(d, "b1"))));
  const Graph& w = fixture("WHEEL6");
  CHECK(!is_singular_edge(w, Edge(vid(w, "q1"), vid(w, "q2"))));
  CHECK(!is_singular_edge(w, Edge(vid(w, "p"), vid(w, "q1"))));
  CHECK_THROWS_AS(is_singular_edge(w, Edge(vid(w, "q1"), vid(w, "q3"))), InputError);
}

TEST_CASE("cut containment") {
  const Graph& d = fixture("DK4");
  VertexEdgeCut big = dk4_big(d);
  CHECK(cut_contains(big, make_cut(d, vset(d, {"a1", "a2", "a3"}), {})));
  CHECK(cut_contains(big, make_cut(d, vset(d, {"a1", "b2", "b3"}), {})));
  CHECK(cut_contains(big, big));
  CHECK(cut_contains(big, make_cut(d, vset(d, {"b1", "b2", "b3"}), {})));
  VertexEdgeCut mixed = make_cut(
      d, vset(d, {"a1"}),
      {Edge(vid(d, "a2"), vid(d, "b2")), Edge(vid(d, "a3"), vid(d, "b3"))});
  CHECK(cut_contains(big, mixed));
  CHECK(!cut_contains(mixed, big));
}
