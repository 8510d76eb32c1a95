#pragma once

#include <optional>

#include "tricut/cutsets.hpp"

namespace tricut {

// Mixed vertex-edge cut: |cut_vertices| + |cut_edges| = 3, deletion
// disconnects the graph, and no cut vertex is incident to a cut edge.
// With at least one cut edge the deletion graph has exactly two components
// H_1, H_2; side1 stores G^M_1 = V \ H_2 so edge orientation (which end is
// on side 1) never has to be recomputed. A cut with no edges is a plain
// 3-cutset viewed as a member of the extended family.
struct VertexEdgeCut {
  VertexSet cut_vertices;
  std::vector<Edge> cut_edges;  // sorted, unique
  VertexSet side1;              // empty when cut_edges is empty

  int edge_count() const { return int(cut_edges.size()); }

  // V(M): cut vertices plus all cut-edge ends.
  VertexSet vertex_span() const {
    VertexSet s = cut_vertices;
    for (const Edge& e : cut_edges) s |= e.ends();
    return s;
  }

  friend bool operator==(const VertexEdgeCut& a, const VertexEdgeCut& b) {
    return a.cut_vertices == b.cut_vertices && a.cut_edges == b.cut_edges;
  }
  friend auto operator<=>(const VertexEdgeCut& a, const VertexEdgeCut& b) {
    if (auto c = a.cut_vertices <=> b.cut_vertices; c != 0) return c;
    return a.cut_edges <=> b.cut_edges;
  }
};

std::string to_string(const VertexEdgeCut& m);

// One side of a two-sided cut: G^M_i, its boundary T^M_i = G^M_i ∩ V(M),
// and its neighborhood O(G^M_i) = G^M_i ∪ V(M).
struct CutSide {
  VertexSet vertices;
  VertexSet boundary;
  VertexSet neighborhood;

  VertexSet interior() const { return vertices - boundary; }
};

struct CutKind {
  bool trivial;
  bool degenerate;
};

// Validating constructor; throws InputError unless the elements form a cut
// (disconnecting, no vertex-edge incidence). Cuts with edges must leave
// exactly two components (IntegrityError otherwise — guaranteed by
// triconnectivity). Side 1 is the side whose component contains the
// minimum surviving vertex.
VertexEdgeCut make_cut(const Graph& g, VertexSet vs, std::vector<Edge> es);

// Whether the elements form a valid cut (make_cut would succeed).
bool is_cut(const Graph& g, VertexSet vs, const std::vector<Edge>& es);

// All of 𝔐₁ ∪ 𝔐₂ ∪ 𝔐₃ by exhaustive scan. Requires triconnectivity.
std::vector<VertexEdgeCut> enumerate_cuts(const Graph& g);

// The two sides of a cut with at least one edge; InputError on a pure
// vertex cut (use parts_of).
std::array<CutSide, 2> sides(const Graph& g, const VertexEdgeCut& m);

// Replace cut vertex x by edge xy when y is the unique neighbor of x in
// y's component of G − m; empty result otherwise.
std::optional<VertexEdgeCut> complement_by_edge(const Graph& g, const VertexEdgeCut& m,
                                                VertexId x, VertexId y);

// All maximal cuts reachable from m by repeated complementing, sorted.
std::vector<VertexEdgeCut> maximal_extensions(const Graph& g, const VertexEdgeCut& m);

// Whether no cut vertex of m admits a complementing edge.
bool is_maximal_cut(const Graph& g, const VertexEdgeCut& m);

// trivial: some deletion component is a single vertex; degenerate: some
// side has empty interior. Requires at least one cut edge.
CutKind classify_cut(const Graph& g, const VertexEdgeCut& m);

// All one-end-per-edge selections except the two boundaries; each is a
// 3-cutset with exactly two parts. InputError on a trivial cut.
std::vector<Cutset3> inner_sets(const Graph& g, const VertexEdgeCut& m);

// The two boundaries T^M_1, T^M_2 as plain vertex triples (edges required).
std::array<Cutset3, 2> boundary_sets(const Graph& g, const VertexEdgeCut& m);

// e extends two vertex-disjoint pairs {u,v}, {t,w} into cuts of 𝔐₁.
bool is_singular_edge(const Graph& g, const Edge& e);

// big contains small: small arises from big by replacing some cut edges
// with one of their ends.
bool cut_contains(const VertexEdgeCut& big, const VertexEdgeCut& small);

// View a plain cutset as an extended-family member (no edges).
VertexEdgeCut as_cut(const Graph& g, const Cutset3& s);

}  // namespace tricut
