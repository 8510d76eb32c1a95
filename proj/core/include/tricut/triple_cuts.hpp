#pragma once

#include <optional>

#include "tricut/cuts.hpp"

namespace tricut {

// Triple cut F = M1 ∪ M2 ∪ M3 built from a line S with three parts
// A1,A2,A3 and at least one subordinated trivial cutset. M_i is S with
// every degree-3 vertex a replaced by the edge from a into T(a) ∩ I(A_i);
// M'_i is the unique 3-edge cut containing M_i when one exists, else M_i.
// B_i (B'_i) is the part of the M_i (M'_i) decomposition inside A_i, with
// boundary T_i (T'_i).
struct TripleCut {
  Cutset3 line;
  std::vector<Cutset3> subordinated;   // trivial cutsets subordinated to the line
  std::array<Part, 3> line_parts;      // A_i, in decomposition order
  std::array<VertexEdgeCut, 3> cuts;      // M_i
  std::array<VertexEdgeCut, 3> extended;  // M'_i
  std::array<Part, 3> parts;              // B_i (boundary = T_i)
  std::array<Part, 3> extended_parts;     // B'_i (boundary = T'_i)
  VertexSet vertex_set;    // V(F) = V(M1) ∪ V(M2) ∪ V(M3)
  VertexSet neighborhood;  // O(F) = V(M'1) ∪ V(M'2) ∪ V(M'3)
};

// All trivial cutsets T(a), a ∈ s of degree 3, such that s has exactly
// three parts and every part's interior meets T(a). Empty when s has a
// different part count. InputError when s is not a cutset.
std::vector<Cutset3> subordinated_trivials(const Graph& g, const Cutset3& s);

// Assemble the triple cut with line s; empty when s has no subordinated
// trivial cutset. InputError when s is not a cutset.
std::optional<TripleCut> build_triple_cut(const Graph& g, const Cutset3& s);

// Inner sets of the triple cut: the line, all cutsets subordinated to it,
// and the inner sets of each nontrivial M_i, sorted. Verifies that every
// 3-cutset inside V(F) is an inner set or a boundary T_i, and that every
// 3-cutset inside O(F) is subordinated to the line or contained in some
// M'_i.
std::vector<Cutset3> triple_cut_inner_sets(const Graph& g, const TripleCut& f);

// The containment relation on vertex triples: s holds every cut vertex of
// m and an end of each cut edge.
bool set_contained_in_cut(VertexSet s, const VertexEdgeCut& m);

}  // namespace tricut
