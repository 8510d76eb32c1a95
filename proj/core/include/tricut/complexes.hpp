#pragma once

#include <optional>

#include "tricut/flowers.hpp"
#include "tricut/triple_cuts.hpp"

namespace tricut {

// The cover of all 3-cutsets by complexes: triple complexes (one per line
// with subordinated trivial cutsets), complexes of maximal nondegenerate
// flowers, complexes of big cuts, small-cut pairs, and single-cutset
// complexes. Wheels are covered by one special complex holding everything.
enum class ComplexKind {
  wheel_flower,
  triple,
  flower,
  big_cut,
  small_cut_pair,
  single,
};

std::string to_string(ComplexKind k);

struct Complex {
  ComplexKind kind;
  std::vector<Cutset3> members;     // sorted, unique
  std::vector<Cutset3> boundaries;  // sorted vertex triples; not always cutsets
  VertexSet vertex_set;             // V(C) = union of members
  bool member_single = false;       // single complexes: the member is
                                    // independent of every other cutset

  std::optional<TripleCut> triple_source;
  std::optional<Flower> flower_source;
  std::optional<VertexEdgeCut> cut_source;  // big cut or small cut

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.kind == b.kind && a.members == b.members;
  }
};

std::string to_string(const Complex& c);

enum class PartClass { normal, small, empty };

// One part of the decomposition of the graph by the members of a complex,
// together with its neighborhood O(A). The neighborhood of a part with
// nonempty interior is built by complementing the boundary cutset by all
// possible edges lying in the opposite part and taking the side of the
// resulting cut; empty parts and parts of a single-cutset complex are their
// own neighborhood.
struct ComplexPart {
  Part part;
  VertexSet neighborhood;
  PartClass classification;
};

// The full cover. Every cutset of the graph is a member of at least one
// complex; complexes may overlap. Deterministic order: kind, then members.
std::vector<Complex> classify_complexes(const Graph& g);

// P(C) = decomposition by the members, each part with its neighborhood.
// The per-kind shape of the decomposition is verified (IntegrityError on
// violation).
std::vector<ComplexPart> complex_parts(const Graph& g, const Complex& c);

// The unique part with nonempty interior such that t lies inside O(A) and
// either t = boundary of A or t meets the interior of A. InputError when t
// is a member of c; IntegrityError when the part is missing or ambiguous.
std::size_t belongs_index(const Graph& g, const Complex& c,
                          std::span<const ComplexPart> parts, const Cutset3& t);
ComplexPart belongs(const Graph& g, const Complex& c, const Cutset3& t);

// All edges xy (x in t) such that t complemented by xy is a cut, paired
// with the complemented cut.
std::vector<std::pair<Edge, VertexEdgeCut>> complementing_edges(const Graph& g,
                                                                const Cutset3& t);

}  // namespace tricut
