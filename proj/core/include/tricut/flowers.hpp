#pragma once

#include <optional>

#include "tricut/cuts.hpp"

namespace tricut {

// Flower F = (p; q1..qm): a center with m >= 4 cyclically ordered petals
// such that some family of the sets Q_{i,j} = {q_i,q_j,p} decomposes the
// graph into exactly the m parts G_{i,i+1} with boundary Q_{i,i+1}.
// Petals are stored in canonical cyclic order (lexicographically minimal
// over all rotations and both directions); parts[i] is the part between
// petals[i] and petals[i+1].
struct Flower {
  VertexId center = 0;
  std::vector<VertexId> petals;
  std::vector<Part> parts;
  bool maximal = false;
  bool degenerate = false;
  bool singular = false;

  int petal_count() const { return int(petals.size()); }
  VertexId petal(int i) const;  // cyclic index
  const Part& part(int i) const;

  // V(F) = {p, q1..qm}.
  VertexSet vertex_set() const;

  // Q_{i,i+1} = {q_i, q_{i+1}, p} (may or may not be a cutset).
  Cutset3 boundary(int i) const;

  // All inner sets Q_{i,j} over non-neighboring index pairs, sorted.
  std::vector<Cutset3> inner_sets() const;

  // Equality on center and canonical petal cycle.
  friend bool operator==(const Flower& a, const Flower& b) {
    return a.center == b.center && a.petals == b.petals;
  }
};

std::string to_string(const Flower& f);

struct FlowerKind {
  bool degenerate;
  bool singular;
};

// Neighborhood data of a maximal nondegenerate flower.
struct FlowerNeighborhood {
  std::vector<VertexId> u_vertices;  // u_{i,i+1} per part; equals center when undefined
  VertexSet center_neighborhood;     // T(p); empty when no vertex qualifies
  VertexSet neighborhood;            // O(F) = V(F) with all u_{i,i+1} added
};

// The boundary-cut apparatus of one part. M and M' may be vertex-only
// members of the extended family, so they are kept as element lists; `m`
// and `m_prime` additionally hold the validated cut whenever the elements
// actually disconnect the graph.
struct FlowerBoundaryCuts {
  VertexSet m_vertices;
  std::vector<Edge> m_edges;
  std::optional<VertexEdgeCut> m;       // M_{i,i+1} when it disconnects
  std::optional<VertexEdgeCut> m_star;  // M*_{i,i+1}: M complemented by p·u
  VertexSet m_prime_vertices;
  std::vector<Edge> m_prime_edges;
  std::optional<VertexEdgeCut> m_prime;  // M'_{i,i+1} when it disconnects
  Cutset3 q_prime{0, 1, 2};              // Q'_{i,i+1}; always overwritten
  VertexId u;                            // u_{i,i+1}
  VertexSet g_prime;                     // G'_{i,i+1}
  VertexSet g_prime_neighborhood;        // O(G'_{i,i+1})
};

// Reconstruct the flower generated by a dependence-connected family of at
// least two cutsets. Empty result when the family does not generate one
// (a small part appears, no common vertex exists, or validation of the
// inner-set structure fails). InputError when the family is not
// dependence-connected or has fewer than two members.
std::optional<Flower> generate_flower(const Graph& g, std::span<const Cutset3> family);

// The unique maximal flower containing f: closure over all cutsets through
// the center that are dependence-connected with f's inner sets. Sets the
// maximal/degenerate/singular flags on the result.
Flower maximal_flower(const Graph& g, const Flower& f);

// degenerate: V(F) lies inside the vertex set of some 3-edge cut (possible
// only for 4 petals); singular: the center has degree 3. InputError unless
// f is maximal.
FlowerKind classify_flower(const Graph& g, const Flower& f);

// u_{i,i+1}, T(p) and O(F) for a maximal nondegenerate flower; InputError
// otherwise.
FlowerNeighborhood flower_neighborhood(const Graph& g, const Flower& f);

// The records M, M*, M', Q', G', O(G') for part i of a maximal
// nondegenerate flower. InputError on a bad index or unsuitable flower.
FlowerBoundaryCuts boundary_cuts(const Graph& g, const Flower& f, int i);

// The hub when g is a wheel: a vertex adjacent to all others whose removal
// leaves a single cycle. Empty otherwise.
std::optional<VertexId> wheel_hub(const Graph& g);

}  // namespace tricut
