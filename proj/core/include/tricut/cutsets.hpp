#pragma once

#include <span>
#include <vector>

#include "tricut/graph.hpp"

namespace tricut {

// A 3-vertex cutset, stored as a sorted triple.
struct Cutset3 {
  std::array<VertexId, 3> v;

  Cutset3(VertexId a, VertexId b, VertexId c);
  static Cutset3 from_set(VertexSet s);

  VertexSet set() const { return VertexSet::of({v[0], v[1], v[2]}); }
  bool contains(VertexId x) const { return x == v[0] || x == v[1] || x == v[2]; }
  friend bool operator==(const Cutset3&, const Cutset3&) = default;
  friend auto operator<=>(const Cutset3&, const Cutset3&) = default;
};

std::string to_string(const Cutset3& s);

// Part of decomposition by a cutset family: a maximal vertex set split by
// no member. Boundary vertices lie in some member, interior vertices in none.
struct Part {
  VertexSet vertices;
  VertexSet boundary;
  VertexSet interior;

  bool is_small() const { return vertices.count() == 2; }
  bool is_normal() const { return vertices.count() >= 3; }
  bool is_empty() const { return interior.empty(); }
  friend bool operator==(const Part&, const Part&) = default;
};

bool is_cutset(const Graph& g, const Cutset3& s);

// All 3-subsets whose removal disconnects g, by exhaustive scan.
// Requires a triconnected graph with more than 6 vertices.
std::vector<Cutset3> enumerate_cutsets(const Graph& g);

// r splits x: the vertices of x \ r occupy at least two components of G - r.
bool splits(const Graph& g, VertexSet r, VertexSet x);

// r separates u from w: neither is inside r and every surviving u-vertex is
// in a different component of G - r than every surviving w-vertex.
bool separates(const Graph& g, VertexSet r, VertexSet u, VertexSet w);

// One part per component H of G - s: vertices H + s, interior H, boundary s.
std::vector<Part> parts_of(const Graph& g, const Cutset3& s);

// Parts of decomposition by a family, sorted by (size descending, min vertex).
// Empty family yields the single part V(g).
std::vector<Part> decompose(const Graph& g, std::span<const Cutset3> family);

bool dependent(const Graph& g, const Cutset3& s, const Cutset3& t);

// Connected components of the dependence graph on the family, each sorted;
// components ordered by their minimum cutset.
std::vector<std::vector<Cutset3>> dependence_components(const Graph& g,
                                                        std::span<const Cutset3> family);

// Sort helper shared by decompose and the oracle.
void sort_parts(std::vector<Part>& parts);

}  // namespace tricut
