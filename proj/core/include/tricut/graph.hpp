#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricut/types.hpp"

namespace tricut {

// Immutable simple undirected graph on dense ids 0..n-1, n <= 64.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }
  void require_vertex(VertexId v) const;

  VertexSet neighbors(VertexId v) const;
  int degree(VertexId v) const { return neighbors(v).count(); }
  bool adjacent(VertexId u, VertexId v) const { return neighbors(u).contains(v); }
  bool has_edge(const Edge& e) const { return adjacent(e.a, e.b); }

  // Label of a vertex for reporting; falls back to the numeric id.
  const std::string& label(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;           // sorted, unique
  std::vector<VertexSet> adjacency_;  // symmetric, no self-neighbors
  std::vector<std::string> labels_;
};

// Connected components of g after deleting the given vertices and edges,
// as vertex sets ordered by minimum contained vertex.
std::vector<VertexSet> components_after_removal(const Graph& g,
                                                VertexSet removed_vertices,
                                                std::span<const Edge> removed_edges = {});

bool is_connected(const Graph& g);

// Definition-level test: |V| >= 4, connected, and connected after removing
// any vertex pair.
bool is_triconnected(const Graph& g);

}  // namespace tricut
