#include "tricut/graph.hpp"

#include <algorithm>

namespace tricut {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string to_string(const Edge& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0 || n_ > 64) throw InputError("vertex count out of range: " + std::to_string(n_));
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InputError("duplicate edge");
  adjacency_.assign(std::size_t(n_), VertexSet{});
  for (const Edge& e : edges_) {
    if (!valid_vertex(e.a) || !valid_vertex(e.b))
      throw InputError("edge endpoint out of range: " + to_string(e));
    adjacency_[std::size_t(e.a)].add(e.b);
    adjacency_[std::size_t(e.b)].add(e.a);
  }
  if (!labels_.empty() && int(labels_.size()) != n_)
    throw InputError("label count does not match vertex count");
}

void Graph::require_vertex(VertexId v) const {
  if (!valid_vertex(v)) throw InputError("invalid vertex id " + std::to_string(v));
}

VertexSet Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return adjacency_[std::size_t(v)];
}

const std::string& Graph::label(VertexId v) const {
  require_vertex(v);
  static thread_local std::string fallback;
  if (std::size_t(v) < labels_.size() && !labels_[std::size_t(v)].empty())
    return labels_[std::size_t(v)];
  fallback = std::to_string(v);
  return fallback;
}

std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet removed_vertices,
                                                std::span<const Edge> removed_edges) {
  removed_vertices.for_each([&](VertexId v) { g.require_vertex(v); });
  for (const Edge& e : removed_edges)
    if (!g.has_edge(e)) throw InputError("removed edge not in graph: " + to_string(e));

  VertexSet alive = g.vertices() - removed_vertices;
  std::vector<VertexSet> components;
  VertexSet seen;
  alive.for_each([&](VertexId start) {
    if (seen.contains(start)) return;
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](VertexId v) {
        VertexSet nb = g.neighbors(v) & alive;
        for (const Edge& e : removed_edges)
          if (e.incident(v)) nb.remove(e.other(v));
        next |= nb - comp;
      });
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    components.push_back(comp);
  });
  return components;  // ordered by min vertex: starts scan ascending
}

bool is_connected(const Graph& g) {
  return components_after_removal(g, VertexSet{}).size() == 1;
}

bool is_triconnected(const Graph& g) {
  if (g.vertex_count() < 4) return false;
  if (!is_connected(g)) return false;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (components_after_removal(g, VertexSet::of({u, v})).size() != 1) return false;
  return true;
}

}  // namespace tricut
