#pragma once

#include <string>

#include "tricut/graph.hpp"

namespace tricut {

// Parses either the edge-list format (first non-comment line "n m", then m
// lines "u v" with 0-based ids; '#' starts a comment) or the JSON graph
// schema ({"n": ..., "edges": [[u,v], ...]}, optionally wrapped in a
// {"graph": ...} object). InputError with a line number on malformed text,
// loops, or duplicate edges.
Graph parse_graph(const std::string& text);

// The canonical edge-list serialization of a graph.
std::string write_edge_list(const Graph& g);

// Full analysis report (graph, cutset census, complexes with parts and
// neighborhoods, hypertree, verification summary) as canonical JSON.
// Byte-identical across runs for identical input.
std::string analysis_report_json(const Graph& g);

// The same report as a human-readable text summary.
std::string analysis_report_text(const Graph& g);

// Cutset census only.
std::string cutset_census_text(const Graph& g);

// The hypertree of decomposition in DOT format: complexes are ellipse
// nodes, hyperedges are labeled box nodes joined to their complexes.
std::string hypertree_dot(const Graph& g);

}  // namespace tricut
