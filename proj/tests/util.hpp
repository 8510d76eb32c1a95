#pragma once

#include <initializer_list>
#include <string>

#include "tricut/cutsets.hpp"
#include "tricut/fixtures.hpp"

namespace tricut::testutil {

inline VertexId vid(const Graph& g, const std::string& label) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  throw InputError("no vertex labelled " + label);
}

inline VertexSet vset(const Graph& g, std::initializer_list<const char*> labels) {
  VertexSet s;
  for (const char* l : labels) s.add(vid(g, l));
  return s;
}

inline Cutset3 cs(const Graph& g, const char* a, const char* b, const char* c) {
  return Cutset3(vid(g, a), vid(g, b), vid(g, c));
}

}  // namespace tricut::testutil
