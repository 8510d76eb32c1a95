#include "tricut/oracle.hpp"

#include <algorithm>

namespace tricut {

std::vector<Part> oracle_parts(const Graph& g, std::span<const Cutset3> family) {
  // Per member, precompute the component list of G - S once; "S splits A"
  // is then a direct transcription of the definition.
  struct MemberData {
    VertexSet set;
    std::vector<VertexSet> components;
  };
  std::vector<MemberData> members;
  VertexSet boundary_union;
  for (const Cutset3& s : family) {
    auto comps = components_after_removal(g, s.set());
    if (comps.size() < 2) throw InputError(to_string(s) + " is not a cutset");
    members.push_back({s.set(), std::move(comps)});
    boundary_union |= s.set();
  }

  auto split_by = [](const MemberData& m, VertexSet a) {
    VertexSet rest = a - m.set;
    int touched = 0;
    for (const VertexSet& c : m.components)
      if (c.intersects(rest)) ++touched;
    return touched >= 2;
  };

  int n = g.vertex_count();
  if (n > 20) throw InputError("oracle limited to 20 vertices");
  std::vector<std::uint32_t> order(std::size_t(1) << n);
  for (std::uint32_t a = 0; a < order.size(); ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca > cb : a < b;
  });

  std::vector<VertexSet> maximal;
  for (std::uint32_t bits : order) {
    VertexSet a(bits);
    if (a.empty()) continue;
    bool dominated = false;
    for (VertexSet m : maximal)
      if (a.subset_of(m)) { dominated = true; break; }
    if (dominated) continue;  // subsets of unsplit sets are unsplit
    bool split = false;
    for (const MemberData& m : members)
      if (split_by(m, a)) { split = true; break; }
    if (!split) maximal.push_back(a);
  }

  std::vector<Part> parts;
  for (VertexSet a : maximal)
    parts.push_back(Part{a, a & boundary_union, a - boundary_union});
  sort_parts(parts);
  return parts;
}

}  // namespace tricut
