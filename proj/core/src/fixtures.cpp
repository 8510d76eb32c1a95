#include "tricut/fixtures.hpp"

#include <random>

namespace tricut {

namespace {

std::vector<Edge> es(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

Graph make_wheel6() {
  return gen_wheel(6);
}

// p=0, q1..q4=1..4, u=5, v=6.
Graph make_sing1() {
  return Graph(7,
               es({{0, 5}, {0, 6}, {0, 3}, {5, 1}, {5, 2}, {6, 4}, {6, 1},
                   {2, 3}, {3, 4}, {1, 2}, {4, 1}}),
               {"p", "q1", "q2", "q3", "q4", "u", "v"});
}

// p=0, q1..q4=1..4, x1=5, x2=6, y=7.
Graph make_flower1() {
  return Graph(8,
               es({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {1, 4},
                   {2, 3}, {5, 6}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 3},
                   {7, 4}}),
               {"p", "q1", "q2", "q3", "q4", "x1", "x2", "y"});
}

// a1..a4=0..3, b1..b4=4..7, matching a_i b_i for i=1..3.
Graph make_dk4() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(i + 4, j + 4);
    }
  for (VertexId i = 0; i < 3; ++i) e.emplace_back(i, i + 4);
  return Graph(8, std::move(e), {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
}

// a=0, b=1, c=2; triangle i has u_i=3i, v_i=3i+1, w_i=3i+2 (i counted from 1).
Graph make_y3() {
  std::vector<Edge> e;
  std::vector<std::string> labels{"a", "b", "c"};
  for (int i = 1; i <= 3; ++i) {
    VertexId u = 3 * i, v = 3 * i + 1, w = 3 * i + 2;
    e.emplace_back(0, u);
    e.emplace_back(1, v);
    e.emplace_back(2, w);
    e.emplace_back(u, v);
    e.emplace_back(v, w);
    e.emplace_back(u, w);
    std::string t = std::to_string(i);
    labels.push_back("u" + t);
    labels.push_back("v" + t);
    labels.push_back("w" + t);
  }
  return Graph(12, std::move(e), std::move(labels));
}

}  // namespace

Graph gen_wheel(int m) {
  if (m < 6) throw InputError("wheel rim must have at least 6 vertices");
  if (m > 63) throw InputError("wheel rim too large");
  std::vector<Edge> e;
  std::vector<std::string> labels{"p"};
  for (VertexId i = 1; i <= m; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i == m ? 1 : i + 1);
    labels.push_back("q" + std::to_string(i));
  }
  return Graph(m + 1, std::move(e), std::move(labels));
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    v.push_back({"WHEEL6", make_wheel6()});
    v.push_back({"SING1", make_sing1()});
    v.push_back({"FLOWER1", make_flower1()});
    v.push_back({"DK4", make_dk4()});
    v.push_back({"Y3", make_y3()});
    for (const Fixture& f : v)
      if (!is_triconnected(f.graph) || f.graph.vertex_count() <= 6)
        throw IntegrityError("fixture " + f.name + " violates preconditions");
    return v;
  }();
  return all;
}

const Graph& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f.graph;
  throw InputError("unknown fixture: " + name);
}

Graph gen_random_triconnected(int n, std::uint64_t seed) {
  if (n < 7) throw InputError("need at least 7 vertices");
  if (n > 64) throw InputError("too many vertices");
  std::mt19937_64 rng(seed);
  // Engine output is reduced with %, not std::uniform_int_distribution,
  // so results are identical across standard library implementations.
  auto pick = [&](std::size_t k) { return std::size_t(rng() % k); };

  Graph g = gen_wheel(6);
  while (g.vertex_count() < n) {
    bool want_split = pick(2) == 0;

    std::vector<std::pair<VertexId, VertexId>> nonadjacent;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u + 1; v < g.vertex_count(); ++v)
        if (!g.adjacent(u, v)) nonadjacent.emplace_back(u, v);
    std::vector<VertexId> splittable;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 4) splittable.push_back(v);

    if (want_split ? splittable.empty() : !nonadjacent.empty()) want_split = false;
    if (!want_split && nonadjacent.empty()) want_split = true;

    std::vector<Edge> edges = g.edges();
    int nv = g.vertex_count();
    if (want_split) {
      // Split v into v + new vertex w: shuffle v's neighbors, v keeps the
      // first k (k >= 2), w takes the rest (>= 2) plus the edge vw.
      VertexId v = splittable[pick(splittable.size())];
      std::vector<VertexId> nb = g.neighbors(v).to_vector();
      for (std::size_t i = nb.size(); i > 1; --i)
        std::swap(nb[i - 1], nb[pick(i)]);
      std::size_t k = 2 + pick(nb.size() - 3);
      VertexId w = nv;
      std::erase_if(edges, [&](const Edge& e) { return e.incident(v); });
      for (std::size_t i = 0; i < nb.size(); ++i)
        edges.emplace_back(i < k ? v : w, nb[i]);
      edges.emplace_back(v, w);
      ++nv;
    } else {
      auto [u, v] = nonadjacent[pick(nonadjacent.size())];
      edges.emplace_back(u, v);
    }
    g = Graph(nv, std::move(edges));
  }
  if (!is_triconnected(g))
    throw IntegrityError("random growth produced a non-triconnected graph");
  return g;
}

}  // namespace tricut
