#include "tricut/hypertree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tricut {

namespace {

// Connected components of the 2-section restricted to `alive` nodes.
std::vector<std::set<std::size_t>> components(
    const std::vector<std::vector<bool>>& adj, const std::set<std::size_t>& alive) {
  std::vector<std::set<std::size_t>> out;
  std::set<std::size_t> left = alive;
  while (!left.empty()) {
    std::vector<std::size_t> stack{*left.begin()};
    std::set<std::size_t> comp;
    left.erase(left.begin());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (auto it = left.begin(); it != left.end();) {
        if (adj[v][*it]) {
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<bool>> two_section(const DecompositionHypertree& t) {
  std::size_t n = t.nodes.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : t.hyperedges)
    for (std::size_t a : e)
      for (std::size_t b : e)
        if (a != b) adj[a][b] = true;
  return adj;
}

// Maximal cliques of a symmetric relation, smallest-index-first recursion.
void max_cliques(const std::vector<std::vector<bool>>& adj,
                 std::vector<std::size_t>& cur, std::size_t from,
                 std::vector<std::vector<std::size_t>>& out) {
  std::size_t n = adj.size();
  bool extended = false;
  for (std::size_t v = from; v < n; ++v) {
    bool ok = true;
    for (std::size_t u : cur) ok &= adj[u][v];
    if (!ok) continue;
    extended = true;
    cur.push_back(v);
    max_cliques(adj, cur, v + 1, out);
    cur.pop_back();
  }
  if (extended || cur.empty()) return;
  // cur is extendable downward too; keep it only if maximal overall.
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
    bool ok = true;
    for (std::size_t u : cur) ok &= adj[u][v];
    if (ok) return;
  }
  out.push_back(cur);
}

}  // namespace

std::vector<std::vector<std::optional<std::size_t>>> belongs_table(
    const Graph& g, std::span<const Complex> nodes,
    std::span<const std::vector<ComplexPart>> parts) {
  std::size_t n = nodes.size();
  std::vector<std::vector<std::optional<std::size_t>>> table(
      n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Cutset3> diff;
      for (const Cutset3& t : nodes[j].members)
        if (!std::binary_search(nodes[i].members.begin(), nodes[i].members.end(),
                                t))
          diff.push_back(t);
      if (diff.empty()) continue;  // overlapping complexes: no receiving part

      std::optional<std::size_t> idx;
      for (const Cutset3& t : diff) {
        std::size_t k = belongs_index(g, nodes[i], parts[i], t);
        if (idx && *idx != k)
          throw IntegrityError("cutsets of one complex belong to two parts of " +
                               to_string(nodes[i]));
        idx = k;
      }
      if (!nodes[j].vertex_set.subset_of(parts[i][*idx].neighborhood))
        throw IntegrityError("vertex set of " + to_string(nodes[j]) +
                             " escapes the receiving part neighborhood in " +
                             to_string(nodes[i]));
      table[i][j] = idx;
    }
  return table;
}

bool separates(const DecompositionHypertree& t, std::size_t i, std::size_t j,
               std::size_t k) {
  if (i == j || i == k || j == k) return false;
  const auto& a = t.belongs[i][j];
  const auto& b = t.belongs[i][k];
  return a.has_value() && b.has_value() && *a != *b;
}

bool neighboring(const DecompositionHypertree& t, std::size_t i, std::size_t j) {
  if (i == j) return false;
  for (std::size_t k = 0; k < t.nodes.size(); ++k)
    if (separates(t, k, i, j)) return false;
  return true;
}

bool is_hypertree(const DecompositionHypertree& t) {
  auto adj = two_section(t);
  std::size_t n = t.nodes.size();
  // Enumerate simple cycles rooted at their smallest node.
  for (std::size_t s = 0; s < n; ++s) {
    // Iterative DFS over simple paths starting at s using nodes > s.
    struct Frame {
      std::vector<std::size_t> path;
    };
    std::vector<Frame> frames{{{s}}};
    while (!frames.empty()) {
      Frame f = std::move(frames.back());
      frames.pop_back();
      std::size_t v = f.path.back();
      if (f.path.size() >= 3 && adj[v][s]) {
        std::vector<std::size_t> sorted = f.path;
        std::sort(sorted.begin(), sorted.end());
        bool inside = false;
        for (const auto& e : t.hyperedges)
          inside |=
              std::includes(e.begin(), e.end(), sorted.begin(), sorted.end());
        if (!inside) return false;
      }
      for (std::size_t w = s + 1; w < n; ++w) {
        if (!adj[v][w]) continue;
        if (std::find(f.path.begin(), f.path.end(), w) != f.path.end()) continue;
        Frame next = f;
        next.path.push_back(w);
        frames.push_back(std::move(next));
      }
    }
  }
  return true;
}

DecompositionHypertree build_hypertree(const Graph& g,
                                       std::vector<Complex> complexes) {
  DecompositionHypertree t;
  t.nodes = std::move(complexes);
  for (const Complex& c : t.nodes) t.parts.push_back(complex_parts(g, c));
  t.belongs = belongs_table(g, t.nodes, t.parts);

  std::size_t n = t.nodes.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (separates(t, a, b, c) && separates(t, b, a, c))
          throw IntegrityError("complexes " + to_string(t.nodes[a]) + " and " +
                               to_string(t.nodes[b]) +
                               " separate each other from a third");

  if (n > 1) {
    std::vector<std::vector<bool>> nb(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        nb[i][j] = i != j && neighboring(t, i, j);
    std::vector<std::size_t> cur;
    max_cliques(nb, cur, 0, t.hyperedges);
    std::sort(t.hyperedges.begin(), t.hyperedges.end());
  }

  if (!is_hypertree(t))
    throw IntegrityError("hypergraph of decomposition contains an uncovered cycle");

  // Removing any node must split the hypergraph exactly into its separation
  // classes: j and k stay together iff the node does not separate them.
  // (Grouping by the belongs entry alone is not enough — a complex whose
  // members all lie inside node i is separated from nothing and therefore
  // bridges every class.)
  auto adj = two_section(t);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> alive;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) alive.insert(j);
    auto comps = components(adj, alive);
    std::vector<std::size_t> root(n);
    for (std::size_t j = 0; j < n; ++j) root[j] = j;
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (std::size_t j : alive)
      for (std::size_t k : alive)
        if (j < k && !separates(t, i, j, k)) root[find(j)] = find(k);
    std::map<std::size_t, std::set<std::size_t>> classes;
    for (std::size_t j : alive) classes[find(j)].insert(j);
    std::vector<std::set<std::size_t>> expected;
    for (auto& [key, cls] : classes) expected.push_back(cls);
    std::sort(expected.begin(), expected.end());
    if (comps != expected)
      throw IntegrityError("components after removing " + to_string(t.nodes[i]) +
                           " differ from its belongs classes");
  }
  return t;
}

DecompositionHypertree build_hypertree(const Graph& g) {
  return build_hypertree(g, classify_complexes(g));
}

}  // namespace tricut
