#pragma once

#include "tricut/complexes.hpp"

namespace tricut {

// The hypergraph of decomposition T(G): vertices are the complexes of the
// graph, hyperedges the maximal sets of pairwise neighboring complexes.
struct DecompositionHypertree {
  std::vector<Complex> nodes;                  // classify_complexes order
  std::vector<std::vector<ComplexPart>> parts; // parts[i] = P(nodes[i])
  // belongs[i][j] = index into parts[i] of the part A_{i > j} to which every
  // cutset of nodes[j] \ nodes[i] belongs; nullopt when that difference is
  // empty (overlapping complexes), in which case nodes[i] never separates
  // nodes[j] from anything.
  std::vector<std::vector<std::optional<std::size_t>>> belongs;
  std::vector<std::vector<std::size_t>> hyperedges;  // sorted index sets
};

// The belongs table alone: entry (i,j) as described above. Uniqueness of the
// receiving part and V(C_j) inside its neighborhood are asserted
// (IntegrityError on violation).
std::vector<std::vector<std::optional<std::size_t>>> belongs_table(
    const Graph& g, std::span<const Complex> nodes,
    std::span<const std::vector<ComplexPart>> parts);

// C_i separates C_j from C_k when they belong to different parts of P(C_i).
bool separates(const DecompositionHypertree& t, std::size_t i, std::size_t j,
               std::size_t k);

// Neighboring: no third complex separates the two.
bool neighboring(const DecompositionHypertree& t, std::size_t i, std::size_t j);

// Builds T(G) and verifies it: the separation relation satisfies the
// hypertree-theorem hypothesis, the result passes is_hypertree, and removing
// any node splits the hypergraph exactly into that node's belongs classes.
// Any violation raises IntegrityError.
DecompositionHypertree build_hypertree(const Graph& g);
DecompositionHypertree build_hypertree(const Graph& g,
                                       std::vector<Complex> complexes);

// True when every simple cycle of the 2-section lies inside one hyperedge.
bool is_hypertree(const DecompositionHypertree& t);

}  // namespace tricut
