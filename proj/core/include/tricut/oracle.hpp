#pragma once

#include "tricut/cutsets.hpp"

namespace tricut {

// Definitional oracle for decompose: scan all vertex subsets, keep the
// maximal ones split by no family member. Exponential; desk scale only.
std::vector<Part> oracle_parts(const Graph& g, std::span<const Cutset3> family);

}  // namespace tricut
