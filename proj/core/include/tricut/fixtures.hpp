#pragma once

#include <cstdint>

#include "tricut/graph.hpp"

namespace tricut {

// Canonical test graphs. Each is triconnected with more than 6 vertices.
struct Fixture {
  std::string name;
  Graph graph;
};

// WHEEL6 (wheel), SING1 (singular flower), FLOWER1 (plain flower),
// DK4 (big cut), Y3 (triple cut).
const std::vector<Fixture>& fixtures();

// Lookup by name; InputError when unknown.
const Graph& fixture(const std::string& name);

// Hub + m-cycle wheel; m >= 6 so that |V| > 6.
Graph gen_wheel(int m);

// Random triconnected graph grown from gen_wheel(6) by edge additions and
// vertex splits; deterministic in seed. n >= 7.
Graph gen_random_triconnected(int n, std::uint64_t seed);

}  // namespace tricut
