#pragma once

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selfsim/graph.hpp"
#include "selfsim/orbital.hpp"

namespace selfsim::fixtures {

/// Frozen values produced by tests/oracles/make_oracles.py.
const nlohmann::json& oracle_graphs();
Graph oracle_graph(const nlohmann::json& record);

/// Builds the C++ counterpart of an oracle "builder" string such as "torus 3 4".
Graph build_named(const std::string& builder);

/// Equality of two square matrices up to a simultaneous row/column permutation (exhaustive).
bool equal_up_to_permutation(const IntMatrix& a, const IntMatrix& b);

/// Uniformly random labeled graph with edge probability p, resampled until connected.
Graph random_connected_graph(int n, double p, std::mt19937& rng);

/// Applies a uniformly random vertex relabeling.
Graph random_relabel(const Graph& g, std::mt19937& rng);

/// Every connected labeled graph on n <= 6 vertices (isomorphic copies included).
std::vector<Graph> all_connected_graphs(int n);

/// Vertex orbits by enumerating all n! permutations; independent of the library oracle.
std::vector<std::vector<Vertex>> orbits_by_enumeration(const Graph& g);

}  // namespace selfsim::fixtures
