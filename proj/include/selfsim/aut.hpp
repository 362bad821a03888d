#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selfsim/graph.hpp"
#include "selfsim/partition.hpp"

namespace selfsim {

using BigInt = boost::multiprecision::cpp_int;

/// Automorphism group of a graph, given by generators.
struct AutGroup {
    std::vector<Permutation> generators;
    BigInt order = 1;
    /// Orbits in canonical cell order.
    Partition orbits;
};

/// Limits for the individualization-refinement search.
struct SearchLimits {
    int max_vertices = 5000;
    std::int64_t max_nodes = 5'000'000;
};

/// Coarsest equitable partition refining `seed` (colour refinement). Canonical cell order.
Partition equitable_refinement(const Graph& g, const Partition& seed);

/// Full automorphism group by individualization-refinement with orbit pruning.
/// Throws ResourceError when the graph or the search tree exceeds `limits`.
AutGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});

Partition orbit_partition(const Graph& g, const SearchLimits& limits = {});

/// Exhaustive n! enumeration; refuses n > 8. Test oracle.
Partition brute_force_orbits(const Graph& g);

bool is_vertex_transitive(const Graph& g);

/// Aut(G) acts transitively on the edge set. Throws InvalidArgument on edgeless graphs.
bool is_edge_transitive(const Graph& g);

}  // namespace selfsim
