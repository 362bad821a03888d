#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "selfsim/rational.hpp"

namespace selfsim {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Partition;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// The constructor rejects loops, out-of-range endpoints and repeated edges, so every
/// Graph value satisfies the simple-graph invariants. Edges are kept sorted
/// lexicographically and adjacency lists ascending; both orders are part of the
/// observable behaviour (serialisers and constructors rely on them).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Same graph with vertex v renamed to image[v].
    Graph relabeled(std::span<const Vertex> image) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    Rational average;
    Rational variance;
    /// r -> (1/n) * sum_v d(v)^r for r = 1..max_moment.
    std::map<int, Rational> moments;
};

// -- I/O ---------------------------------------------------------------------------------

/// Edge-list text: "n m" header, then m lines "u v" with u < v. Lines starting with '#'
/// and blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 encoding (an optional ">>graph6<<" header is accepted on input).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Graphviz DOT. With a coloring, vertices of one cell share a fill color.
std::string to_dot(const Graph& g, const Partition* coloring = nullptr);

// -- elementary invariants ---------------------------------------------------------------

bool is_connected(const Graph& g);
DegreeStats degree_stats(const Graph& g, int max_moment = 2);
Rational edge_vertex_ratio(const Graph& g);
Rational density(const Graph& g);
std::int64_t cyclomatic_number(const Graph& g);

}  // namespace selfsim
