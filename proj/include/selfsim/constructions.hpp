#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

struct RootedGraph {
    Graph graph;
    Vertex root = 0;
};

struct EdgeRootedGraph {
    Graph graph;
    Edge root_edge;
};

// Vertex labelings are fixed and documented per constructor; outputs are byte-stable.

/// (u, a) -> u * |F| + a
Graph cartesian_product(const Graph& g, const Graph& f);
/// Cartesian edges plus (u,a)~(v,b) for u~v and a~b; labeling as cartesian_product.
Graph strong_product(const Graph& g, const Graph& f);
/// G's vertices keep their labels; copy i of F occupies |G| + i*|F| .. |G| + (i+1)*|F| - 1.
Graph corona(const Graph& g, const Graph& f);
/// G first, then F shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& f);

Graph prism(const Graph& g);           // G □ K2
Graph strong_prism(const Graph& g);    // G ⊠ K2
Graph minimal_corona(const Graph& g);  // G ⊙ K1

enum class UnaryOp { Prism, StrongPrism, MinimalCorona };
Graph apply(UnaryOp op, const Graph& g);
/// Applies `op` r >= 1 times.
Graph iterate(UnaryOp op, const Graph& g, int r);

/// q paths of length m sharing an end vertex. Root 0; path t holds 1 + t*m .. (t+1)*m,
/// ordered by distance from the root.
RootedGraph starlike_load(int q, int m);
/// q cycles C_m sharing the spine {0, 1}; page t holds 2 + t*(m-2) .. 1 + (t+1)*(m-2),
/// walking from the neighbour of 0 to the neighbour of 1.
EdgeRootedGraph book_load(int q, int m);
/// q copies of K_p sharing the root 0.
RootedGraph clique_bouquet(int p, int q);

/// Glues a copy of L at each vertex v of G (root identified with v). G keeps its labels;
/// the non-root vertices of copy v follow in ascending L order at |G| + v*(|L|-1).
Graph vertex_load(const Graph& g, const RootedGraph& load);
/// Glues a copy of B on each edge {u,v} (u < v) of G, spine min -> u, spine max -> v. The
/// spine is identified with the support edge. Copy e (lexicographic edge index) puts its
/// remaining vertices at |G| + e*(|B|-2) in ascending B order.
Graph edge_load(const Graph& g, const EdgeRootedGraph& load);

// -- named families ----------------------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,q}, center 0.
Graph star_graph(int q);
/// CL_n = C_n □ K2
Graph circular_ladder(int n);
/// ML_n: cycle 0..2n-1 plus diagonals i ~ i+n
Graph moebius_ladder(int n);
/// CP_n (n even): cycles u_0..u_{n-1} (labels 0..n-1) and w_0..w_{n-1} (labels n..2n-1),
/// plus u_i ~ w_{i+1} and u_{i+1} ~ w_i for every even i.
Graph crossed_prism(int n);
/// AP_n: cycles u (0..n-1) and w (n..2n-1), plus u_i ~ w_i and u_i ~ w_{i+1}.
Graph antiprism(int n);
/// T(s_1, ..., s_r) = C_{s_1} □ ... □ C_{s_r}
Graph torus(const std::vector<int>& dims);
/// G_n(p, q): q copies of K_p coalesced at each vertex of C_n. p = 2 gives the generalized sun.
Graph generalized_sun(int n, int p, int q);
/// F ⊙ (q K_p)
Graph corona_with_cliques(const Graph& f, int p, int q);

struct FamilyParams {
    int n = 0;
    int p = 0;
    int q = 0;
    int m = 0;
    std::vector<int> dims;
};

/// Dispatches on a family name: cycle, path, complete, star, sun, generalized-sun,
/// circular-ladder, moebius-ladder, crossed-prism, antiprism, torus, loaded-torus,
/// book-loaded-cycle. Throws InvalidArgument on unknown names or bad parameters.
Graph family(std::string_view name, const FamilyParams& params);
std::vector<std::string> family_names();

}  // namespace selfsim
