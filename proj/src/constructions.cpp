#include "selfsim/constructions.hpp"

#include <algorithm>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& f) {
    const int nf = f.order();
    std::vector<Edge> edges;
    edges.reserve(g.size() * static_cast<std::size_t>(nf) + f.size() * static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        for (const Edge& e : f.edges()) edges.emplace_back(u * nf + e.u, u * nf + e.v);
    }
    for (const Edge& e : g.edges()) {
        for (Vertex a = 0; a < nf; ++a) edges.emplace_back(e.u * nf + a, e.v * nf + a);
    }
    return Graph(g.order() * nf, std::move(edges));
}

Graph strong_product(const Graph& g, const Graph& f) {
    const int nf = f.order();
    const Graph grid = cartesian_product(g, f);
    std::vector<Edge> edges(grid.edges().begin(), grid.edges().end());
    for (const Edge& ge : g.edges()) {
        for (const Edge& fe : f.edges()) {
            edges.emplace_back(ge.u * nf + fe.u, ge.v * nf + fe.v);
            edges.emplace_back(ge.u * nf + fe.v, ge.v * nf + fe.u);
        }
    }
    return Graph(g.order() * nf, std::move(edges));
}

Graph corona(const Graph& g, const Graph& f) {
    const int n = g.order();
    const int nf = f.order();
    auto base = g.edges();
    std::vector<Edge> edges(base.begin(), base.end());
    for (Vertex i = 0; i < n; ++i) {
        const int offset = n + i * nf;
        for (const Edge& e : f.edges()) edges.emplace_back(offset + e.u, offset + e.v);
        for (Vertex a = 0; a < nf; ++a) edges.emplace_back(i, offset + a);
    }
    return Graph(n + n * nf, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& f) {
    auto base = g.edges();
    std::vector<Edge> edges(base.begin(), base.end());
    for (const Edge& e : f.edges()) edges.emplace_back(g.order() + e.u, g.order() + e.v);
    return Graph(g.order() + f.order(), std::move(edges));
}

Graph prism(const Graph& g) { return cartesian_product(g, complete_graph(2)); }
Graph strong_prism(const Graph& g) { return strong_product(g, complete_graph(2)); }
Graph minimal_corona(const Graph& g) { return corona(g, complete_graph(1)); }

Graph apply(UnaryOp op, const Graph& g) {
    switch (op) {
        case UnaryOp::Prism: return prism(g);
        case UnaryOp::StrongPrism: return strong_prism(g);
        case UnaryOp::MinimalCorona: return minimal_corona(g);
    }
    throw InvalidArgument("unknown graph operation");
}

Graph iterate(UnaryOp op, const Graph& g, int r) {
    require(r >= 1, "iteration count must be at least 1");
    Graph out = apply(op, g);
    for (int i = 1; i < r; ++i) out = apply(op, out);
    return out;
}

RootedGraph starlike_load(int q, int m) {
    require(q >= 1 && m >= 1, "starlike load needs q >= 1 and m >= 1");
    std::vector<Edge> edges;
    for (int t = 0; t < q; ++t) {
        Vertex previous = 0;
        for (int j = 1; j <= m; ++j) {
            Vertex v = 1 + t * m + (j - 1);
            edges.emplace_back(previous, v);
            previous = v;
        }
    }
    return {Graph(1 + q * m, std::move(edges)), 0};
}

EdgeRootedGraph book_load(int q, int m) {
    require(q >= 1, "book needs at least one page");
    require(m >= 3, "book pages must be cycles of length at least 3");
    std::vector<Edge> edges{{0, 1}};
    for (int t = 0; t < q; ++t) {
        Vertex previous = 0;
        for (int j = 0; j < m - 2; ++j) {
            Vertex v = 2 + t * (m - 2) + j;
            edges.emplace_back(previous, v);
            previous = v;
        }
        edges.emplace_back(previous, 1);
    }
    return {Graph(2 + q * (m - 2), std::move(edges)), Edge(0, 1)};
}

RootedGraph clique_bouquet(int p, int q) {
    require(p >= 1 && q >= 1, "clique bouquet needs p >= 1 and q >= 1");
    std::vector<Edge> edges;
    for (int t = 0; t < q; ++t) {
        // clique t: root plus vertices 1 + t*(p-1) .. t*(p-1) + p-1
        std::vector<Vertex> members{0};
        for (int j = 0; j < p - 1; ++j) members.push_back(1 + t * (p - 1) + j);
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
        }
    }
    return {Graph(1 + q * (p - 1), std::move(edges)), 0};
}

Graph vertex_load(const Graph& g, const RootedGraph& load) {
    const int n = g.order();
    const int nl = load.graph.order();
    require(n >= 1, "vertex loading needs a non-empty support");
    require(load.root >= 0 && load.root < nl, "load root out of range");

    // position of each non-root load vertex inside a copy
    std::vector<int> slot(static_cast<std::size_t>(nl), -1);
    for (Vertex a = 0, k = 0; a < nl; ++a) {
        if (a != load.root) slot[static_cast<std::size_t>(a)] = k++;
    }
    auto base = g.edges();
    std::vector<Edge> edges(base.begin(), base.end());
    for (Vertex v = 0; v < n; ++v) {
        auto map = [&](Vertex a) { return a == load.root ? v : n + v * (nl - 1) + slot[static_cast<std::size_t>(a)]; };
        for (const Edge& e : load.graph.edges()) edges.emplace_back(map(e.u), map(e.v));
    }
    return Graph(n + n * (nl - 1), std::move(edges));
}

Graph edge_load(const Graph& g, const EdgeRootedGraph& load) {
    const int n = g.order();
    const int nb = load.graph.order();
    require(g.size() >= 1, "edge loading needs a support with at least one edge");
    require(load.root_edge.v < nb && load.graph.adjacent(load.root_edge.u, load.root_edge.v),
            "book spine must be an edge of the load");

    std::vector<int> slot(static_cast<std::size_t>(nb), -1);
    for (Vertex a = 0, k = 0; a < nb; ++a) {
        if (a != load.root_edge.u && a != load.root_edge.v) slot[static_cast<std::size_t>(a)] = k++;
    }
    auto base = g.edges();
    std::vector<Edge> edges(base.begin(), base.end());
    int index = 0;
    for (const Edge& support : g.edges()) {
        auto map = [&](Vertex a) {
            if (a == load.root_edge.u) return support.u;
            if (a == load.root_edge.v) return support.v;
            return n + index * (nb - 2) + slot[static_cast<std::size_t>(a)];
        };
        for (const Edge& e : load.graph.edges()) {
            if (e == load.root_edge) continue;
            edges.emplace_back(map(e.u), map(e.v));
        }
        ++index;
    }
    return Graph(n + static_cast<int>(g.size()) * (nb - 2), std::move(edges));
}

// -- families --------------------------------------------------------------------------

Graph path_graph(int n) {
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph star_graph(int q) {
    require(q >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= q; ++v) edges.emplace_back(0, v);
    return Graph(q + 1, std::move(edges));
}

Graph circular_ladder(int n) {
    require(n >= 3, "circular ladder needs n >= 3");
    return prism(cycle_graph(n));
}

Graph moebius_ladder(int n) {
    require(n >= 3, "Moebius ladder needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 2 * n; ++v) edges.emplace_back(v, (v + 1) % (2 * n));
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + n);
    return Graph(2 * n, std::move(edges));
}

Graph crossed_prism(int n) {
    require(n >= 4 && n % 2 == 0, "crossed prism needs an even n >= 4");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
    }
    for (Vertex i = 0; i < n; i += 2) {
        edges.emplace_back(i, n + i + 1);
        edges.emplace_back(i + 1, n + i);
    }
    return Graph(2 * n, std::move(edges));
}

Graph antiprism(int n) {
    require(n >= 3, "antiprism needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        const Vertex next = (i + 1) % n;
        edges.emplace_back(i, next);
        edges.emplace_back(n + i, n + next);
        edges.emplace_back(i, n + i);
        edges.emplace_back(i, n + next);
    }
    return Graph(2 * n, std::move(edges));
}

Graph torus(const std::vector<int>& dims) {
    require(!dims.empty(), "torus needs at least one dimension");
    for (int s : dims) require(s >= 3, "torus dimensions must be at least 3");
    Graph out = cycle_graph(dims.front());
    for (std::size_t i = 1; i < dims.size(); ++i) out = cartesian_product(out, cycle_graph(dims[i]));
    return out;
}

Graph generalized_sun(int n, int p, int q) {
    require(n >= 3 && p >= 1 && q >= 1, "G_n(p,q) needs n >= 3, p >= 1, q >= 1");
    return vertex_load(cycle_graph(n), clique_bouquet(p, q));
}

Graph corona_with_cliques(const Graph& f, int p, int q) {
    require(p >= 1 && q >= 1, "corona with q K_p needs p >= 1 and q >= 1");
    Graph cliques = complete_graph(p);
    for (int i = 1; i < q; ++i) cliques = disjoint_union(cliques, complete_graph(p));
    return corona(f, cliques);
}

Graph family(std::string_view name, const FamilyParams& params) {
    if (name == "cycle") return cycle_graph(params.n);
    if (name == "path") return path_graph(params.n);
    if (name == "complete") return complete_graph(params.n);
    if (name == "star") return star_graph(params.q > 0 ? params.q : params.n);
    if (name == "sun") return generalized_sun(params.n, 2, 1);
    if (name == "generalized-sun") return generalized_sun(params.n, params.p > 0 ? params.p : 2, params.q > 0 ? params.q : 1);
    if (name == "circular-ladder") return circular_ladder(params.n);
    if (name == "moebius-ladder") return moebius_ladder(params.n);
    if (name == "crossed-prism") return crossed_prism(params.n);
    if (name == "antiprism") return antiprism(params.n);
    if (name == "torus") return torus(params.dims);
    if (name == "loaded-torus") return vertex_load(torus(params.dims), starlike_load(params.q, params.m));
    if (name == "book-loaded-cycle") return edge_load(cycle_graph(params.n), book_load(params.q, params.m));
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() {
    return {"cycle",          "path",           "complete",      "star",      "sun",
            "generalized-sun", "circular-ladder", "moebius-ladder", "crossed-prism", "antiprism",
            "torus",          "loaded-torus",   "book-loaded-cycle"};
}

}  // namespace selfsim
