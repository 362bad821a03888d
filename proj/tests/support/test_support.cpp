#include "test_support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "selfsim/constructions.hpp"
#include "selfsim/partition.hpp"

namespace selfsim::fixtures {

const nlohmann::json& oracle_graphs() {
    static const nlohmann::json data = [] {
        std::ifstream in(std::string(SELFSIM_TEST_DATA_DIR) + "/oracle_graphs.json");
        if (!in) throw std::runtime_error("missing oracle_graphs.json");
        return nlohmann::json::parse(in).at("graphs");
    }();
    return data;
}

Graph oracle_graph(const nlohmann::json& record) {
    std::vector<Edge> edges;
    for (const auto& e : record.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    return Graph(record.at("n").get<int>(), std::move(edges));
}

Graph build_named(const std::string& builder) {
    std::istringstream in(builder);
    std::string kind;
    in >> kind;
    std::vector<int> a;
    for (int x; in >> x;) a.push_back(x);
    const auto arg = [&](std::size_t i) { return a.at(i); };
    if (kind == "path") return path_graph(arg(0));
    if (kind == "cycle") return cycle_graph(arg(0));
    if (kind == "complete") return complete_graph(arg(0));
    if (kind == "star") return star_graph(arg(0));
    if (kind == "circular-ladder") return circular_ladder(arg(0));
    if (kind == "moebius-ladder") return moebius_ladder(arg(0));
    if (kind == "antiprism") return antiprism(arg(0));
    if (kind == "crossed-prism") return crossed_prism(arg(0));
    if (kind == "torus") return torus(a);
    if (kind == "sun") return generalized_sun(arg(0), 2, 1);
    if (kind == "generalized-sun") return generalized_sun(arg(0), arg(1), arg(2));
    if (kind == "loaded-cycle") return vertex_load(cycle_graph(arg(0)), starlike_load(arg(1), arg(2)));
    if (kind == "loaded-torus") return vertex_load(torus({arg(0), arg(1)}), starlike_load(arg(2), arg(3)));
    if (kind == "book-loaded-cycle") return edge_load(cycle_graph(arg(0)), book_load(arg(1), arg(2)));
    if (kind == "book-loaded-ladder") return edge_load(circular_ladder(arg(0)), book_load(arg(1), arg(2)));
    if (kind == "prism-cycle") return prism(cycle_graph(arg(0)));
    if (kind == "strong-prism-cycle") return strong_prism(cycle_graph(arg(0)));
    if (kind == "minimal-corona-cycle") return minimal_corona(cycle_graph(arg(0)));
    if (kind == "corona-cycle") return corona_with_cliques(cycle_graph(arg(0)), arg(1), arg(2));
    throw std::invalid_argument("unknown builder " + builder);
}

bool equal_up_to_permutation(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> pi(a.size());
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[pi[i]][pi[j]] == b[i][j];
        }
        if (ok) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<Vertex> image(static_cast<std::size_t>(g.order()));
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    return g.relabeled(image);
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1U) edges.emplace_back(slots[i].first, slots[i].second);
        }
        Graph g(n, std::move(edges));
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::vector<Vertex>> orbits_by_enumeration(const Graph& g) {
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::vector<int> perm = label;
    do {
        bool automorphism = true;
        for (const Edge& e : g.edges()) {
            if (!g.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                automorphism = false;
                break;
            }
        }
        if (!automorphism) continue;
        for (int v = 0; v < n; ++v) {
            const int a = label[static_cast<std::size_t>(v)];
            const int b = label[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            if (a == b) continue;
            const int keep = std::min(a, b);
            const int drop = std::max(a, b);
            for (auto& l : label) {
                if (l == drop) l = keep;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<Vertex>> cells;
    for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(v)] != v) continue;
        std::vector<Vertex> cell;
        for (int w = 0; w < n; ++w) {
            if (label[static_cast<std::size_t>(w)] == v) cell.push_back(w);
        }
        cells.push_back(std::move(cell));
    }
    return Partition(n, cells).canonical().cells();
}

}  // namespace selfsim::fixtures
