#include "selfsim/aut.hpp"

#include <algorithm>
#include <numeric>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

private:
    std::vector<std::size_t> parent_;
};

/// Relabels arbitrary colour values to dense ranks 0..k-1 preserving their order.
int densify(std::vector<int>& color) {
    std::vector<int> values = color;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : color) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
}

/// Colour refinement. The result depends only on the input colouring up to automorphism:
/// new colours are ranks of (old colour, sorted neighbour-colour multiset), so any
/// automorphism mapping the input colouring to itself also preserves the output.
class Refiner {
public:
    explicit Refiner(const Graph& g)
        : g_(g), signature_(static_cast<std::size_t>(g.order())), hash_(static_cast<std::size_t>(g.order())),
          order_(static_cast<std::size_t>(g.order())) {}

    /// Refines `color` in place to the stable colouring; returns the number of colours.
    int refine(std::vector<int>& color) {
        const std::size_t n = color.size();
        int k = densify(color);
        std::vector<int> next(n);
        while (true) {
            for (std::size_t v = 0; v < n; ++v) {
                auto& sig = signature_[v];
                sig.clear();
                for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) sig.push_back(color[static_cast<std::size_t>(w)]);
                std::sort(sig.begin(), sig.end());
                std::uint64_t h = 1469598103934665603ULL;
                for (int c : sig) h = (h ^ static_cast<std::uint64_t>(c)) * 1099511628211ULL;
                hash_[v] = h;
            }
            std::iota(order_.begin(), order_.end(), 0);
            // Hash first, full multiset comparison only on equal hashes, so the ordering stays exact.
            auto less = [&](std::size_t a, std::size_t b) {
                if (color[a] != color[b]) return color[a] < color[b];
                if (hash_[a] != hash_[b]) return hash_[a] < hash_[b];
                return signature_[a] < signature_[b];
            };
            auto same = [&](std::size_t a, std::size_t b) {
                return color[a] == color[b] && hash_[a] == hash_[b] && signature_[a] == signature_[b];
            };
            std::sort(order_.begin(), order_.end(), less);
            int rank = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i > 0 && !same(order_[i - 1], order_[i])) ++rank;
                next[order_[i]] = rank;
            }
            const int new_k = n == 0 ? 0 : rank + 1;
            if (new_k == k) return k;
            color.swap(next);
            k = new_k;
        }
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> signature_;
    std::vector<std::uint64_t> hash_;
    std::vector<std::size_t> order_;
};

std::vector<int> cell_sizes(const std::vector<int>& color) {
    int k = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int c : color) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

/// First non-singleton cell of minimum size, or -1 when the colouring is discrete.
int target_cell(const std::vector<int>& sizes) {
    int best = -1;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c] > 1 && (best < 0 || sizes[c] < sizes[static_cast<std::size_t>(best)])) best = static_cast<int>(c);
    }
    return best;
}

std::vector<Vertex> members(const std::vector<int>& color, int c) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < color.size(); ++v) {
        if (color[v] == c) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

class AutSearch {
public:
    AutSearch(const Graph& g, const SearchLimits& limits) : g_(g), refiner_(g), limits_(limits) {}

    AutGroup run() {
        const int n = g_.order();
        AutGroup group;
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        refiner_.refine(color);

        // First path: always individualize the smallest vertex of the target cell.
        while (true) {
            auto sizes = cell_sizes(color);
            path_colors_.push_back(color);
            path_shapes_.push_back(sizes);
            int t = target_cell(sizes);
            if (t < 0) break;
            Vertex v = members(color, t).front();
            path_targets_.push_back(t);
            path_choice_.push_back(v);
            color = individualize(color, v);
        }
        first_leaf_.assign(static_cast<std::size_t>(n), 0);
        for (std::size_t v = 0; v < color.size(); ++v) first_leaf_[static_cast<std::size_t>(color[v])] = static_cast<Vertex>(v);

        // Bottom-up over the first path. Every generator found so far fixes the path
        // prefix v_1..v_k, so a single union-find tracks the stabiliser orbits.
        UnionFind uf(static_cast<std::size_t>(n));
        for (std::size_t k = path_choice_.size(); k-- > 0;) {
            const Vertex base = path_choice_[k];
            const auto cell = members(path_colors_[k], path_targets_[k]);
            std::vector<Vertex> failed;
            for (Vertex w : cell) {
                if (w == base || uf.same(static_cast<std::size_t>(w), static_cast<std::size_t>(base))) continue;
                bool known_bad = std::any_of(failed.begin(), failed.end(), [&](Vertex f) {
                    return uf.same(static_cast<std::size_t>(f), static_cast<std::size_t>(w));
                });
                if (known_bad) continue;
                std::optional<Permutation> found = search(individualize(path_colors_[k], w), k + 1);
                if (found) {
                    for (Vertex v = 0; v < n; ++v) uf.unite(static_cast<std::size_t>(v), static_cast<std::size_t>((*found)(v)));
                    group.generators.push_back(std::move(*found));
                } else {
                    failed.push_back(w);
                }
            }
            auto orbit = std::count_if(cell.begin(), cell.end(), [&](Vertex w) {
                return uf.same(static_cast<std::size_t>(w), static_cast<std::size_t>(base));
            });
            group.order *= static_cast<long>(orbit);
        }

        std::vector<int> root(static_cast<std::size_t>(n));
        for (std::size_t v = 0; v < root.size(); ++v) root[v] = static_cast<int>(uf.find(v));
        group.orbits = Partition::from_coloring(root).canonical();
        return group;
    }

private:
    std::vector<int> individualize(const std::vector<int>& color, Vertex v) {
        std::vector<int> out(color.size());
        for (std::size_t u = 0; u < color.size(); ++u) out[u] = 2 * color[u] + 1;
        out[static_cast<std::size_t>(v)] = 2 * color[static_cast<std::size_t>(v)];
        refiner_.refine(out);
        return out;
    }

    /// Looks for a leaf below `color` whose labeling against the first leaf is an automorphism.
    std::optional<Permutation> search(const std::vector<int>& color, std::size_t depth) {
        if (++nodes_ > limits_.max_nodes) throw ResourceError("automorphism search exceeded its node budget");
        auto sizes = cell_sizes(color);
        if (sizes != path_shapes_[depth]) return std::nullopt;
        if (depth == path_choice_.size()) {
            std::vector<Vertex> image(color.size());
            for (std::size_t v = 0; v < color.size(); ++v) image[static_cast<std::size_t>(first_leaf_[static_cast<std::size_t>(color[v])])] = static_cast<Vertex>(v);
            Permutation candidate(std::move(image));
            if (candidate.is_automorphism_of(g_)) return candidate;
            return std::nullopt;
        }
        for (Vertex w : members(color, path_targets_[depth])) {
            if (auto found = search(individualize(color, w), depth + 1)) return found;
        }
        return std::nullopt;
    }

    const Graph& g_;
    Refiner refiner_;
    SearchLimits limits_;
    std::int64_t nodes_ = 0;
    std::vector<std::vector<int>> path_colors_;
    std::vector<std::vector<int>> path_shapes_;
    std::vector<int> path_targets_;
    std::vector<Vertex> path_choice_;
    std::vector<Vertex> first_leaf_;
};

}  // namespace

Partition equitable_refinement(const Graph& g, const Partition& seed) {
    if (seed.vertex_count() != g.order()) throw InvalidArgument("seed partition does not match the graph order");
    std::vector<int> color = seed.cell_index();
    Refiner(g).refine(color);
    return Partition::from_coloring(color).canonical();
}

AutGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
    if (g.order() > limits.max_vertices) {
        throw ResourceError("graph has " + std::to_string(g.order()) + " vertices; automorphism search is capped at " +
                            std::to_string(limits.max_vertices));
    }
    if (g.order() == 0) return AutGroup{{}, 1, Partition::trivial(0)};
    return AutSearch(g, limits).run();
}

Partition orbit_partition(const Graph& g, const SearchLimits& limits) {
    return automorphism_group(g, limits).orbits;
}

Partition brute_force_orbits(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw ResourceError("brute-force orbit enumeration is limited to n <= 8");
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    UnionFind uf(static_cast<std::size_t>(n));
    do {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (!g.adjacent(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (std::size_t v = 0; v < image.size(); ++v) uf.unite(v, static_cast<std::size_t>(image[v]));
        }
    } while (std::next_permutation(image.begin(), image.end()));
    std::vector<int> root(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < root.size(); ++v) root[v] = static_cast<int>(uf.find(v));
    return Partition::from_coloring(root).canonical();
}

bool is_vertex_transitive(const Graph& g) {
    return orbit_partition(g).cell_count() <= 1;
}

bool is_edge_transitive(const Graph& g) {
    if (g.size() == 0) throw InvalidArgument("edge transitivity is undefined for an edgeless graph");
    const auto edges = g.edges();
    auto index_of = [&](Vertex a, Vertex b) {
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge(a, b));
        return static_cast<std::size_t>(it - edges.begin());
    };
    UnionFind uf(edges.size());
    for (const Permutation& gen : automorphism_group(g).generators) {
        for (std::size_t i = 0; i < edges.size(); ++i) uf.unite(i, index_of(gen(edges[i].u), gen(edges[i].v)));
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!uf.same(0, i)) return false;
    }
    return true;
}

}  // namespace selfsim
