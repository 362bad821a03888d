#include "selfsim/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "selfsim/errors.hpp"

namespace selfsim {

Partition::Partition(int n, std::vector<std::vector<Vertex>> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t covered = 0;
    for (auto& cell : cells_) {
        if (cell.empty()) throw InvalidArgument("partition has an empty cell");
        std::sort(cell.begin(), cell.end());
        for (Vertex v : cell) {
            if (v < 0 || v >= n) throw InvalidArgument("partition mentions vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            if (seen[static_cast<std::size_t>(v)]) throw InvalidArgument("vertex " + std::to_string(v) + " appears in two cells");
            seen[static_cast<std::size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n)) throw InvalidArgument("partition does not cover every vertex");
}

Partition Partition::trivial(int n) {
    if (n == 0) return Partition(0, {});
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return Partition(n, {std::move(all)});
}

Partition Partition::discrete(int n) {
    std::vector<std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n; ++v) cells.push_back({v});
    return Partition(n, std::move(cells));
}

Partition Partition::from_coloring(std::span<const int> color) {
    std::map<int, std::vector<Vertex>> classes;
    for (std::size_t v = 0; v < color.size(); ++v) classes[color[v]].push_back(static_cast<Vertex>(v));
    std::vector<std::vector<Vertex>> cells;
    cells.reserve(classes.size());
    for (auto& [label, cell] : classes) cells.push_back(std::move(cell));
    return Partition(static_cast<int>(color.size()), std::move(cells));
}

std::vector<int> Partition::cell_index() const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (Vertex v : cells_[i]) index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return index;
}

Partition Partition::canonical() const {
    Partition out = *this;
    std::sort(out.cells_.begin(), out.cells_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.n_ != n_) return false;
    auto outer = coarser.cell_index();
    for (const auto& cell : cells_) {
        for (Vertex v : cell) {
            if (outer[static_cast<std::size_t>(v)] != outer[static_cast<std::size_t>(cell.front())]) return false;
        }
    }
    return true;
}

// -- Permutation -----------------------------------------------------------------------

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (Vertex v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[static_cast<std::size_t>(v)]) {
            throw InvalidArgument("permutation image is not a bijection");
        }
        hit[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) inv[static_cast<std::size_t>(image_[v])] = static_cast<Vertex>(v);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidArgument("composing permutations of different degree");
    std::vector<Vertex> image(b.image_.size());
    for (std::size_t v = 0; v < image.size(); ++v) image[v] = a(b(static_cast<Vertex>(v)));
    return Permutation(std::move(image));
}

bool Permutation::is_automorphism_of(const Graph& g) const {
    if (size() != g.order()) return false;
    for (const Edge& e : g.edges()) {
        if (!g.adjacent((*this)(e.u), (*this)(e.v))) return false;
    }
    return true;
}

}  // namespace selfsim
