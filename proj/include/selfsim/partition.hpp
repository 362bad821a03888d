#pragma once

#include <span>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

/// Ordered list of disjoint, non-empty, ascending vertex cells covering 0..n-1.
class Partition {
public:
    Partition() = default;
    /// Validates the cells against 0..n-1 and sorts each cell; cell order is preserved.
    Partition(int n, std::vector<std::vector<Vertex>> cells);

    static Partition trivial(int n);
    static Partition discrete(int n);
    /// Cells are the classes of `color` (any integer labels), ordered by label.
    static Partition from_coloring(std::span<const int> color);

    int vertex_count() const noexcept { return n_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
    const std::vector<Vertex>& cell(std::size_t i) const { return cells_[i]; }

    /// cell index of every vertex
    std::vector<int> cell_index() const;

    /// Cells sorted by (size descending, smallest vertex ascending).
    Partition canonical() const;

    /// Every cell of *this lies inside one cell of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> cells_;
};

/// Bijection on 0..n-1 given by its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> image);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& image() const noexcept { return image_; }

    Permutation inverse() const;
    /// (a * b)(v) = a(b(v))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

    bool is_automorphism_of(const Graph& g) const;

private:
    std::vector<Vertex> image_;
};

}  // namespace selfsim
