#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "selfsim/graph.hpp"
#include "selfsim/partition.hpp"
#include "selfsim/rational.hpp"

namespace selfsim {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Quotient matrix of an equitable partition: s[i][j] is the number of neighbours in
/// cell j of any vertex of cell i. `sizes[i]` is |cell i|.
struct DivisorMatrix {
    IntMatrix s;
    std::vector<std::int64_t> sizes;

    std::size_t ell() const noexcept { return s.size(); }
    std::int64_t row_sum(std::size_t i) const;
    std::int64_t vertex_count() const;

    /// Cells relabeled by `pi`: entry (i, j) of the result is s[pi[i]][pi[j]], i.e. P^T S P.
    DivisorMatrix permuted(std::span<const int> pi) const;

    friend bool operator==(const DivisorMatrix&, const DivisorMatrix&) = default;
};

struct OrbitProfile {
    /// relative orbit sizes, nonincreasing, summing to exactly 1
    std::vector<Rational> omega;
    double entropy = 0.0;
};

struct SimilarityVerdict {
    bool similar = false;
    /// witness[i] = cell of G matched with cell i of H (present iff similar)
    std::optional<std::vector<int>> witness;
    /// divisor matrix of H in its canonical orbit order, equal to P^T S_G P (present iff similar)
    std::optional<DivisorMatrix> common_s;
};

/// Maximum number of cells accepted by the cell-permutation search.
inline constexpr std::size_t kMaxSimilarityCells = 12;

/// Throws DisconnectedError for disconnected graphs and NotEquitableError when `cells` is
/// not equitable.
DivisorMatrix divisor_matrix(const Graph& g, const Partition& cells);

/// Divisor matrix of the orbit partition in canonical orbit order.
DivisorMatrix orbit_divisor_matrix(const Graph& g);

OrbitProfile orbit_profile(const Graph& g);

/// Base-2 Shannon entropy of a probability vector with positive rational entries.
double entropy_of(std::span<const Rational> omega);

/// Searches a cell bijection pi with a.s[pi[i]][pi[j]] == b.s[i][j] for all i, j.
/// When both matrices carry sizes, matched cells must also have equal relative size.
std::optional<std::vector<int>> match_divisor_matrices(const DivisorMatrix& a, const DivisorMatrix& b);

SimilarityVerdict orbitally_similar(const Graph& g, const Graph& h);
bool orbitally_homothetic(const Graph& g, const Graph& h);

/// Relative cell sizes recovered from the entries of a divisor matrix alone, in the
/// matrix's own cell order. Throws InvalidDivisorMatrix when the cell digraph is not
/// strongly connected or size ratios disagree along different cell paths.
std::vector<Rational> omega_from_divisor(const IntMatrix& s);

}  // namespace selfsim
