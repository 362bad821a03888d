#include "selfsim/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "selfsim/aut.hpp"
#include "selfsim/errors.hpp"

namespace selfsim {

std::int64_t DivisorMatrix::row_sum(std::size_t i) const {
    return std::accumulate(s[i].begin(), s[i].end(), std::int64_t{0});
}

std::int64_t DivisorMatrix::vertex_count() const {
    return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
}

DivisorMatrix DivisorMatrix::permuted(std::span<const int> pi) const {
    const std::size_t l = ell();
    if (pi.size() != l) throw InvalidArgument("cell permutation has wrong length");
    DivisorMatrix out;
    out.s.assign(l, std::vector<std::int64_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) out.s[i][j] = s[static_cast<std::size_t>(pi[i])][static_cast<std::size_t>(pi[j])];
    }
    if (!sizes.empty()) {
        for (std::size_t i = 0; i < l; ++i) out.sizes.push_back(sizes[static_cast<std::size_t>(pi[i])]);
    }
    return out;
}

DivisorMatrix divisor_matrix(const Graph& g, const Partition& cells) {
    if (cells.vertex_count() != g.order()) throw InvalidArgument("partition does not match the graph order");
    if (!is_connected(g)) throw DisconnectedError("divisor matrix requires a connected graph");

    const std::size_t l = cells.cell_count();
    const auto index = cells.cell_index();
    DivisorMatrix out;
    out.s.assign(l, std::vector<std::int64_t>(l, 0));
    std::vector<std::int64_t> row(l);
    for (std::size_t i = 0; i < l; ++i) {
        const auto& cell = cells.cell(i);
        out.sizes.push_back(static_cast<std::int64_t>(cell.size()));
        for (std::size_t k = 0; k < cell.size(); ++k) {
            std::fill(row.begin(), row.end(), 0);
            for (Vertex w : g.neighbors(cell[k])) ++row[static_cast<std::size_t>(index[static_cast<std::size_t>(w)])];
            if (k == 0) {
                out.s[i] = row;
                continue;
            }
            for (std::size_t j = 0; j < l; ++j) {
                if (row[j] != out.s[i][j]) throw NotEquitableError(cell.front(), cell[k], static_cast<int>(j));
            }
        }
    }
    return out;
}

DivisorMatrix orbit_divisor_matrix(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("divisor matrix requires a connected graph");
    return divisor_matrix(g, orbit_partition(g));
}

OrbitProfile orbit_profile(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("orbit profile of the empty graph is undefined");
    if (!is_connected(g)) throw DisconnectedError("orbit profile requires a connected graph");
    const Partition orbits = orbit_partition(g);
    OrbitProfile profile;
    for (const auto& cell : orbits.cells()) {
        profile.omega.emplace_back(static_cast<std::int64_t>(cell.size()), g.order());
    }
    std::sort(profile.omega.begin(), profile.omega.end(), [](const Rational& a, const Rational& b) { return a > b; });
    profile.entropy = entropy_of(profile.omega);
    return profile;
}

double entropy_of(std::span<const Rational> omega) {
    if (omega.empty()) throw InvalidArgument("entropy of an empty vector");
    Rational total = 0;
    for (const Rational& p : omega) {
        if (p <= Rational(0)) throw InvalidArgument("probability vector has a non-positive entry " + to_string(p));
        total += p;
    }
    if (total != Rational(1)) throw InvalidArgument("probability vector sums to " + to_string(total) + ", not 1");

    // Neumaier summation of -p log2 p.
    double sum = 0.0;
    double carry = 0.0;
    for (const Rational& p : omega) {
        const double x = to_double(p);
        const double term = x < 1.0 ? -x * std::log2(x) : 0.0;
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

namespace {

struct CellKey {
    std::int64_t diagonal = 0;
    std::int64_t degree = 0;
    std::vector<std::int64_t> row;
    std::vector<std::int64_t> column;

    friend bool operator==(const CellKey&, const CellKey&) = default;
};

std::vector<CellKey> cell_keys(const DivisorMatrix& m) {
    const std::size_t l = m.ell();
    std::vector<CellKey> keys(l);
    for (std::size_t i = 0; i < l; ++i) {
        keys[i].diagonal = m.s[i][i];
        keys[i].degree = m.row_sum(i);
        keys[i].row = m.s[i];
        for (std::size_t j = 0; j < l; ++j) keys[i].column.push_back(m.s[j][i]);
        std::sort(keys[i].row.begin(), keys[i].row.end());
        std::sort(keys[i].column.begin(), keys[i].column.end());
    }
    return keys;
}

class CellMatcher {
public:
    CellMatcher(const DivisorMatrix& a, const DivisorMatrix& b)
        : a_(a), b_(b), l_(a.ell()), used_(l_, 0), pi_(l_, -1) {
        const auto ka = cell_keys(a);
        const auto kb = cell_keys(b);
        const bool with_sizes = a.sizes.size() == l_ && b.sizes.size() == l_;
        const std::int64_t na = with_sizes ? a.vertex_count() : 0;
        const std::int64_t nb = with_sizes ? b.vertex_count() : 0;
        candidates_.resize(l_);
        for (std::size_t i = 0; i < l_; ++i) {
            for (std::size_t x = 0; x < l_; ++x) {
                if (!(ka[x] == kb[i])) continue;
                if (with_sizes && a.sizes[x] * nb != b.sizes[i] * na) continue;
                candidates_[i].push_back(static_cast<int>(x));
            }
        }
    }

    std::optional<std::vector<int>> run() {
        if (assign(0)) return pi_;
        return std::nullopt;
    }

private:
    bool assign(std::size_t i) {
        if (i == l_) return true;
        for (int x : candidates_[i]) {
            const auto ux = static_cast<std::size_t>(x);
            if (used_[ux]) continue;
            bool consistent = true;
            for (std::size_t j = 0; j < i && consistent; ++j) {
                const auto pj = static_cast<std::size_t>(pi_[j]);
                consistent = a_.s[ux][pj] == b_.s[i][j] && a_.s[pj][ux] == b_.s[j][i];
            }
            if (!consistent) continue;
            used_[ux] = 1;
            pi_[i] = x;
            if (assign(i + 1)) return true;
            used_[ux] = 0;
        }
        pi_[i] = -1;
        return false;
    }

    const DivisorMatrix& a_;
    const DivisorMatrix& b_;
    std::size_t l_;
    std::vector<char> used_;
    std::vector<int> pi_;
    std::vector<std::vector<int>> candidates_;
};

}  // namespace

std::optional<std::vector<int>> match_divisor_matrices(const DivisorMatrix& a, const DivisorMatrix& b) {
    if (a.ell() != b.ell()) return std::nullopt;
    if (a.ell() > kMaxSimilarityCells) {
        throw ResourceError("cell-permutation search is capped at " + std::to_string(kMaxSimilarityCells) + " cells, got " +
                            std::to_string(a.ell()));
    }
    return CellMatcher(a, b).run();
}

SimilarityVerdict orbitally_similar(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h)) throw DisconnectedError("orbital similarity is defined for connected graphs");
    const DivisorMatrix sg = orbit_divisor_matrix(g);
    const DivisorMatrix sh = orbit_divisor_matrix(h);
    SimilarityVerdict verdict;
    if (auto pi = match_divisor_matrices(sg, sh)) {
        verdict.similar = true;
        verdict.witness = std::move(pi);
        verdict.common_s = sh;
    }
    return verdict;
}

bool orbitally_homothetic(const Graph& g, const Graph& h) {
    return orbit_profile(g).omega == orbit_profile(h).omega;
}

std::vector<Rational> omega_from_divisor(const IntMatrix& s) {
    const std::size_t l = s.size();
    if (l == 0) throw InvalidDivisorMatrix("empty divisor matrix");
    for (const auto& row : s) {
        if (row.size() != l) throw InvalidDivisorMatrix("divisor matrix is not square");
        for (auto x : row) {
            if (x < 0) throw InvalidDivisorMatrix("divisor matrix has a negative entry");
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            if (i != j && (s[i][j] > 0) != (s[j][i] > 0)) {
                throw InvalidDivisorMatrix("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") and its transpose must be both zero or both positive");
            }
        }
    }

    // ratio[j] = |cell j| / |cell 0|, spread along a BFS tree of the cell digraph.
    std::vector<std::optional<Rational>> ratio(l);
    ratio[0] = Rational(1);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < l; ++j) {
            if (j == i || s[i][j] == 0 || ratio[j]) continue;
            ratio[j] = *ratio[i] * Rational(s[i][j], s[j][i]);
            queue.push_back(j);
        }
    }
    for (std::size_t j = 0; j < l; ++j) {
        if (!ratio[j]) throw InvalidDivisorMatrix("cell digraph is not strongly connected (cell " + std::to_string(j) + " unreachable)");
    }
    // Path independence: every arc, tree or not, must satisfy |O_i| s_ij = |O_j| s_ji.
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            if (s[i][j] == 0) continue;
            if (*ratio[i] * s[i][j] != *ratio[j] * s[j][i]) {
                throw InvalidDivisorMatrix("size ratios disagree along the arc between cells " + std::to_string(i) + " and " +
                                           std::to_string(j));
            }
        }
    }
    Rational total = 0;
    for (const auto& r : ratio) total += *r;
    std::vector<Rational> omega;
    omega.reserve(l);
    for (const auto& r : ratio) omega.push_back(*r / total);
    return omega;
}

}  // namespace selfsim
