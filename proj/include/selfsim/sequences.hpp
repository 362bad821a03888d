#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfsim/aut.hpp"
#include "selfsim/constructions.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/orbital.hpp"
#include "selfsim/partition.hpp"

namespace selfsim {

/// Tolerance for every floating-point invariant compared across terms.
inline constexpr double kInvariantTol = 1e-9;

enum class SequenceFamily {
    Cycles,
    CompleteGraphs,  // not self-similar; kept as a negative control
    CircularLadders,
    MoebiusLadders,
    CrossedPrisms,
    Antiprisms,
    TorusFixed,
    TorusSchedule,
    LoadedMultiTorus,
    GeneralizedSun,
    CoronaFamily,
    IteratedPrism,
    Derived,
    Subsequence,
};

std::string_view family_tag(SequenceFamily family);
SequenceFamily parse_family_tag(std::string_view tag);

/// Declarative description of a graph family indexed by k = 1, 2, ...
///
/// Which fields matter depends on `family`:
///   - Cycles, CompleteGraphs, CircularLadders, MoebiusLadders, Antiprisms: `start`
///     (first n; default 3), term k has parameter start + k - 1.
///   - CrossedPrisms: `start` (even, default 4), step 2.
///   - TorusFixed: T(n, m) with n = start + k - 1 (default start 3).
///   - TorusSchedule: term k is T(schedule[k-1]); products must strictly increase.
///   - LoadedMultiTorus: T(s(k)) loaded with L_{q,m}; s(k) = schedule[k-1], or
///     (start + k - 1, 3, ..., 3) of length r when no schedule is given.
///   - GeneralizedSun: G_n(p, q) with n = start + k - 1.
///   - CoronaFamily: base term ⊙ (q K_p).
///   - IteratedPrism: r-th prism of each base term.
///   - Derived: `op` applied once to each base term.
///   - Subsequence: base terms at the 1-based, strictly increasing `indices`.
struct SequenceSpec {
    SequenceFamily family = SequenceFamily::Cycles;
    int start = 0;
    int m = 0;
    int p = 0;
    int q = 0;
    int r = 0;
    std::vector<std::vector<int>> schedule;
    UnaryOp op = UnaryOp::Prism;
    std::vector<int> indices;
    std::shared_ptr<const SequenceSpec> base;

    /// Upper bound on the number of terms, if the family is finite (schedules, index lists).
    std::optional<int> max_terms() const;
};

/// Throws InvalidArgument on bad parameters, including non-increasing schedule products.
void validate(const SequenceSpec& spec);

/// First `count` (>= 2) terms; orders strictly increase.
std::vector<Graph> generate(const SequenceSpec& spec, int count);

/// Per-graph quantities shared by sequence reports and single-graph analysis.
struct TermRecord {
    int order = 0;
    std::size_t size = 0;
    Partition orbits;
    BigInt group_order = 1;
    DivisorMatrix s;
    std::vector<Rational> omega;
    double entropy = 0.0;
    double rho_adjacency = 0.0;
    double rho_divisor = 0.0;
    int min_degree = 0;
    int max_degree = 0;
    Rational average_degree;
    Rational degree_variance;
    double gamma = 1.0;
    Rational edge_vertex_ratio;
    std::optional<Rational> density;
    std::int64_t cyclomatic = 0;
    /// largest in-orbit spread of the principal eigenvector
    double eigen_spread = 0.0;
    /// ||S alpha - rho alpha||_inf
    double eigen_residual = 0.0;
};

/// Full analysis of one connected graph.
TermRecord analyze_term(const Graph& g);

enum class SeedCheck { NotRequested, Verified, Failed, AssumedByConstruction };
std::string_view to_string(SeedCheck check);

/// Terms are 1-based in reports.
struct PairFailure {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string reason;
};

struct Verdict {
    bool self_similar = false;
    bool growth_ok = false;
    bool similarity_ok = false;
    SeedCheck seed = SeedCheck::NotRequested;
    std::optional<PairFailure> failure;
    /// witnesses[k][c]: cell of term 1 matched with cell c of term k+1 (identity for k = 0)
    std::vector<std::vector<int>> witnesses;
};

struct InvariantCheck {
    std::string name;
    bool passed = true;
    /// first offending term (1-based)
    std::optional<std::size_t> term;
    std::string detail;
};

struct SequenceReport {
    std::vector<TermRecord> terms;
    Verdict verdict;
    std::vector<InvariantCheck> preservation;

    bool passed() const;
    /// first failed preservation check, if any
    const InvariantCheck* first_failed_check() const;
};

struct VerifyOptions {
    /// worker threads for per-term analysis
    int jobs = 1;
    /// compare every pair directly instead of term 1 plus witness composition
    bool exhaustive_pairs = false;
};

/// Brute-force isomorphism test for graphs with at most 10 vertices.
bool isomorphic_small(const Graph& a, const Graph& b);

std::vector<TermRecord> analyze_terms(std::span<const Graph> graphs, int jobs);

Verdict verify_self_similar(std::span<const Graph> graphs, const Graph* seed = nullptr, const VerifyOptions& options = {});
Verdict verify_self_similar(std::span<const TermRecord> terms, std::span<const Graph> graphs, const Graph* seed,
                            const VerifyOptions& options);

/// Analysis, verdict, and every preservation check over the terms.
SequenceReport preservation_report(std::span<const Graph> graphs, const Graph* seed = nullptr, const VerifyOptions& options = {});

/// Replaces graphs[k] (0-based) with an orbitally similar graph of the same order and
/// re-verifies the sequence. Throws InvalidArgument on order mismatch and
/// VerificationError when `h` is not similar or the new sequence fails verification.
std::vector<Graph> swap_isomorphic_members(std::span<const Graph> graphs, std::size_t k, const Graph& h);

}  // namespace selfsim
