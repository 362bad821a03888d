// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "selfsim/aut.hpp"
#include "selfsim/constructions.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/orbital.hpp"
#include "selfsim/report.hpp"
#include "selfsim/sequences.hpp"
#include "selfsim/spectral.hpp"
#include "test_support.hpp"

using namespace selfsim;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && elapsed >= limit_seconds) {
        out.fail("took " + format_fixed(elapsed, 2) + " s, limit " + format_fixed(limit_seconds, 0) + " s");
    }
    if (!out.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, elapsed,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

Graph example_g() { return Graph(5, {{0, 4}, {0, 1}, {1, 4}, {1, 2}, {1, 3}}); }

// Starlike-load matrix on a d-regular vertex-transitive support: support cell, then path positions 1..m.
IntMatrix sloaded(std::int64_t d, std::int64_t q, int m) {
    const auto l = static_cast<std::size_t>(m + 1);
    IntMatrix s(l, std::vector<std::int64_t>(l, 0));
    s[0][0] = d;
    s[0][1] = q;
    for (std::size_t j = 1; j < l; ++j) {
        s[j][j - 1] = 1;
        if (j + 1 < l) s[j][j + 1] = 1;
    }
    return s;
}

SequenceSpec spec_of(SequenceFamily f) {
    SequenceSpec s;
    s.family = f;
    return s;
}

std::vector<std::pair<std::string, SequenceSpec>> criterion5_specs() {
    std::vector<std::pair<std::string, SequenceSpec>> out;
    for (auto f : {SequenceFamily::Cycles, SequenceFamily::CircularLadders, SequenceFamily::MoebiusLadders,
                   SequenceFamily::CrossedPrisms, SequenceFamily::Antiprisms, SequenceFamily::TorusFixed}) {
        out.emplace_back(std::string(family_tag(f)), spec_of(f));
    }
    SequenceSpec schedule = spec_of(SequenceFamily::TorusSchedule);
    schedule.schedule = {{3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 5}};
    out.emplace_back("torus-schedule", schedule);
    for (auto [q, m, r] : {std::tuple{1, 1, 1}, std::tuple{2, 2, 2}, std::tuple{3, 2, 1}}) {
        SequenceSpec s = spec_of(SequenceFamily::LoadedMultiTorus);
        s.q = q;
        s.m = m;
        s.r = r;
        out.emplace_back("loaded-multi-torus " + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(r), s);
    }
    for (auto [p, q] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
        SequenceSpec s = spec_of(SequenceFamily::GeneralizedSun);
        s.p = p;
        s.q = q;
        out.emplace_back("generalized-sun " + std::to_string(p) + "," + std::to_string(q), s);
    }
    SequenceSpec corona = spec_of(SequenceFamily::CoronaFamily);
    corona.base = std::make_shared<const SequenceSpec>(spec_of(SequenceFamily::Cycles));
    corona.p = 2;
    corona.q = 2;
    out.emplace_back("corona over cycles", corona);
    for (auto op : {UnaryOp::Prism, UnaryOp::StrongPrism, UnaryOp::MinimalCorona}) {
        SequenceSpec d = spec_of(SequenceFamily::Derived);
        d.base = corona.base;
        d.op = op;
        out.emplace_back("derived " + std::string(op_tag(op)), d);
    }
    return out;
}

struct Sequence {
    std::string name;
    std::vector<Graph> graphs;
};

const std::vector<Sequence>& criterion5_sequences() {
    static const std::vector<Sequence> seqs = [] {
        std::vector<Sequence> out;
        for (const auto& [name, spec] : criterion5_specs()) out.push_back({name, generate(spec, 5)});
        return out;
    }();
    return seqs;
}

bool rho_paths_agree(const Graph& g, Outcome& out, const std::string& label) {
    const double a = spectral_radius_adjacency(g).rho;
    const double d = spectral_radius_divisor(orbit_divisor_matrix(g));
    if (std::fabs(a - d) < kInvariantTol) return true;
    out.fail(label + ": adjacency " + std::to_string(a) + " vs divisor " + std::to_string(d));
    return false;
}

std::vector<Graph> criterion2_graphs;
std::vector<Graph> criterion3_graphs;

}  // namespace

int main() {
    run(1, "entropy reference table", 1.0, [] {
        Outcome out;
        for (const auto& row : entropy_reference_table()) {
            const double h = entropy_of(row.omega);
            if (!(std::fabs(h - row.printed) < 5e-5)) out.fail(row.label + " gives " + format_fixed(h, 6));
        }
        return out;
    });

    run(2, "divisor matrices of the worked examples and families", 10.0, [] {
        Outcome out;
        const auto expect = [&](const std::string& label, const Graph& g, const IntMatrix& s) {
            criterion2_graphs.push_back(g);
            const IntMatrix got = orbit_divisor_matrix(g).s;
            if (!fixtures::equal_up_to_permutation(got, s)) out.fail(label + " gives " + format_matrix(got));
        };
        expect("P5", path_graph(5), {{0, 1, 0}, {1, 0, 1}, {0, 2, 0}});
        expect("example graph", example_g(), {{1, 0, 1}, {0, 0, 1}, {2, 2, 0}});
        for (int n : {3, 5, 8}) {
            for (int p : {2, 3}) {
                for (int q : {1, 3}) {
                    expect("G_" + std::to_string(n) + "(" + std::to_string(p) + "," + std::to_string(q) + ")",
                           generalized_sun(n, p, q), {{p - 2, 1}, {static_cast<std::int64_t>(q) * (p - 1), 2}});
                }
            }
        }
        for (int n : {4, 6}) {
            for (auto [q, m] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{1, 3}}) {
                expect("C_" + std::to_string(n) + " loaded", vertex_load(cycle_graph(n), starlike_load(q, m)),
                       sloaded(2, q, m));
            }
        }
        expect("T(3,3) loaded", vertex_load(torus({3, 3}), starlike_load(2, 2)), sloaded(4, 2, 2));
        for (int n : {4, 6}) {
            for (std::int64_t q : {1, 2}) {
                const int iq = static_cast<int>(q);
                const std::string label = "C_" + std::to_string(n) + " book q=" + std::to_string(q) + " m=";
                const Graph c = cycle_graph(n);
                expect(label + "3", edge_load(c, book_load(iq, 3)), {{0, 2}, {2 * q, 2}});
                expect(label + "4", edge_load(c, book_load(iq, 4)), {{1, 1}, {2 * q, 2}});
                expect(label + "5", edge_load(c, book_load(iq, 5)), {{0, 2, 0}, {1, 0, 1}, {0, 2 * q, 2}});
                expect(label + "6", edge_load(c, book_load(iq, 6)), {{1, 1, 0}, {1, 0, 1}, {0, 2 * q, 2}});
            }
        }
        return out;
    });

    run(3, "orbit partition against brute force", 120.0, [] {
        Outcome out;
        for (int n = 1; n <= 6; ++n) {
            for (Graph& g : fixtures::all_connected_graphs(n)) criterion3_graphs.push_back(std::move(g));
        }
        std::mt19937 rng(20240607);
        for (int i = 0; i < 200; ++i) criterion3_graphs.push_back(fixtures::random_connected_graph(7, 0.35, rng));
        for (const Graph& g : criterion3_graphs) {
            if (!(orbit_partition(g) == brute_force_orbits(g))) {
                out.fail("mismatch on " + to_graph6(g));
                break;
            }
        }
        out.detail = out.ok ? std::to_string(criterion3_graphs.size()) + " graphs" : out.detail;
        return out;
    });

    run(4, "adjacency and divisor spectral radii agree", 60.0, [] {
        Outcome out;
        for (const Graph& g : criterion2_graphs) rho_paths_agree(g, out, to_graph6(g));
        for (const Graph& g : criterion3_graphs) {
            if (g.order() > 1) rho_paths_agree(g, out, to_graph6(g));
        }
        std::size_t family_terms = 0;
        for (const auto& seq : criterion5_sequences()) {
            for (const Graph& g : seq.graphs) {
                if (g.order() > 200) continue;
                rho_paths_agree(g, out, seq.name);
                ++family_terms;
            }
        }
        if (out.ok) out.detail = std::to_string(family_terms) + " family terms";
        return out;
    });

    run(5, "built-in sequences preserve the orbit invariants", 120.0, [] {
        Outcome out;
        for (const auto& seq : criterion5_sequences()) {
            const SequenceReport r = preservation_report(seq.graphs);
            if (!r.verdict.self_similar) {
                out.fail(seq.name + " is not verified self-similar");
                continue;
            }
            const TermRecord& a = r.terms.front();
            for (std::size_t k = 1; k < r.terms.size(); ++k) {
                const TermRecord& b = r.terms[k];
                const bool floats = std::fabs(a.entropy - b.entropy) < kInvariantTol &&
                                    std::fabs(a.rho_adjacency - b.rho_adjacency) < kInvariantTol &&
                                    std::fabs(a.gamma - b.gamma) < kInvariantTol;
                const bool exact = a.min_degree == b.min_degree && a.max_degree == b.max_degree &&
                                   a.average_degree == b.average_degree && a.degree_variance == b.degree_variance &&
                                   a.edge_vertex_ratio == b.edge_vertex_ratio;
                if (!floats || !exact) out.fail(seq.name + " term " + std::to_string(k + 1));
            }
        }
        return out;
    });

    run(6, "principal eigenvector is constant on orbits", 120.0, [] {
        Outcome out;
        for (const auto& seq : criterion5_sequences()) {
            for (std::size_t k = 0; k < seq.graphs.size(); ++k) {
                const Graph& g = seq.graphs[k];
                const OrbitConstancyReport r = check_orbit_constancy(g, orbit_partition(g), kInvariantTol);
                if (!r.ok()) out.fail(seq.name + " term " + std::to_string(k + 1) + ": " + r.violations.front());
            }
        }
        return out;
    });

    run(7, "density and cyclomatic number along the sequences", 120.0, [] {
        Outcome out;
        for (const auto& seq : criterion5_sequences()) {
            const auto& g = seq.graphs;
            const std::int64_t c1 = cyclomatic_number(g[0]);
            const std::int64_t n1 = g[0].order();
            for (std::size_t k = 0; k < g.size(); ++k) {
                const std::int64_t ck = cyclomatic_number(g[k]);
                const std::string at = seq.name + " term " + std::to_string(k + 1);
                if (ck == 0) out.fail(at + " is a tree");
                if (k == 0) continue;
                if (!(density(g[k]) < density(g[k - 1]))) out.fail(at + ": density does not decrease");
                if (c1 == 1 && ck != 1) out.fail(at + ": unicyclic family gains cycles");
                if (c1 >= 2) {
                    if (ck <= cyclomatic_number(g[k - 1])) out.fail(at + ": cyclomatic number does not increase");
                    if ((ck - 1) * n1 != (c1 - 1) * g[k].order()) out.fail(at + ": c_k - 1 not proportional to order");
                }
            }
        }
        return out;
    });

    run(8, "negative controls", 5.0, [] {
        Outcome out;
        const std::vector<Graph> complete{complete_graph(3), complete_graph(4), complete_graph(5)};
        const Verdict v = verify_self_similar(complete);
        if (v.similarity_ok || v.self_similar) out.fail("K3, K4, K5 verified as similar");
        if (orbitally_similar(path_graph(5), example_g()).similar) out.fail("P5 and the example graph reported similar");
        if (!orbitally_homothetic(path_graph(5), example_g())) out.fail("P5 and the example graph not homothetic");
        const Graph a = edge_load(circular_ladder(3), book_load(1, 3));
        const Graph b = edge_load(circular_ladder(4), book_load(1, 3));
        if (orbitally_similar(a, b).similar) out.fail("book-loaded ladders reported similar");
        const std::size_t la = orbit_partition(a).cell_count();
        const std::size_t lb = orbit_partition(b).cell_count();
        if (la != 3 || lb != 2) out.fail("orbit counts " + std::to_string(la) + " vs " + std::to_string(lb));
        return out;
    });

    run(9, "edge and vertex transitivity checks", 60.0, [] {
        Outcome out;
        if (!is_edge_transitive(circular_ladder(4))) out.fail("CL4 not edge-transitive");
        if (is_edge_transitive(circular_ladder(3))) out.fail("CL3 edge-transitive");
        for (int n = 3; n <= 12; ++n) {
            const std::string s = std::to_string(n);
            if (!is_vertex_transitive(circular_ladder(n))) out.fail("CL" + s);
            if (!is_vertex_transitive(moebius_ladder(n))) out.fail("ML" + s);
            if (!is_vertex_transitive(antiprism(n))) out.fail("AP" + s);
            if (n >= 4 && n % 2 == 0 && !is_vertex_transitive(crossed_prism(n))) out.fail("CP" + s);
        }
        return out;
    });

    return failures == 0 ? 0 : 1;
}
