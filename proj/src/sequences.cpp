#include "selfsim/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "selfsim/errors.hpp"
#include "selfsim/spectral.hpp"

namespace selfsim {

namespace {

struct TagEntry {
    SequenceFamily family;
    std::string_view tag;
};

constexpr TagEntry kTags[] = {
    {SequenceFamily::Cycles, "cycles"},
    {SequenceFamily::CompleteGraphs, "complete-graphs"},
    {SequenceFamily::CircularLadders, "circular-ladders"},
    {SequenceFamily::MoebiusLadders, "moebius-ladders"},
    {SequenceFamily::CrossedPrisms, "crossed-prisms"},
    {SequenceFamily::Antiprisms, "antiprisms"},
    {SequenceFamily::TorusFixed, "torus-fixed"},
    {SequenceFamily::TorusSchedule, "torus-schedule"},
    {SequenceFamily::LoadedMultiTorus, "loaded-multi-torus"},
    {SequenceFamily::GeneralizedSun, "generalized-sun"},
    {SequenceFamily::CoronaFamily, "corona"},
    {SequenceFamily::IteratedPrism, "iterated-prism"},
    {SequenceFamily::Derived, "derived"},
    {SequenceFamily::Subsequence, "subsequence"},
};

bool has_base(SequenceFamily f) {
    return f == SequenceFamily::CoronaFamily || f == SequenceFamily::IteratedPrism || f == SequenceFamily::Derived ||
           f == SequenceFamily::Subsequence;
}

int start_or(const SequenceSpec& spec, int fallback) { return spec.start == 0 ? fallback : spec.start; }

std::int64_t product(const std::vector<int>& dims) {
    std::int64_t p = 1;
    for (int d : dims) p *= d;
    return p;
}

void check_schedule(const std::vector<std::vector<int>>& schedule, std::size_t arity) {
    if (schedule.empty()) throw InvalidArgument("schedule is empty");
    std::int64_t previous = 0;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const auto& dims = schedule[k];
        if (dims.empty()) throw InvalidArgument("schedule entry " + std::to_string(k + 1) + " is empty");
        if (arity != 0 && dims.size() != arity) {
            throw InvalidArgument("schedule entry " + std::to_string(k + 1) + " has " + std::to_string(dims.size()) +
                                  " factors, expected " + std::to_string(arity));
        }
        for (int d : dims) {
            if (d < 3) throw InvalidArgument("torus factors must be at least 3");
        }
        const std::int64_t p = product(dims);
        if (p <= previous) {
            throw InvalidArgument("schedule products must strictly increase (entry " + std::to_string(k + 1) + ")");
        }
        previous = p;
    }
}

// Default multi-index for the loaded torus: the first factor grows, the rest stay at 3.
std::vector<int> loaded_dims(const SequenceSpec& spec, int k) {
    if (!spec.schedule.empty()) return spec.schedule[static_cast<std::size_t>(k - 1)];
    std::vector<int> dims(static_cast<std::size_t>(spec.r), 3);
    dims[0] = start_or(spec, 3) + k - 1;
    return dims;
}

Graph term(const SequenceSpec& spec, int k, const std::vector<Graph>& base_terms) {
    const auto base = [&]() -> const Graph& { return base_terms[static_cast<std::size_t>(k - 1)]; };
    switch (spec.family) {
        case SequenceFamily::Cycles: return cycle_graph(start_or(spec, 3) + k - 1);
        case SequenceFamily::CompleteGraphs: return complete_graph(start_or(spec, 3) + k - 1);
        case SequenceFamily::CircularLadders: return circular_ladder(start_or(spec, 3) + k - 1);
        case SequenceFamily::MoebiusLadders: return moebius_ladder(start_or(spec, 3) + k - 1);
        case SequenceFamily::CrossedPrisms: return crossed_prism(start_or(spec, 4) + 2 * (k - 1));
        case SequenceFamily::Antiprisms: return antiprism(start_or(spec, 3) + k - 1);
        case SequenceFamily::TorusFixed: return torus({start_or(spec, 3) + k - 1, spec.m == 0 ? 3 : spec.m});
        case SequenceFamily::TorusSchedule: return torus(spec.schedule[static_cast<std::size_t>(k - 1)]);
        case SequenceFamily::LoadedMultiTorus:
            return vertex_load(torus(loaded_dims(spec, k)), starlike_load(spec.q, spec.m));
        case SequenceFamily::GeneralizedSun: return generalized_sun(start_or(spec, 3) + k - 1, spec.p, spec.q);
        case SequenceFamily::CoronaFamily: return corona_with_cliques(base(), spec.p, spec.q);
        case SequenceFamily::IteratedPrism: return iterate(UnaryOp::Prism, base(), spec.r);
        case SequenceFamily::Derived: return apply(spec.op, base());
        case SequenceFamily::Subsequence: return base_terms[static_cast<std::size_t>(spec.indices[k - 1] - 1)];
    }
    throw InvalidArgument("unknown sequence family");
}

// Relative cell sizes, which the verifier compares alongside the integer entries.
bool same_relative_size(const DivisorMatrix& a, std::size_t i, const DivisorMatrix& b, std::size_t j) {
    return a.sizes[i] * b.vertex_count() == b.sizes[j] * a.vertex_count();
}

std::string pair_reason(const DivisorMatrix& a, const DivisorMatrix& b) {
    if (a.ell() != b.ell()) {
        return "orbit counts differ (" + std::to_string(a.ell()) + " vs " + std::to_string(b.ell()) + ")";
    }
    return "no orbit relabeling makes the divisor matrices equal";
}

// Checks the pair (i, j) through the witnesses of both terms against term 1.
bool composed_pair_ok(const std::vector<TermRecord>& terms, const std::vector<std::vector<int>>& witnesses,
                      std::size_t i, std::size_t j) {
    const auto& wi = witnesses[i];
    const auto& wj = witnesses[j];
    std::vector<int> wi_inv(wi.size());
    for (std::size_t c = 0; c < wi.size(); ++c) wi_inv[static_cast<std::size_t>(wi[c])] = static_cast<int>(c);
    const std::size_t l = wj.size();
    std::vector<std::size_t> map(l);
    for (std::size_t c = 0; c < l; ++c) map[c] = static_cast<std::size_t>(wi_inv[static_cast<std::size_t>(wj[c])]);
    const DivisorMatrix& si = terms[i].s;
    const DivisorMatrix& sj = terms[j].s;
    for (std::size_t a = 0; a < l; ++a) {
        if (!same_relative_size(si, map[a], sj, a)) return false;
        for (std::size_t b = 0; b < l; ++b) {
            if (si.s[map[a]][map[b]] != sj.s[a][b]) return false;
        }
    }
    return true;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

SeedCheck check_seed(const Graph& first, const Graph& seed) {
    if (seed.order() != first.order() || seed.size() != first.size()) return SeedCheck::Failed;
    if (degree_sequence(seed) != degree_sequence(first)) return SeedCheck::Failed;
    if (first.order() <= 10) return isomorphic_small(first, seed) ? SeedCheck::Verified : SeedCheck::Failed;
    if (first == seed) return SeedCheck::Verified;
    return SeedCheck::AssumedByConstruction;
}

bool close(double a, double b) { return std::fabs(a - b) < kInvariantTol; }

InvariantCheck compare_all(const std::string& name, const std::vector<TermRecord>& terms,
                           const std::function<bool(const TermRecord&, const TermRecord&)>& equal,
                           const std::function<std::string(const TermRecord&)>& show) {
    InvariantCheck check{name, true, std::nullopt, ""};
    for (std::size_t k = 1; k < terms.size(); ++k) {
        if (!equal(terms[0], terms[k])) {
            check.passed = false;
            check.term = k + 1;
            check.detail = "term 1 has " + show(terms[0]) + ", term " + std::to_string(k + 1) + " has " + show(terms[k]);
            return check;
        }
    }
    check.detail = show(terms[0]);
    return check;
}

std::string show_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

InvariantCheck cyclomatic_check(const std::vector<TermRecord>& terms) {
    InvariantCheck check{"cyclomatic", true, std::nullopt, ""};
    const auto fail = [&](std::size_t k, std::string detail) {
        check.passed = false;
        check.term = k + 1;
        check.detail = std::move(detail);
        return check;
    };
    const std::int64_t c1 = terms[0].cyclomatic;
    const std::int64_t n1 = terms[0].order;
    if (c1 == 0) return fail(0, "first term is a tree; no self-similar sequence has a tree term");
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const std::int64_t ck = terms[k].cyclomatic;
        if (c1 == 1) {
            if (ck != 1) return fail(k, "unicyclic first term but c = " + std::to_string(ck));
            continue;
        }
        if (ck <= terms[k - 1].cyclomatic) return fail(k, "cyclomatic number does not strictly increase");
        if ((ck - 1) * n1 != (c1 - 1) * terms[k].order) {
            return fail(k, "c_k - 1 = " + std::to_string(ck - 1) + " is not (c_1 - 1) |G_k| / |G_1|");
        }
    }
    check.detail = c1 == 1 ? "all terms unicyclic" : "c_k - 1 proportional to |G_k|";
    return check;
}

InvariantCheck density_check(const std::vector<TermRecord>& terms) {
    InvariantCheck check{"density_decreasing", true, std::nullopt, ""};
    for (std::size_t k = 1; k < terms.size(); ++k) {
        if (!terms[k].density || !terms[k - 1].density || !(*terms[k].density < *terms[k - 1].density)) {
            check.passed = false;
            check.term = k + 1;
            check.detail = "density does not strictly decrease at term " + std::to_string(k + 1);
            return check;
        }
    }
    return check;
}

InvariantCheck vertex_transitivity_check(const std::vector<TermRecord>& terms) {
    InvariantCheck check{"vertex_transitivity", true, std::nullopt, ""};
    const auto vt = std::find_if(terms.begin(), terms.end(), [](const TermRecord& t) { return t.s.ell() == 1; });
    if (vt == terms.end()) {
        check.detail = "no vertex-transitive term";
        return check;
    }
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].s.ell() != 1 || terms[k].max_degree != vt->max_degree) {
            check.passed = false;
            check.term = k + 1;
            check.detail = "a vertex-transitive term exists but term " + std::to_string(k + 1) +
                           " is not vertex-transitive of degree " + std::to_string(vt->max_degree);
            return check;
        }
    }
    check.detail = "all terms vertex-transitive of degree " + std::to_string(vt->max_degree);
    return check;
}

InvariantCheck orbit_constancy_check(const std::vector<TermRecord>& terms) {
    InvariantCheck check{"orbit_constancy", true, std::nullopt, ""};
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!(terms[k].eigen_spread < kInvariantTol) || !(terms[k].eigen_residual < kInvariantTol)) {
            check.passed = false;
            check.term = k + 1;
            check.detail = "spread " + show_double(terms[k].eigen_spread) + ", residual " +
                           show_double(terms[k].eigen_residual);
            return check;
        }
    }
    return check;
}

InvariantCheck divisor_check(const std::vector<TermRecord>& terms, const Verdict& verdict) {
    InvariantCheck check{"divisor_matrix", true, std::nullopt, ""};
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const bool ok = k < verdict.witnesses.size() &&
                        terms[0].s.permuted(verdict.witnesses[k]).s == terms[k].s.s;
        if (!ok) {
            check.passed = false;
            check.term = k + 1;
            check.detail = k < verdict.witnesses.size() ? "witness does not map term 1 onto this term"
                                                        : "no similarity witness for this term";
            return check;
        }
    }
    check.detail = "all divisor matrices equal under the witnesses";
    return check;
}

}  // namespace

std::string_view family_tag(SequenceFamily family) {
    for (const auto& e : kTags) {
        if (e.family == family) return e.tag;
    }
    throw InvalidArgument("unknown sequence family");
}

SequenceFamily parse_family_tag(std::string_view tag) {
    for (const auto& e : kTags) {
        if (e.tag == tag) return e.family;
    }
    throw InvalidArgument("unknown sequence family '" + std::string(tag) + "'");
}

std::optional<int> SequenceSpec::max_terms() const {
    switch (family) {
        case SequenceFamily::TorusSchedule: return static_cast<int>(schedule.size());
        case SequenceFamily::LoadedMultiTorus:
            if (!schedule.empty()) return static_cast<int>(schedule.size());
            return std::nullopt;
        case SequenceFamily::Subsequence: return static_cast<int>(indices.size());
        case SequenceFamily::CoronaFamily:
        case SequenceFamily::IteratedPrism:
        case SequenceFamily::Derived: return base ? base->max_terms() : std::nullopt;
        default: return std::nullopt;
    }
}

void validate(const SequenceSpec& spec) {
    if (spec.start < 0) throw InvalidArgument("start must be positive");
    if (has_base(spec.family)) {
        if (!spec.base) throw InvalidArgument(std::string(family_tag(spec.family)) + " requires a base sequence");
        validate(*spec.base);
    }
    switch (spec.family) {
        case SequenceFamily::Cycles:
        case SequenceFamily::CompleteGraphs:
        case SequenceFamily::CircularLadders:
        case SequenceFamily::MoebiusLadders:
        case SequenceFamily::Antiprisms:
            if (spec.start != 0 && spec.start < 3) throw InvalidArgument("start must be at least 3");
            break;
        case SequenceFamily::CrossedPrisms:
            if (spec.start != 0 && (spec.start < 4 || spec.start % 2 != 0)) {
                throw InvalidArgument("crossed prisms need an even start of at least 4");
            }
            break;
        case SequenceFamily::TorusFixed:
            if (spec.start != 0 && spec.start < 3) throw InvalidArgument("start must be at least 3");
            if (spec.m != 0 && spec.m < 3) throw InvalidArgument("fixed torus factor m must be at least 3");
            break;
        case SequenceFamily::TorusSchedule:
            check_schedule(spec.schedule, spec.schedule.empty() ? 0 : spec.schedule.front().size());
            break;
        case SequenceFamily::LoadedMultiTorus:
            if (spec.q < 1 || spec.m < 1) throw InvalidArgument("loaded torus needs q >= 1 and m >= 1");
            if (spec.schedule.empty()) {
                if (spec.r < 1) throw InvalidArgument("loaded torus needs r >= 1 or an explicit schedule");
                if (spec.start != 0 && spec.start < 3) throw InvalidArgument("start must be at least 3");
            } else {
                check_schedule(spec.schedule, spec.r == 0 ? spec.schedule.front().size() : static_cast<std::size_t>(spec.r));
            }
            break;
        case SequenceFamily::GeneralizedSun:
            if (spec.start != 0 && spec.start < 3) throw InvalidArgument("start must be at least 3");
            if (spec.p < 2 || spec.q < 1) throw InvalidArgument("generalized sun needs p >= 2 and q >= 1");
            break;
        case SequenceFamily::CoronaFamily:
            if (spec.p < 1 || spec.q < 1) throw InvalidArgument("corona needs p >= 1 and q >= 1");
            break;
        case SequenceFamily::IteratedPrism:
            if (spec.r < 1) throw InvalidArgument("iterated prism needs r >= 1");
            break;
        case SequenceFamily::Derived: break;
        case SequenceFamily::Subsequence: {
            if (spec.indices.empty()) throw InvalidArgument("subsequence needs indices");
            int previous = 0;
            for (int i : spec.indices) {
                if (i <= previous) throw InvalidArgument("subsequence indices must be positive and strictly increasing");
                previous = i;
            }
            const auto limit = spec.base->max_terms();
            if (limit && spec.indices.back() > *limit) {
                throw InvalidArgument("subsequence index " + std::to_string(spec.indices.back()) +
                                      " exceeds the base sequence length " + std::to_string(*limit));
            }
            break;
        }
    }
}

std::vector<Graph> generate(const SequenceSpec& spec, int count) {
    validate(spec);
    if (count < 2) throw InvalidArgument("count must be at least 2");
    if (const auto limit = spec.max_terms(); limit && count > *limit) {
        throw InvalidArgument("count " + std::to_string(count) + " exceeds the " + std::to_string(*limit) +
                              " terms the spec defines");
    }
    std::vector<Graph> base_terms;
    if (spec.base) {
        const int needed = spec.family == SequenceFamily::Subsequence ? spec.indices[static_cast<std::size_t>(count - 1)]
                                                                      : count;
        base_terms = generate(*spec.base, needed);
    }
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) {
        out.push_back(term(spec, k, base_terms));
        if (k > 1 && out[static_cast<std::size_t>(k - 1)].order() <= out[static_cast<std::size_t>(k - 2)].order()) {
            throw InvalidArgument("generated orders do not strictly increase at term " + std::to_string(k));
        }
    }
    return out;
}

TermRecord analyze_term(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("cannot analyze the empty graph");
    if (!is_connected(g)) throw DisconnectedError("analysis requires a connected graph");
    TermRecord t;
    t.order = g.order();
    t.size = g.size();
    const AutGroup aut = automorphism_group(g);
    t.orbits = aut.orbits;
    t.group_order = aut.order;
    t.s = divisor_matrix(g, t.orbits);
    for (const auto& cell : t.orbits.cells()) t.omega.emplace_back(static_cast<std::int64_t>(cell.size()), g.order());
    std::sort(t.omega.begin(), t.omega.end(), [](const Rational& a, const Rational& b) { return a > b; });
    t.entropy = entropy_of(t.omega);

    const PerronData perron = spectral_radius_adjacency(g, kDefaultSpectralTol, &t.orbits);
    t.rho_adjacency = perron.rho;
    t.rho_divisor = spectral_radius_divisor(t.s);
    t.gamma = perron.gamma;
    const OrbitConstancyReport constancy = check_orbit_constancy(perron, t.s, t.orbits, kInvariantTol);
    t.eigen_spread = constancy.spreads.empty() ? 0.0 : *std::max_element(constancy.spreads.begin(), constancy.spreads.end());
    t.eigen_residual = constancy.eigen_residual;

    const DegreeStats stats = degree_stats(g);
    t.min_degree = stats.min_degree;
    t.max_degree = stats.max_degree;
    t.average_degree = stats.average;
    t.degree_variance = stats.variance;
    t.edge_vertex_ratio = edge_vertex_ratio(g);
    if (g.order() >= 2) t.density = density(g);
    t.cyclomatic = cyclomatic_number(g);
    return t;
}

std::string_view to_string(SeedCheck check) {
    switch (check) {
        case SeedCheck::NotRequested: return "not-requested";
        case SeedCheck::Verified: return "verified";
        case SeedCheck::Failed: return "failed";
        case SeedCheck::AssumedByConstruction: return "assumed-by-construction";
    }
    return "unknown";
}

bool SequenceReport::passed() const { return verdict.self_similar && first_failed_check() == nullptr; }

const InvariantCheck* SequenceReport::first_failed_check() const {
    for (const auto& c : preservation) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n > 10 || b.order() > 10) throw ResourceError("brute-force isomorphism is limited to 10 vertices");
    if (n != b.order() || a.size() != b.size()) return false;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(image[static_cast<std::size_t>(u)], w);
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(0);
}

std::vector<TermRecord> analyze_terms(std::span<const Graph> graphs, int jobs) {
    const std::size_t count = graphs.size();
    std::vector<TermRecord> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = analyze_term(graphs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t threads = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

Verdict verify_self_similar(std::span<const Graph> graphs, const Graph* seed, const VerifyOptions& options) {
    if (graphs.size() < 2) throw InvalidArgument("a sequence needs at least two terms");
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        if (!is_connected(graphs[k])) throw DisconnectedError("term " + std::to_string(k + 1) + " is disconnected");
    }
    const std::vector<TermRecord> terms = analyze_terms(graphs, options.jobs);
    return verify_self_similar(terms, graphs, seed, options);
}

Verdict verify_self_similar(std::span<const TermRecord> term_span, std::span<const Graph> graphs, const Graph* seed,
                            const VerifyOptions& options) {
    const std::vector<TermRecord> terms(term_span.begin(), term_span.end());
    const std::size_t count = terms.size();
    if (count < 2) throw InvalidArgument("a sequence needs at least two terms");
    Verdict v;
    const auto fail = [&](std::size_t i, std::size_t j, std::string reason) {
        if (!v.failure) v.failure = PairFailure{i + 1, j + 1, std::move(reason)};
    };

    const bool tree = terms[0].cyclomatic == 0;
    if (tree) fail(0, 1, "first term is a tree; no self-similar sequence emanates from a tree");

    v.growth_ok = true;
    for (std::size_t k = 1; k < count; ++k) {
        if (terms[k].order <= terms[k - 1].order) {
            v.growth_ok = false;
            fail(k - 1, k, "orders do not strictly increase (" + std::to_string(terms[k - 1].order) + " then " +
                               std::to_string(terms[k].order) + ")");
            break;
        }
    }

    v.similarity_ok = true;
    v.witnesses.push_back([&] {
        std::vector<int> id(terms[0].s.ell());
        std::iota(id.begin(), id.end(), 0);
        return id;
    }());
    for (std::size_t k = 1; k < count && v.similarity_ok; ++k) {
        auto w = match_divisor_matrices(terms[0].s, terms[k].s);
        if (!w) {
            v.similarity_ok = false;
            fail(0, k, pair_reason(terms[0].s, terms[k].s));
            break;
        }
        v.witnesses.push_back(std::move(*w));
    }
    if (v.similarity_ok && count >= 3) {
        if (options.exhaustive_pairs) {
            for (std::size_t i = 1; i < count && v.similarity_ok; ++i) {
                for (std::size_t j = i + 1; j < count; ++j) {
                    if (!match_divisor_matrices(terms[i].s, terms[j].s)) {
                        v.similarity_ok = false;
                        fail(i, j, pair_reason(terms[i].s, terms[j].s));
                        break;
                    }
                }
            }
        } else {
            std::mt19937 rng(0x5e1f5eedu);
            std::uniform_int_distribution<std::size_t> pick(1, count - 1);
            std::size_t i = pick(rng);
            std::size_t j = pick(rng);
            while (j == i) j = pick(rng);
            if (i > j) std::swap(i, j);
            if (!composed_pair_ok(terms, v.witnesses, i, j)) {
                v.similarity_ok = false;
                fail(i, j, "witness composition through term 1 does not match");
            }
        }
    }

    if (seed) {
        if (graphs.empty()) throw InvalidArgument("seed check needs the first term's graph");
        v.seed = check_seed(graphs[0], *seed);
        if (v.seed == SeedCheck::Failed) fail(0, 0, "first term is not isomorphic to the seed");
    }

    v.self_similar = v.growth_ok && v.similarity_ok && !tree && v.seed != SeedCheck::Failed;
    if (!v.similarity_ok) v.witnesses.clear();
    return v;
}

SequenceReport preservation_report(std::span<const Graph> graphs, const Graph* seed, const VerifyOptions& options) {
    if (graphs.size() < 2) throw InvalidArgument("a sequence needs at least two terms");
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        if (!is_connected(graphs[k])) throw DisconnectedError("term " + std::to_string(k + 1) + " is disconnected");
    }
    SequenceReport report;
    report.terms = analyze_terms(graphs, options.jobs);
    report.verdict = verify_self_similar(report.terms, graphs, seed, options);
    const auto& t = report.terms;
    auto& checks = report.preservation;

    checks.push_back(divisor_check(t, report.verdict));
    checks.push_back(compare_all(
        "entropy", t, [](const TermRecord& a, const TermRecord& b) { return close(a.entropy, b.entropy); },
        [](const TermRecord& a) { return show_double(a.entropy); }));
    checks.push_back(compare_all(
        "spectral_radius", t,
        [](const TermRecord& a, const TermRecord& b) {
            return close(a.rho_adjacency, b.rho_adjacency) && close(a.rho_divisor, b.rho_divisor);
        },
        [](const TermRecord& a) {
            return "adjacency " + show_double(a.rho_adjacency) + ", divisor " + show_double(a.rho_divisor);
        }));
    {
        InvariantCheck paths{"spectral_radius_paths", true, std::nullopt, ""};
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (!close(t[k].rho_adjacency, t[k].rho_divisor)) {
                paths.passed = false;
                paths.term = k + 1;
                paths.detail = "adjacency " + show_double(t[k].rho_adjacency) + " vs divisor " +
                               show_double(t[k].rho_divisor);
                break;
            }
        }
        checks.push_back(paths);
    }
    checks.push_back(compare_all(
        "min_degree", t, [](const TermRecord& a, const TermRecord& b) { return a.min_degree == b.min_degree; },
        [](const TermRecord& a) { return std::to_string(a.min_degree); }));
    checks.push_back(compare_all(
        "max_degree", t, [](const TermRecord& a, const TermRecord& b) { return a.max_degree == b.max_degree; },
        [](const TermRecord& a) { return std::to_string(a.max_degree); }));
    checks.push_back(compare_all(
        "average_degree", t, [](const TermRecord& a, const TermRecord& b) { return a.average_degree == b.average_degree; },
        [](const TermRecord& a) { return to_string(a.average_degree); }));
    checks.push_back(compare_all(
        "degree_variance", t,
        [](const TermRecord& a, const TermRecord& b) { return a.degree_variance == b.degree_variance; },
        [](const TermRecord& a) { return to_string(a.degree_variance); }));
    checks.push_back(compare_all(
        "principal_ratio", t, [](const TermRecord& a, const TermRecord& b) { return close(a.gamma, b.gamma); },
        [](const TermRecord& a) { return show_double(a.gamma); }));
    checks.push_back(compare_all(
        "edge_vertex_ratio", t,
        [](const TermRecord& a, const TermRecord& b) { return a.edge_vertex_ratio == b.edge_vertex_ratio; },
        [](const TermRecord& a) { return to_string(a.edge_vertex_ratio); }));
    checks.push_back(density_check(t));
    checks.push_back(cyclomatic_check(t));
    checks.push_back(vertex_transitivity_check(t));
    checks.push_back(orbit_constancy_check(t));
    return report;
}

std::vector<Graph> swap_isomorphic_members(std::span<const Graph> graphs, std::size_t k, const Graph& h) {
    if (k >= graphs.size()) throw InvalidArgument("term index out of range");
    if (h.order() != graphs[k].order()) {
        throw InvalidArgument("replacement has order " + std::to_string(h.order()) + ", term has " +
                              std::to_string(graphs[k].order()));
    }
    if (!is_connected(h)) throw DisconnectedError("replacement graph is disconnected");
    if (!orbitally_similar(graphs[k], h).similar) {
        throw VerificationError("replacement is not orbitally similar to the term it replaces");
    }
    std::vector<Graph> out(graphs.begin(), graphs.end());
    out[k] = h;
    const Verdict v = verify_self_similar(out);
    if (!v.self_similar) {
        throw VerificationError("sequence fails verification after the swap" +
                                (v.failure ? ": " + v.failure->reason : std::string()));
    }
    return out;
}

}  // namespace selfsim
