#include "selfsim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "selfsim/errors.hpp"
#include "selfsim/partition.hpp"

namespace selfsim {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n) {
            throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} out of range for n = " + std::to_string(n));
        }
        if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
    if (image.size() != static_cast<std::size_t>(n_)) throw InvalidArgument("relabeling has wrong length");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        out.emplace_back(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]);
    }
    return Graph(n_, std::move(out));
}

// -- edge list -------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    int line_no = 0;
    int header_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.size() != 2) throw ParseError("expected two integers", line_no);
        long long a = parse_int(tokens[0], line_no);
        long long b = parse_int(tokens[1], line_no);
        if (!header) {
            if (a < 1) throw ParseError("vertex count must be at least 1", line_no);
            if (b < 0) throw ParseError("negative edge count", line_no);
            if (a > (1LL << 30)) throw ParseError("vertex count too large", line_no);
            header = {a, b};
            header_line = line_no;
        } else {
            if (a < 0 || b < 0 || a >= header->first || b >= header->first) {
                throw ParseError("vertex out of range", line_no);
            }
            if (a == b) throw ParseError("loop at vertex " + std::to_string(a), line_no);
            if (a > b) throw ParseError("edge endpoints must satisfy u < v", line_no);
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        if (end == text.size()) break;
    }
    if (!header) throw ParseError("missing 'n m' header");
    if (static_cast<long long>(edges.size()) != header->second) {
        throw ParseError("header announces " + std::to_string(header->second) + " edges, found " +
                             std::to_string(edges.size()),
                         header_line);
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw ParseError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }
    return Graph(static_cast<int>(header->first), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

// -- graph6 ----------------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text) {
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte");
    }

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > text.size()) throw ParseError("truncated graph6 size field");
        long long v = 0;
        for (std::size_t i = 0; i < count; ++i) v = (v << 6) | (text[pos + i] - 63);
        pos += count;
        return v;
    };
    long long n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n < 1) throw ParseError("graph6 graph must have at least one vertex");
    if (n > (1LL << 30)) throw ParseError("graph6 vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected) throw ParseError("graph6 body has wrong length");

    std::vector<Edge> edges;
    long long k = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i, ++k) {
            int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int acc = 0;
    int filled = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

// -- DOT -------------------------------------------------------------------------------

std::string to_dot(const Graph& g, const Partition* coloring) {
    static constexpr const char* palette[] = {"blue",   "green",  "yellow", "red",   "orange", "purple",
                                              "cyan",   "pink",   "brown",  "gray",  "olive",  "navy"};
    constexpr std::size_t palette_size = std::size(palette);

    std::vector<int> cell_of;
    if (coloring) {
        if (coloring->vertex_count() != g.order()) {
            throw InvalidArgument("coloring does not partition the vertex set of the graph");
        }
        cell_of = coloring->cell_index();
    }

    std::ostringstream out;
    out << "graph G {\n";
    if (coloring) out << "  node [style=filled];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (coloring) {
            auto c = static_cast<std::size_t>(cell_of[static_cast<std::size_t>(v)]);
            if (c < palette_size) {
                out << " [fillcolor=" << palette[c] << ", orbit=" << c << "]";
            } else {
                char hsv[32];
                std::snprintf(hsv, sizeof hsv, "%.3f 0.600 0.900", static_cast<double>((c * 37) % 100) / 100.0);
                out << " [fillcolor=\"" << hsv << "\", orbit=" << c << "]";
            }
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

// -- invariants ------------------------------------------------------------------------

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

DegreeStats degree_stats(const Graph& g, int max_moment) {
    const int n = g.order();
    if (n == 0) throw InvalidArgument("degree statistics of the empty graph are undefined");
    if (max_moment < 2) max_moment = 2;

    DegreeStats stats;
    stats.min_degree = g.degree(0);
    stats.max_degree = g.degree(0);
    std::vector<std::int64_t> power_sums(static_cast<std::size_t>(max_moment) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        stats.min_degree = std::min(stats.min_degree, d);
        stats.max_degree = std::max(stats.max_degree, d);
        std::int64_t p = 1;
        for (int r = 1; r <= max_moment; ++r) {
            p *= d;
            power_sums[static_cast<std::size_t>(r)] += p;
        }
    }
    for (int r = 1; r <= max_moment; ++r) stats.moments[r] = Rational(power_sums[static_cast<std::size_t>(r)], n);
    stats.average = stats.moments[1];
    stats.variance = stats.moments[2] - stats.average * stats.average;
    return stats;
}

Rational edge_vertex_ratio(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("edge-vertex ratio of the empty graph is undefined");
    return Rational(static_cast<std::int64_t>(g.size()), g.order());
}

Rational density(const Graph& g) {
    const std::int64_t n = g.order();
    if (n < 2) throw InvalidArgument("density needs at least two vertices");
    return Rational(2 * static_cast<std::int64_t>(g.size()), n * (n - 1));
}

std::int64_t cyclomatic_number(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("cyclomatic number requires a connected graph");
    return static_cast<std::int64_t>(g.size()) - g.order() + 1;
}

// -- rationals -------------------------------------------------------------------------

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = parse_int(text.substr(0, slash), 0);
    long long den = 1;
    if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1), 0);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace selfsim
