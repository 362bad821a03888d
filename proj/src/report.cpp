#include "selfsim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

Json rationals(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& r : values) out.push_back(to_string(r));
    return out;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

template <typename T>
T get_int(const Json& doc, const char* key, T fallback) {
    if (!doc.contains(key)) return fallback;
    const Json& v = doc.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
    return v.get<T>();
}

std::vector<int> int_list(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string("'") + what + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError(std::string("'") + what + "' must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::string pad(const std::string& s, std::size_t width, bool left) {
    if (s.size() >= width) return s;
    const std::string fill(width - s.size(), ' ');
    return left ? s + fill : fill + s;
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << (c + 1 == row.size() ? row[c] : pad(row[c], width[c], c == 0));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

Json to_json(const DivisorMatrix& s) {
    return Json{{"ell", s.ell()}, {"s", s.s}, {"sizes", s.sizes}};
}

Json to_json(const Partition& cells) { return Json(cells.cells()); }

Json to_json(const SimilarityVerdict& verdict) {
    Json out{{"similar", verdict.similar}};
    out["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    out["common_s"] = verdict.common_s ? to_json(*verdict.common_s) : Json(nullptr);
    return out;
}

Json to_json(const PerronData& perron) {
    return Json{{"rho", perron.rho}, {"gamma", perron.gamma}, {"x", perron.x}, {"alpha", perron.alpha},
                {"iterations", perron.iterations}};
}

Json to_json(const TermRecord& t, bool with_orbits) {
    Json out;
    out["order"] = t.order;
    out["size"] = t.size;
    out["ell"] = t.s.ell();
    out["s"] = to_json(t.s);
    out["omega"] = rationals(t.omega);
    out["entropy"] = t.entropy;
    out["rho_adjacency"] = t.rho_adjacency;
    out["rho_divisor"] = t.rho_divisor;
    out["min_degree"] = t.min_degree;
    out["max_degree"] = t.max_degree;
    out["average_degree"] = to_string(t.average_degree);
    out["degree_variance"] = to_string(t.degree_variance);
    out["gamma"] = t.gamma;
    out["edge_vertex_ratio"] = to_string(t.edge_vertex_ratio);
    out["density"] = optional_rational(t.density);
    out["cyclomatic"] = t.cyclomatic;
    out["eigen_spread"] = t.eigen_spread;
    out["eigen_residual"] = t.eigen_residual;
    if (with_orbits) {
        out["orbits"] = to_json(t.orbits);
        out["group_order"] = t.group_order.str();
    }
    return out;
}

Json to_json(const Verdict& v) {
    Json out{{"self_similar", v.self_similar},
             {"growth_ok", v.growth_ok},
             {"similarity_ok", v.similarity_ok},
             {"seed", std::string(to_string(v.seed))}};
    if (v.failure) {
        out["failure"] = Json{{"first", v.failure->first}, {"second", v.failure->second}, {"reason", v.failure->reason}};
    } else {
        out["failure"] = nullptr;
    }
    out["witnesses"] = v.witnesses;
    return out;
}

Json to_json(const InvariantCheck& c) {
    return Json{{"name", c.name},
                {"passed", c.passed},
                {"term", c.term ? Json(*c.term) : Json(nullptr)},
                {"detail", c.detail}};
}

Json to_json(const SequenceReport& report) {
    Json terms = Json::array();
    for (const auto& t : report.terms) terms.push_back(to_json(t));
    Json checks = Json::array();
    for (const auto& c : report.preservation) checks.push_back(to_json(c));
    return Json{{"passed", report.passed()}, {"verdict", to_json(report.verdict)}, {"preservation", checks},
                {"terms", terms}};
}

Json to_json(const SequenceSpec& spec) {
    Json out{{"family", std::string(family_tag(spec.family))}};
    if (spec.start) out["start"] = spec.start;
    if (spec.m) out["m"] = spec.m;
    if (spec.p) out["p"] = spec.p;
    if (spec.q) out["q"] = spec.q;
    if (spec.r) out["r"] = spec.r;
    if (!spec.schedule.empty()) out["schedule"] = spec.schedule;
    if (spec.family == SequenceFamily::Derived) out["op"] = std::string(op_tag(spec.op));
    if (!spec.indices.empty()) out["indices"] = spec.indices;
    if (spec.base) out["base"] = to_json(*spec.base);
    return out;
}

std::string_view op_tag(UnaryOp op) {
    switch (op) {
        case UnaryOp::Prism: return "prism";
        case UnaryOp::StrongPrism: return "strong-prism";
        case UnaryOp::MinimalCorona: return "minimal-corona";
    }
    return "unknown";
}

UnaryOp parse_op_tag(std::string_view tag) {
    if (tag == "prism") return UnaryOp::Prism;
    if (tag == "strong-prism") return UnaryOp::StrongPrism;
    if (tag == "minimal-corona") return UnaryOp::MinimalCorona;
    throw ParseError("unknown operation '" + std::string(tag) + "'");
}

SequenceSpec sequence_spec_from_json(const Json& doc) {
    static const std::vector<std::string> known{"family", "start", "m", "p", "q", "r", "schedule", "op", "indices",
                                                "base", "count"};
    if (!doc.is_object()) throw ParseError("sequence spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ParseError("unknown sequence spec key '" + key + "'");
        }
    }
    if (!doc.contains("family") || !doc.at("family").is_string()) throw ParseError("sequence spec needs a 'family' string");
    SequenceSpec spec;
    try {
        spec.family = parse_family_tag(doc.at("family").get<std::string>());
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    spec.start = get_int(doc, "start", 0);
    spec.m = get_int(doc, "m", 0);
    spec.p = get_int(doc, "p", 0);
    spec.q = get_int(doc, "q", 0);
    spec.r = get_int(doc, "r", 0);
    if (doc.contains("schedule")) {
        const Json& s = doc.at("schedule");
        if (!s.is_array()) throw ParseError("'schedule' must be an array of integer arrays");
        for (const auto& entry : s) spec.schedule.push_back(int_list(entry, "schedule"));
    }
    if (doc.contains("op")) {
        if (!doc.at("op").is_string()) throw ParseError("'op' must be a string");
        spec.op = parse_op_tag(doc.at("op").get<std::string>());
    }
    if (doc.contains("indices")) spec.indices = int_list(doc.at("indices"), "indices");
    if (doc.contains("base")) spec.base = std::make_shared<const SequenceSpec>(sequence_spec_from_json(doc.at("base")));
    return spec;
}

SequenceSpec parse_sequence_spec(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return sequence_spec_from_json(doc);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::string format_omega(const std::vector<Rational>& omega) {
    std::string out = "(";
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i) out += ", ";
        out += to_string(omega[i]);
    }
    return out + ")";
}

std::string format_matrix(const IntMatrix& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < s[i].size(); ++j) {
            if (j) out += ", ";
            out += std::to_string(s[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

const std::vector<EntropyReference>& entropy_reference_table() {
    static const std::vector<EntropyReference> rows = [] {
        const auto w = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
            return std::vector<Rational>{Rational(a, n), Rational(b, n), Rational(c, n)};
        };
        return std::vector<EntropyReference>{
            {"Z1", 20, w(17, 2, 1, 20), 0.7476}, {"Z2", 8, w(5, 2, 1, 8), 1.2988},
            {"Z3", 4, w(2, 1, 1, 4), 1.5000},    {"Z4", 5, w(2, 2, 1, 5), 1.5219},
            {"Z5", 5, w(2, 2, 1, 5), 1.5219},    {"Z6", 20, w(8, 8, 4, 20), 1.5219},
            {"Z7", 5, w(2, 2, 1, 5), 1.5219},    {"Z8", 10, w(4, 4, 2, 10), 1.5219},
        };
    }();
    return rows;
}

std::string sequence_table(const SequenceReport& report) {
    std::vector<std::vector<std::string>> rows{{"k", "|G|", "e", "l", "omega", "Ent", "rho", "gamma", "c", "dens"}};
    for (std::size_t k = 0; k < report.terms.size(); ++k) {
        const TermRecord& t = report.terms[k];
        rows.push_back({std::to_string(k + 1), std::to_string(t.order), std::to_string(t.size),
                        std::to_string(t.s.ell()), format_omega(t.omega), format_fixed(t.entropy),
                        format_fixed(t.rho_adjacency), format_fixed(t.gamma), std::to_string(t.cyclomatic),
                        t.density ? to_string(*t.density) : "-"});
    }
    std::string out = render(rows);
    out += "\nself-similar: ";
    out += report.verdict.self_similar ? "yes" : "no";
    if (report.verdict.failure) {
        const auto& f = *report.verdict.failure;
        out += " (terms " + std::to_string(f.first) + " and " + std::to_string(f.second) + ": " + f.reason + ")";
    }
    out += "\nseed: " + std::string(to_string(report.verdict.seed)) + "\n";
    std::vector<std::vector<std::string>> checks{{"invariant", "status", "detail"}};
    for (const auto& c : report.preservation) {
        std::string detail = c.detail;
        if (c.term) detail = "term " + std::to_string(*c.term) + ": " + detail;
        checks.push_back({c.name, c.passed ? "pass" : "FAIL", detail});
    }
    out += "\n" + render(checks);
    return out;
}

std::string analysis_table(const TermRecord& t) {
    std::vector<std::vector<std::string>> rows{
        {"order", std::to_string(t.order)},
        {"size", std::to_string(t.size)},
        {"group order", t.group_order.str()},
        {"orbits", std::to_string(t.s.ell())},
        {"S", format_matrix(t.s.s)},
        {"omega", format_omega(t.omega)},
        {"Ent", format_fixed(t.entropy)},
        {"rho (adjacency)", format_fixed(t.rho_adjacency)},
        {"rho (divisor)", format_fixed(t.rho_divisor)},
        {"gamma", format_fixed(t.gamma)},
        {"min degree", std::to_string(t.min_degree)},
        {"max degree", std::to_string(t.max_degree)},
        {"average degree", to_string(t.average_degree)},
        {"degree variance", to_string(t.degree_variance)},
        {"edge/vertex ratio", to_string(t.edge_vertex_ratio)},
        {"density", t.density ? to_string(*t.density) : "-"},
        {"cyclomatic", std::to_string(t.cyclomatic)},
    };
    std::string out = render(rows);
    out += "orbit cells:";
    for (const auto& cell : t.orbits.cells()) {
        out += " {";
        for (std::size_t i = 0; i < cell.size(); ++i) out += (i ? "," : "") + std::to_string(cell[i]);
        out += "}";
    }
    return out + "\n";
}

}  // namespace selfsim
