// selfsim: orbit structure, orbital similarity and self-similar sequences from the command line.

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfsim/aut.hpp"
#include "selfsim/constructions.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/orbital.hpp"
#include "selfsim/report.hpp"
#include "selfsim/sequences.hpp"

namespace {

using namespace selfsim;

constexpr const char* kVersion = "0.1.0";

enum Exit : int {
    kOk = 0,
    kDissimilar = 1,
    kBadInput = 2,
    kDisconnected = 3,
    kResource = 4,
    kVerification = 5,
    kNumerical = 6,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    return format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
}

Json meta(const std::vector<std::string>& args) {
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return Json{{"tool", "selfsim"}, {"version", kVersion}, {"arguments", args}, {"generated_at", stamp}};
}

void print_json(Json doc, bool with_meta, const std::vector<std::string>& args) {
    if (with_meta) doc["meta"] = meta(args);
    std::cout << doc.dump(2) << '\n';
}

struct Options {
    std::string path;
    std::string path_b;
    std::string format = "edgelist";
    bool json = false;
    bool table = false;
    bool with_meta = false;
    std::string dot;

    std::string family;
    FamilyParams params;
    std::string dims;
    std::string out;
    std::string out_format = "edgelist";

    std::string spec;
    int count = 0;
    int jobs = 1;
    std::string seed;
    bool exhaustive = false;

    std::string demo;
};

int cmd_analyze(const Options& o, const std::vector<std::string>& args) {
    const Graph g = load_graph(o.path, o.format);
    const TermRecord t = analyze_term(g);
    if (!o.dot.empty()) write_file(o.dot, to_dot(g, &t.orbits));
    if (o.json) {
        print_json(to_json(t, true), o.with_meta, args);
    } else {
        std::cout << analysis_table(t);
    }
    return kOk;
}

int cmd_compare(const Options& o, const std::vector<std::string>& args) {
    const Graph a = load_graph(o.path, o.format);
    const Graph b = load_graph(o.path_b, o.format);
    const SimilarityVerdict verdict = orbitally_similar(a, b);
    const OrbitProfile pa = orbit_profile(a);
    const OrbitProfile pb = orbit_profile(b);
    const bool homothetic = pa.omega == pb.omega;
    const DivisorMatrix sa = orbit_divisor_matrix(a);
    const DivisorMatrix sb = orbit_divisor_matrix(b);
    if (o.json) {
        Json doc = to_json(verdict);
        doc["homothetic"] = homothetic;
        doc["entropy"] = Json::array({pa.entropy, pb.entropy});
        doc["s_a"] = to_json(sa);
        doc["s_b"] = to_json(sb);
        print_json(doc, o.with_meta, args);
    } else {
        std::cout << "similar:     " << (verdict.similar ? "yes" : "no") << '\n'
                  << "homothetic:  " << (homothetic ? "yes" : "no") << '\n'
                  << "entropy:     " << format_fixed(pa.entropy) << "  " << format_fixed(pb.entropy) << '\n'
                  << "S_A:         " << format_matrix(sa.s) << '\n'
                  << "S_B:         " << format_matrix(sb.s) << '\n';
        if (verdict.witness) {
            std::cout << "witness:    ";
            for (int c : *verdict.witness) std::cout << ' ' << c;
            std::cout << '\n';
        }
    }
    return verdict.similar ? kOk : kDissimilar;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            dims.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("--dims expects comma-separated integers, got '" + text + "'");
        }
    }
    return dims;
}

int cmd_generate(Options o) {
    if (!o.dims.empty()) o.params.dims = parse_dims(o.dims);
    const Graph g = family(o.family, o.params);
    std::string text;
    if (o.out_format == "graph6") {
        text = to_graph6(g) + "\n";
    } else if (o.out_format == "dot") {
        text = to_dot(g);
    } else {
        text = to_edge_list(g);
    }
    const std::string summary = o.family + ": " + std::to_string(g.order()) + " vertices, " +
                                std::to_string(g.size()) + " edges\n";
    if (o.out.empty()) {
        std::cout << text;
        std::cerr << summary;
    } else {
        write_file(o.out, text);
        std::cout << summary;
    }
    return kOk;
}

int cmd_sequence(const Options& o, const std::vector<std::string>& args) {
    const std::string text = read_file(o.spec);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const SequenceSpec spec = sequence_spec_from_json(doc);
    int count = o.count;
    if (count == 0 && doc.contains("count")) {
        if (!doc.at("count").is_number_integer()) throw ParseError("'count' must be an integer");
        count = doc.at("count").get<int>();
    }
    if (count == 0) count = std::min(5, spec.max_terms().value_or(5));
    const std::vector<Graph> graphs = generate(spec, count);
    std::optional<Graph> seed;
    if (!o.seed.empty()) seed = load_graph(o.seed, o.format);
    const SequenceReport report =
        preservation_report(graphs, seed ? &*seed : nullptr, VerifyOptions{o.jobs, o.exhaustive});
    if (o.json) {
        Json out{{"spec", to_json(spec)}, {"count", count}};
        out.update(to_json(report));
        print_json(out, o.with_meta, args);
    } else {
        std::cout << sequence_table(report);
    }
    if (!report.passed()) {
        if (!report.verdict.self_similar) {
            std::cerr << "verification failed: not self-similar";
            if (report.verdict.failure) std::cerr << " (" << report.verdict.failure->reason << ")";
            std::cerr << '\n';
        } else if (const InvariantCheck* c = report.first_failed_check()) {
            std::cerr << "verification failed: invariant '" << c->name << "'";
            if (c->term) std::cerr << " at term " << *c->term;
            std::cerr << '\n';
        }
        return kVerification;
    }
    return kOk;
}

int cmd_demo(const Options& o, const std::vector<std::string>& args) {
    if (o.demo != "table1") throw InvalidArgument("unknown demo '" + o.demo + "' (available: table1)");
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table;
    for (const auto& row : entropy_reference_table()) {
        const double ent = entropy_of(row.omega);
        rows.push_back(Json{{"graph", row.label},
                            {"order", row.order},
                            {"omega", Json::array()},
                            {"entropy", ent},
                            {"printed", row.printed},
                            {"abs_diff", std::fabs(ent - row.printed)}});
        for (const auto& w : row.omega) rows.back()["omega"].push_back(to_string(w));
        table.push_back({row.label, std::to_string(row.order), format_omega(row.omega), format_fixed(ent),
                         format_fixed(row.printed)});
    }
    if (o.json) {
        print_json(Json{{"table", rows}}, o.with_meta, args);
    } else {
        std::cout << "G    |G|  omega                Ent     printed\n";
        for (const auto& r : table) {
            std::string omega = r[2];
            omega.resize(std::max<std::size_t>(omega.size(), 19), ' ');
            std::string label = r[0];
            label.resize(4, ' ');
            std::string order = r[1];
            order.insert(0, 3 - std::min<std::size_t>(3, order.size()), ' ');
            std::cout << label << order << "  " << omega << "  " << r[3] << "  " << r[4] << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    CLI::App app{"Orbit structure, orbital similarity and self-similar graph sequences"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);
    Options o;
    app.add_option("--demo", o.demo, "Run a built-in demo (table1)");

    const auto output_flags = [&o](CLI::App* cmd) {
        auto* json = cmd->add_flag("--json", o.json, "JSON output");
        auto* table = cmd->add_flag("--table", o.table, "Aligned text output (default)");
        json->excludes(table);
        cmd->add_flag("--meta", o.with_meta, "Add provenance to JSON output");
    };
    const auto format_option = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"edgelist", "graph6"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Orbits, divisor matrix, entropy and spectral data of one graph");
    analyze->add_option("path", o.path, "Graph file")->required();
    format_option(analyze);
    output_flags(analyze);
    analyze->add_option("--dot", o.dot, "Write a DOT file coloured by orbit");

    auto* compare = app.add_subcommand("compare", "Decide orbital similarity of two graphs");
    compare->add_option("a", o.path, "First graph file")->required();
    compare->add_option("b", o.path_b, "Second graph file")->required();
    format_option(compare);
    output_flags(compare);

    auto* gen = app.add_subcommand("generate", "Build a named family member");
    gen->add_option("family", o.family, "Family name")->required()->check(CLI::IsMember(family_names()));
    gen->add_option("--n", o.params.n, "Size parameter n");
    gen->add_option("--p", o.params.p, "Clique size p");
    gen->add_option("--q", o.params.q, "Multiplicity q");
    gen->add_option("--m", o.params.m, "Load length m");
    gen->add_option("--dims", o.dims, "Torus factors, comma-separated");
    gen->add_option("--out", o.out, "Output file (stdout when omitted)");
    gen->add_option("--format", o.out_format, "Output format")->check(CLI::IsMember({"edgelist", "graph6", "dot"}));

    auto* seq = app.add_subcommand("sequence", "Generate and verify a self-similar sequence");
    seq->add_option("spec", o.spec, "Sequence spec JSON file")->required();
    seq->add_option("--count", o.count, "Number of terms (default: the spec's count, else up to 5)")
        ->check(CLI::Range(2, 1000));
    seq->add_option("--jobs", o.jobs, "Worker threads for term analysis")->check(CLI::Range(1, 256));
    seq->add_option("--seed", o.seed, "Seed graph that the first term must be isomorphic to");
    seq->add_flag("--exhaustive", o.exhaustive, "Compare every pair of terms directly");
    format_option(seq);
    output_flags(seq);

    auto* demo = app.add_subcommand("demo", "Built-in demos");
    demo->add_option("name", o.demo, "Demo name (table1)")->required();
    output_flags(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*analyze) return cmd_analyze(o, args);
        if (*compare) return cmd_compare(o, args);
        if (*gen) return cmd_generate(o);
        if (*seq) return cmd_sequence(o, args);
        if (*demo || !o.demo.empty()) return cmd_demo(o, args);
        std::cout << app.help();
        return kBadInput;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kBadInput;
    } catch (const DisconnectedError& e) {
        std::cerr << "disconnected: " << e.what() << '\n';
        return kDisconnected;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
