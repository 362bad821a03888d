#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "selfsim/aut.hpp"
#include "selfsim/constructions.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/orbital.hpp"
#include "selfsim/report.hpp"
#include "selfsim/sequences.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace selfsim;

namespace {

Graph read_graph(const std::string& text, const std::string& format) {
    if (format == "graph6") return parse_graph6(text);
    if (format == "edgelist") return parse_edge_list(text);
    throw InvalidArgument("unknown graph format '" + format + "'");
}

// Results cross the boundary as JSON text; the Python side decodes them.
std::string analyze(const std::string& text, const std::string& format) {
    const Graph g = read_graph(text, format);
    py::gil_scoped_release unlocked;
    return to_json(analyze_term(g), true).dump();
}

std::string compare(const std::string& a, const std::string& b, const std::string& format) {
    const Graph ga = read_graph(a, format);
    const Graph gb = read_graph(b, format);
    py::gil_scoped_release unlocked;
    Json doc = to_json(orbitally_similar(ga, gb));
    const OrbitProfile pa = orbit_profile(ga);
    const OrbitProfile pb = orbit_profile(gb);
    doc["homothetic"] = pa.omega == pb.omega;
    doc["entropy"] = Json::array({pa.entropy, pb.entropy});
    doc["s_a"] = to_json(orbit_divisor_matrix(ga));
    doc["s_b"] = to_json(orbit_divisor_matrix(gb));
    return doc.dump();
}

std::string generate_graph(const std::string& name, int n, int p, int q, int m, const std::vector<int>& dims,
                           const std::string& format) {
    const Graph g = family(name, FamilyParams{n, p, q, m, dims});
    if (format == "graph6") return to_graph6(g);
    if (format == "dot") return to_dot(g);
    if (format == "edgelist") return to_edge_list(g);
    throw InvalidArgument("unknown output format '" + format + "'");
}

std::string sequence(const std::string& spec_json, int count, int jobs, bool exhaustive) {
    const SequenceSpec spec = parse_sequence_spec(spec_json);
    py::gil_scoped_release unlocked;
    const std::vector<Graph> graphs = generate(spec, count);
    return to_json(preservation_report(graphs, nullptr, VerifyOptions{jobs, exhaustive})).dump();
}

double entropy(const std::vector<std::string>& omega) {
    std::vector<Rational> p;
    for (const auto& s : omega) p.push_back(parse_rational(s));
    return entropy_of(p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orbit structure, orbital similarity and self-similar graph sequences";

    auto base = py::register_exception<Error>(m, "SelfsimError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<DisconnectedError>(m, "DisconnectedError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<NotEquitableError>(m, "NotEquitableError", base.ptr());
    py::register_exception<InvalidDivisorMatrix>(m, "InvalidDivisorMatrix", base.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", base.ptr());

    m.def("analyze", &analyze, "text"_a, "format"_a = "edgelist");
    m.def("compare", &compare, "a"_a, "b"_a, "format"_a = "edgelist");
    m.def("generate", &generate_graph, "family"_a, "n"_a = 0, "p"_a = 0, "q"_a = 0, "m"_a = 0,
          "dims"_a = std::vector<int>{}, "format"_a = "edgelist");
    m.def("sequence", &sequence, "spec"_a, "count"_a = 5, "jobs"_a = 1, "exhaustive"_a = false);
    m.def("entropy", &entropy, "omega"_a, "Base-2 entropy of a probability vector given as 'p/q' strings");
    m.def("family_names", &family_names);
    m.attr("__version__") = "0.1.0";
}
