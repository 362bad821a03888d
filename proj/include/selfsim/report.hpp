#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "selfsim/orbital.hpp"
#include "selfsim/sequences.hpp"
#include "selfsim/spectral.hpp"

namespace selfsim {

using Json = nlohmann::ordered_json;

// JSON. Rationals are "p/q" strings, big integers decimal strings, floats JSON numbers.

Json to_json(const DivisorMatrix& s);
Json to_json(const Partition& cells);
Json to_json(const SimilarityVerdict& verdict);
Json to_json(const PerronData& perron);
/// Per-graph record; `with_orbits` adds the orbit cells and the group order.
Json to_json(const TermRecord& term, bool with_orbits = false);
Json to_json(const Verdict& verdict);
Json to_json(const InvariantCheck& check);
Json to_json(const SequenceReport& report);
Json to_json(const SequenceSpec& spec);

/// Schema: {"family": tag, "start", "m", "p", "q", "r": int, "schedule": [[int...]...],
/// "op": "prism"|"strong-prism"|"minimal-corona", "indices": [int...], "base": {...}}.
/// All keys but "family" are optional; a top-level "count" is tolerated and ignored here.
/// Throws ParseError on malformed documents.
SequenceSpec sequence_spec_from_json(const Json& doc);
SequenceSpec parse_sequence_spec(std::string_view text);

std::string_view op_tag(UnaryOp op);
UnaryOp parse_op_tag(std::string_view tag);

// Text tables, floats with 4 decimals.

std::string format_fixed(double x, int decimals = 4);
std::string format_omega(const std::vector<Rational>& omega);
std::string format_matrix(const IntMatrix& s);

/// Eight three-orbit graphs Z1..Z8 with published orbit distributions and entropies (4 decimals).
struct EntropyReference {
    std::string label;
    int order = 0;
    std::vector<Rational> omega;
    double printed = 0.0;
};
const std::vector<EntropyReference>& entropy_reference_table();

/// One row per term: k, |G|, e, l, omega, Ent, rho, gamma, c, dens.
std::string sequence_table(const SequenceReport& report);
/// Key/value listing of a single graph's record.
std::string analysis_table(const TermRecord& term);

}  // namespace selfsim
