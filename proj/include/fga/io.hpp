#pragma once

#include <string>

#include <json.hpp>

#include "fga/gabor.hpp"

namespace fga::io {

using json = nlohmann::ordered_json;

/// Input that fails schema validation (wrong keys, lengths, types).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Signal JSON: {"group":[n1,...,nk], "re":[...], "im":[...]},
// arrays of length |G| in linear-index order.
json signal_to_json(const Signal& signal);
Signal signal_from_json(const json& j);

// Lattice JSON: {"group":[n1,...,nk], "generators":[[k-coords...,r-coords...],...]};
// elements are never serialized and are recomputed on load.
json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const json& j);

// Matrix JSON: {"group":[n1,...,nk], "re":[[...],...], "im":[[...],...]} row-major.
json matrix_to_json(const GroupSpec& group, const OperatorMatrix& m);
std::pair<GroupSpec, OperatorMatrix> matrix_from_json(const json& j);

/// Spreading CSV: header "k_index,r_index,re,im,abs", one row per plane
/// point in TFPoint linear-index order, and a footer comment line with the
/// Parseval check (sum of |eta|^2 against ||A||_Fro^2 / |G|).
std::string spreading_to_csv(const SpreadingFunction& eta, double frobenius_sq);

/// Generator flag grammar: semicolon-separated points, comma-separated
/// coordinates, time coordinates then frequency coordinates.
std::vector<TFPoint> parse_generators(const GroupSpec& group, const std::string& text);

/// Comma-separated cyclic orders, e.g. "8" or "2,3".
GroupSpec parse_group(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace fga::io
