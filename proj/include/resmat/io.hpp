#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "resmat/lattice.hpp"
#include "resmat/matrix.hpp"
#include "resmat/residuated.hpp"
#include "resmat/semiring.hpp"

// JSON file formats.
//
//   lattice:  {"labels": [..], "covers": [[lower, upper], ..]}
//   semiring: {"labels": [..], "add": [[..]..], "mul": [[..]..], "zero": l, "one": l}
//   matrix:   {"base": "<path or builtin:name>", "kind": "res" | "semiring", "n": k,
//              "entries": n x n labels (semiring) or n x n value-label arrays (res)}
//
// Element order is the order of the "labels" array. A residuated map is the
// array of its value labels in that order.
namespace resmat::io {

using nlohmann::json;

json lattice_to_json(const FiniteLattice &lattice);
LatticePtr lattice_from_json(const json &doc);

json semiring_to_json(const FiniteSemiring &semiring);
SemiringPtr semiring_from_json(const json &doc);
json generated_semiring_to_json(const GeneratedSemiring &semiring);

json map_to_json(const ResiduatedMap &map);
ResiduatedMap map_from_json(const LatticePtr &lattice, const json &doc);

/// Throws InvalidInput on unreadable or malformed files.
json read_json_file(const std::filesystem::path &path);

/// `spec` is "builtin:<name>", a bare builtin name, or a path (resolved
/// against `relative_to` when relative). A semiring given where a lattice is
/// expected stands for its natural order lattice.
LatticePtr load_lattice(const std::string &spec, const std::filesystem::path &relative_to = {});
SemiringPtr load_semiring(const std::string &spec, const std::filesystem::path &relative_to = {});

struct MatrixDocument {
    std::string base;
    std::variant<ResMatrix, SemiringMatrix> matrix;

    bool is_res() const noexcept { return std::holds_alternative<ResMatrix>(matrix); }
};

MatrixDocument matrix_from_json(const json &doc, const std::filesystem::path &base_dir = {});
MatrixDocument load_matrix(const std::filesystem::path &path);
json matrix_to_json(const ResMatrix &matrix, const std::string &base);
json matrix_to_json(const SemiringMatrix &matrix, const std::string &base);
json matrix_to_json(const MatrixDocument &doc);

/// sigma in cycle notation over (factor,row) pairs, fixed points omitted;
/// "()" for the identity.
std::string sigma_cycles(const InvertibilityCertificate &certificate);
json certificate_to_json(const InvertibilityCertificate &certificate);

} // namespace resmat::io
