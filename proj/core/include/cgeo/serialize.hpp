#pragma once

#include <string>

#include "json.hpp"

#include "cgeo/bounds.hpp"
#include "cgeo/compile.hpp"
#include "cgeo/path.hpp"

namespace cgeo {

using Json = nlohmann::json;  // object keys stay sorted, so dumps are stable

// Path: {"n_qubits": N, "segments": [{"duration": t,
//   "terms": [{"pauli": "XZIY", "coeff": h}]}], "global_phase": radians}.
// Coefficients must be plain real numbers.
Json to_json(const Path& p);
Path path_from_json(const Json& j);

Json to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const Json& j, int n_qubits);

// Schedule: {"kind": ..., "n_qubits": N, ...} with kind-specific fields
// penalty / alpha / x / k0 / table / penalties.
Json to_json(const PenaltySchedule& s);
PenaltySchedule schedule_from_json(const Json& j);

// Circuit: {"n_qubits": N, "global_phase": [re, im],
//   "gates": [{"qubits": [a, b], "block": [16 [re, im] pairs row-major]}]}.
Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// Row-major array of rows of [re, im] pairs.
Json to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);

Json to_json(const CompileReport& r);

Json to_json(const GeodesicStats& st);

std::string bounds_csv_header();
std::string bounds_csv_row(const std::string& schedule_name,
                           const BoundQuery& q, const std::string& error_kind,
                           const GateBound& b);
Json bounds_json_row(const std::string& schedule_name, const BoundQuery& q,
                     const std::string& error_kind, const GateBound& b);

Json read_json_file(const std::string& path);

/// Writes via a temporary file in the same directory and renames on
/// success, so failures never leave partial output.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace cgeo
