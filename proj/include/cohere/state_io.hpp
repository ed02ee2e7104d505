#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cohere/core.hpp"

namespace cohere {

// State files are JSON objects {"dim": d, "re": [[...]], "im": [[...]]} with
// row-major d x d real and imaginary parts. Basis files use the same layout,
// columns being the basis vectors.

/// Throws ParseError on any schema problem (missing keys, wrong shapes,
/// non-numeric entries).
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Reads and decodes a file; ParseError covers unreadable files and bad JSON.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// Decoded and validated as a density matrix.
DensityMatrix read_state_file(const std::filesystem::path& path);
/// Decoded and validated as a unitary basis.
MeasurementBasis read_basis_file(const std::filesystem::path& path);

}  // namespace cohere
