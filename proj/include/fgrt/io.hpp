#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "fgrt/phase_space.hpp"

namespace fgrt {

// JSON object layout shared by density-matrix files and the CLI's operator
// dumps: {"d": int, "re": [[...]], "im": [[...]]}.
nlohmann::ordered_json matrix_to_json(PrimeDim dim, const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, PrimeDim dim);

void write_density(const std::filesystem::path& path, const DensityOperator& rho);
DensityOperator read_density(const std::filesystem::path& path);

// {"d": int, "tables": [{"basis": b, "probabilities": [...]}]}, all d+1
// bases required.
nlohmann::ordered_json prob_table_to_json(const ProbabilityTable& table);
ProbabilityTable prob_table_from_json(const nlohmann::json& j);
void write_prob_table(const std::filesystem::path& path, const ProbabilityTable& table);
ProbabilityTable read_prob_table(const std::filesystem::path& path);

// CSV with header m_minus1,m0,value (xi,eta,value for the APG view), d^2 rows.
void write_quasi_csv(const std::filesystem::path& path, const QuasiDist& v);
void write_apg_quasi_csv(const std::filesystem::path& path, const ApgQuasiDist& v);
QuasiDist read_quasi_csv(const std::filesystem::path& path, PrimeDim dim);

// CSV with header alpha_index,j_index,lambda; d(d+1)*d^2 rows.
void write_incidence_csv(const std::filesystem::path& path, PrimeDim dim);

/// Shortest round-trip decimal form of a double (used for CSV cells).
std::string format_double(double x);

/// Writes text to a file, throwing IoError on any failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fgrt
