#pragma once

// JSON and plain-text renderings of library results shared by the
// subcommands. Node indices are shifted to 1-based on output.

#include <string>
#include <vector>

#include "json.hpp"
#include "maxplus/maxplus.hpp"

namespace maxplus::cli::render {

using nlohmann::ordered_json;

ordered_json scalar(Scalar a);
Scalar read_scalar(const ordered_json& j);

ordered_json vector(const Vector& x);
Vector read_vector(const ordered_json& j);
ordered_json reals(const std::vector<double>& x);

ordered_json matrix(const Matrix& m);
Matrix read_matrix(const ordered_json& j);

ordered_json nodes(const std::vector<std::size_t>& nodes);
std::vector<std::size_t> read_nodes(const ordered_json& j);

ordered_json certificate(const PDiagCertificate& c);
PDiagCertificate read_certificate(const ordered_json& j);
std::string certificate_text(const PDiagCertificate& c);

ordered_json spectral(const SpectralSummary& s);
SpectralSummary read_spectral(const ordered_json& j);
/// Critical nodes, classes, dimension and basis; lambda is left to the caller.
std::string spectral_text(const SpectralSummary& s);

ordered_json classification(const PDiagableClassification& c);
PDiagableClassification read_classification(const ordered_json& j);
std::string classification_text(const PDiagableClassification& c);

std::string nodes_text(const std::vector<std::size_t>& nodes);
std::string matrix_text(const Matrix& m, const std::string& indent);

}  // namespace maxplus::cli::render
