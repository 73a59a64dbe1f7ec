#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "maxplus/maxplus.hpp"

namespace maxplus::cli {

/// Everything `analyze` knows about one matrix.
struct AnalysisReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool finite = false;
  Scalar lambda;
  PDiagCertificate pdiag;
  /// Present for finite square input.
  std::optional<SpectralSummary> spectral;
  /// Present for pseudo-diagonalizable input with n >= 2.
  std::optional<PDiagableClassification> special;
  std::optional<StabilityReport> stability;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const Matrix& a, Tolerance tol);

/// JSON text, two-space indent, node indices 1-based, epsilon as "eps".
std::string to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

std::string to_text(const AnalysisReport& report);

}  // namespace maxplus::cli
