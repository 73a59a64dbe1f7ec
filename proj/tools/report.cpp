#include "report.hpp"

#include <sstream>

#include "json.hpp"
#include "render.hpp"

namespace maxplus::cli {

AnalysisReport analyze(const Matrix& a, Tolerance tol) {
  require_square(a, "analyze");
  AnalysisReport r;
  r.rows = a.rows();
  r.cols = a.cols();
  r.finite = a.is_finite();
  r.lambda = max_cycle_mean(a);
  r.pdiag = diagonalize(a, tol);
  if (r.finite) r.spectral = eigenbasis(a, tol);
  if (r.pdiag.verdict && a.rows() >= 2) {
    r.special = classify_pdiagable_special(a, tol);
    r.stability = pdiag_stability(*r.pdiag.diagonal);
  }
  return r;
}

using nlohmann::ordered_json;

std::string to_json(const AnalysisReport& r) {
  ordered_json j;
  j["shape"] = {r.rows, r.cols};
  j["finite"] = r.finite;
  j["lambda"] = render::scalar(r.lambda);
  j["pdiag"] = render::certificate(r.pdiag);
  if (r.spectral) j["spectral"] = render::spectral(*r.spectral);
  if (r.special) j["special"] = render::classification(*r.special);
  if (r.stability) {
    j["stability"] = {{"kind", to_string(r.stability->kind)},
                      {"attr", r.stability->attr_description}};
  }
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  AnalysisReport r;
  r.rows = j.at("shape").at(0).get<std::size_t>();
  r.cols = j.at("shape").at(1).get<std::size_t>();
  r.finite = j.at("finite").get<bool>();
  r.lambda = render::read_scalar(j.at("lambda"));
  r.pdiag = render::read_certificate(j.at("pdiag"));
  if (j.contains("spectral")) r.spectral = render::read_spectral(j.at("spectral"));
  if (j.contains("special"))
    r.special = render::read_classification(j.at("special"));
  if (j.contains("stability")) {
    const auto& s = j.at("stability");
    const std::string kind = s.at("kind").get<std::string>();
    StabilityKind k = StabilityKind::Other;
    for (auto candidate : {StabilityKind::StronglyStable,
                           StabilityKind::WeaklyStable, StabilityKind::Other})
      if (kind == to_string(candidate)) k = candidate;
    r.stability = StabilityReport{k, s.at("attr").get<std::string>()};
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "shape: " << r.rows << "x" << r.cols << "\n";
  out << "finite: " << (r.finite ? "yes" : "no") << "\n";
  out << "lambda: " << format_scalar(r.lambda) << "\n";
  out << render::certificate_text(r.pdiag);
  if (r.spectral) out << render::spectral_text(*r.spectral);
  if (r.special) out << render::classification_text(*r.special);
  if (r.stability) {
    out << "stability: " << to_string(r.stability->kind);
    if (!r.stability->attr_description.empty())
      out << " (attr = " << r.stability->attr_description << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace maxplus::cli
