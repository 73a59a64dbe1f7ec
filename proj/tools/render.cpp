#include "render.hpp"

#include <sstream>

namespace maxplus::cli::render {

ordered_json scalar(Scalar a) {
  if (a.is_eps()) return "eps";
  return a.value() == 0.0 ? 0.0 : a.value();  // drop the sign of -0
}

Scalar read_scalar(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "eps")
      throw ParseError("expected number or \"eps\"", 1, 1);
    return Scalar::eps();
  }
  return j.get<double>();
}

ordered_json vector(const Vector& x) {
  ordered_json out = ordered_json::array();
  for (Scalar v : x) out.push_back(scalar(v));
  return out;
}

Vector read_vector(const ordered_json& j) {
  Vector out;
  for (const auto& v : j) out.push_back(read_scalar(v));
  return out;
}

ordered_json reals(const std::vector<double>& x) {
  ordered_json out = ordered_json::array();
  for (double v : x) out.push_back(scalar(v));
  return out;
}

namespace {

std::vector<double> read_reals(const ordered_json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(read_scalar(v).value());
  return out;
}

Vector row(const Matrix& m, std::size_t i) {
  Vector r;
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
  return r;
}

}  // namespace

ordered_json matrix(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector(row(m, i)));
  return out;
}

Matrix read_matrix(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix", 1, 1);
  Matrix m(j.size(), j.at(0).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Vector r = read_vector(j.at(i));
    if (r.size() != m.cols()) throw ShapeError("ragged matrix in JSON");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = r[c];
  }
  return m;
}

ordered_json nodes(const std::vector<std::size_t>& nodes) {
  ordered_json out = ordered_json::array();
  for (std::size_t k : nodes) out.push_back(k + 1);
  return out;
}

std::vector<std::size_t> read_nodes(const ordered_json& j) {
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>() - 1);
  return out;
}

ordered_json certificate(const PDiagCertificate& c) {
  ordered_json j;
  j["verdict"] = c.verdict;
  if (c.scaling) j["scaling"] = reals(*c.scaling);
  if (c.diagonal) j["diagonal"] = reals(*c.diagonal);
  if (c.witness) {
    j["witness"] = {{"kind", to_string(c.witness->kind)},
                    {"i", c.witness->i + 1},
                    {"j", c.witness->j + 1},
                    {"value", scalar(c.witness->value)}};
  }
  return j;
}

PDiagCertificate read_certificate(const ordered_json& j) {
  PDiagCertificate c;
  c.verdict = j.at("verdict").get<bool>();
  if (j.contains("scaling")) c.scaling = read_reals(j.at("scaling"));
  if (j.contains("diagonal")) c.diagonal = read_reals(j.at("diagonal"));
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    const std::string kind = w.at("kind").get<std::string>();
    WitnessKind k = WitnessKind::NonFinite;
    for (auto candidate : {WitnessKind::NonFinite, WitnessKind::K, WitnessKind::T})
      if (kind == to_string(candidate)) k = candidate;
    c.witness = PDiagWitness{k, w.at("i").get<std::size_t>() - 1,
                             w.at("j").get<std::size_t>() - 1,
                             read_scalar(w.at("value"))};
  }
  return c;
}

std::string certificate_text(const PDiagCertificate& c) {
  std::ostringstream out;
  out << "pseudo-diagonalizable: " << (c.verdict ? "yes" : "no") << "\n";
  if (c.scaling) out << "scaling: " << format_row({c.scaling->begin(), c.scaling->end()}) << "\n";
  if (c.diagonal) out << "diagonal: " << format_row({c.diagonal->begin(), c.diagonal->end()}) << "\n";
  if (c.witness) {
    out << "witness: " << to_string(c.witness->kind) << " at (" << c.witness->i + 1
        << ", " << c.witness->j + 1 << ")";
    if (c.witness->kind != WitnessKind::NonFinite)
      out << " = " << format_scalar(c.witness->value);
    out << "\n";
  }
  return out.str();
}

ordered_json spectral(const SpectralSummary& s) {
  ordered_json j;
  j["lambda"] = scalar(s.lambda);
  j["critical_nodes"] = nodes(s.critical_nodes);
  ordered_json classes = ordered_json::array();
  for (const auto& c : s.classes) classes.push_back(nodes(c));
  j["classes"] = classes;
  j["dimension"] = s.dimension();
  ordered_json basis = ordered_json::array();
  for (const auto& v : s.eigenbasis) basis.push_back(vector(v));
  j["eigenbasis"] = basis;
  return j;
}

SpectralSummary read_spectral(const ordered_json& j) {
  SpectralSummary s;
  s.lambda = read_scalar(j.at("lambda"));
  s.critical_nodes = read_nodes(j.at("critical_nodes"));
  for (const auto& c : j.at("classes")) s.classes.push_back(read_nodes(c));
  for (const auto& v : j.at("eigenbasis")) s.eigenbasis.push_back(read_vector(v));
  return s;
}

std::string nodes_text(const std::vector<std::size_t>& nodes) {
  std::string out;
  for (std::size_t k : nodes) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k + 1);
  }
  return out;
}

std::string spectral_text(const SpectralSummary& s) {
  std::ostringstream out;
  out << "critical nodes: " << nodes_text(s.critical_nodes) << "\n";
  out << "classes:";
  for (const auto& c : s.classes) out << " {" << nodes_text(c) << "}";
  out << "\n";
  out << "dimension: " << s.dimension() << "\n";
  out << "eigenbasis:\n";
  for (const auto& v : s.eigenbasis) out << "  " << format_row(v) << "\n";
  return out.str();
}

ordered_json classification(const PDiagableClassification& c) {
  ordered_json j;
  j["separable"] = c.separable;
  j["optimal_node"] = c.optimal_node;
  if (c.node) j["node"] = *c.node + 1;
  return j;
}

PDiagableClassification read_classification(const ordered_json& j) {
  PDiagableClassification c;
  c.separable = j.at("separable").get<bool>();
  c.optimal_node = j.at("optimal_node").get<bool>();
  if (j.contains("node")) c.node = j.at("node").get<std::size_t>() - 1;
  return c;
}

std::string classification_text(const PDiagableClassification& c) {
  std::ostringstream out;
  out << "separable: " << (c.separable ? "yes" : "no") << "\n";
  out << "optimal node: " << (c.optimal_node ? "yes" : "no");
  if (c.node) out << " (k = " << *c.node + 1 << ")";
  out << "\n";
  return out.str();
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += indent + format_row(row(m, i)) + "\n";
  return out;
}

}  // namespace maxplus::cli::render
