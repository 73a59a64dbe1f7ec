#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "maxplus/maxplus.hpp"
#include "render.hpp"
#include "report.hpp"

namespace maxplus::cli {
namespace {

using render::ordered_json;

struct Options {
  double tol = 1e-9;
  bool json = false;
  std::string path;
  int k = 2;
  std::size_t steps = 10;
  std::string x0;
  std::optional<std::size_t> horizon;
  std::string trace_path;
  std::string counterexample;
  bool normalize = false;
};

Matrix load(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return read_matrix_file(path);
}

void emit(std::ostream& out, const Options& o, const ordered_json& j,
          const std::string& text) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

bool is_pseudo_diagonal(const Matrix& a) {
  if (!a.is_square() || !a.is_finite()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != Scalar(0.0)) return false;
  return true;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const AnalysisReport r = analyze(load(o.path), Tolerance{o.tol});
  out << (o.json ? to_json(r) : to_text(r));
  return kOk;
}

int cmd_eig(const Options& o, std::ostream& out) {
  const Tolerance tol{o.tol};
  const Matrix a = load(o.path);
  require_square(a, "eig");
  std::string method = "general";
  SpectralSummary s;
  if (a.rows() >= 2 && check_pdiag(a, tol).verdict) {
    method = "pseudo-diagonalizable";
    s = pdiagable_eig(a, tol);
  } else {
    s = eigenbasis(a, tol);
  }
  ordered_json j;
  j["method"] = method;
  j.update(render::spectral(s));
  emit(out, o, j,
       "method: " + method + "\nlambda: " + format_scalar(s.lambda) + "\n" +
           render::spectral_text(s));
  return kOk;
}

int cmd_pdiag(const Options& o, std::ostream& out) {
  const PDiagCertificate c = diagonalize(load(o.path), Tolerance{o.tol});
  emit(out, o, render::certificate(c), render::certificate_text(c));
  return kOk;
}

int cmd_power(const Options& o, std::ostream& out) {
  const Matrix a = load(o.path);
  const Matrix iterated = power(a, o.k);
  ordered_json j;
  j["k"] = o.k;
  j["power"] = render::matrix(iterated);
  std::string text = "k: " + std::to_string(o.k) + "\npower:\n" +
                     render::matrix_text(iterated, "  ");
  if (is_pseudo_diagonal(a) && a.rows() >= 2 && o.k >= 2) {
    const std::vector<double> d = a.diagonal();
    const Matrix closed = pdiag_power(d, o.k);
    const bool match = approx_equal(closed, iterated, Tolerance{o.tol});
    j["closed_form"] = render::matrix(closed);
    j["match"] = match;
    text += "closed form:\n" + render::matrix_text(closed, "  ");
    text += std::string("match: ") + (match ? "true" : "false") + "\n";
  }
  emit(out, o, j, text);
  return kOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Tolerance tol{o.tol};
  const Matrix a = load(o.path);
  ordered_json j;
  std::string text;
  if (!o.normalize) {
    const Matrix g = transitive_closure(a);
    j["closure"] = render::matrix(g);
    text = "closure:\n" + render::matrix_text(g, "  ");
  } else {
    const Matrix g = transitive_closure(normalize(a));
    j["lambda"] = render::scalar(max_cycle_mean(a));
    j["closure"] = render::matrix(g);
    text = "lambda: " + format_scalar(max_cycle_mean(a)) + "\nclosure:\n" +
           render::matrix_text(g, "  ");
    if (a.rows() >= 2 && check_pdiag(a, tol).verdict) {
      const Matrix shortcut = pdiagable_gamma_lambda(a, tol);
      const bool match = approx_equal(shortcut, g, tol);
      j["shortcut"] = render::matrix(shortcut);
      j["match"] = match;
      text += "shortcut:\n" + render::matrix_text(shortcut, "  ");
      text += std::string("match: ") + (match ? "true" : "false") + "\n";
    }
  }
  emit(out, o, j, text);
  return kOk;
}

std::string witness_text(const RootWitness& w) {
  return "(" + std::to_string(w.i + 1) + ", " + std::to_string(w.j + 1) + ", " +
         std::to_string(w.t + 1) + "): " + format_scalar(w.lhs) + " < " +
         format_scalar(w.rhs);
}

ordered_json witness_json(const RootWitness& w) {
  return {{"i", w.i + 1}, {"j", w.j + 1}, {"t", w.t + 1},
          {"lhs", render::scalar(w.lhs)}, {"rhs", render::scalar(w.rhs)}};
}

int cmd_counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<double> a;
  for (Scalar v : parse_vector(o.counterexample)) {
    if (v.is_eps()) throw DomainError("counterexample diagonal must be finite");
    a.push_back(v.value());
  }
  const auto c = root_counterexample(a, o.k);
  if (!c) {
    err << "error: no index meets the counterexample hypothesis\n";
    return kPrecondition;
  }
  const Matrix root = Matrix::pdiag(a);
  const bool reproduces = approx_equal(power(root, o.k), c->power, Tolerance{o.tol});
  ordered_json j;
  j["k"] = o.k;
  j["index"] = c->index + 1;
  j["power"] = render::matrix(c->power);
  j["condition"] = false;
  j["witness"] = witness_json(*c->report.witness);
  j["root"] = render::matrix(root);
  j["root_reproduces"] = reproduces;
  std::string text = "k: " + std::to_string(o.k) +
                     "\nindex: " + std::to_string(c->index + 1) + "\npower:\n" +
                     render::matrix_text(c->power, "  ") +
                     "root condition: fails at " + witness_text(*c->report.witness) +
                     "\nroot:\n" + render::matrix_text(root, "  ") +
                     "root reproduces power: " + (reproduces ? "true" : "false") + "\n";
  emit(out, o, j, text);
  return kOk;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.counterexample.empty()) return cmd_counterexample(o, out, err);
  if (o.path.empty()) throw CLI::RequiredError("matrix file or --counterexample");
  const Tolerance tol{o.tol};
  const Matrix a = load(o.path);
  const RootConditionReport report = root_condition(a, tol);
  ordered_json j;
  j["k"] = o.k;
  j["condition"] = report.holds;
  if (!report.holds) {
    j["witness"] = witness_json(*report.witness);
    emit(out, o, j,
         "k: " + std::to_string(o.k) + "\nroot condition: fails at " +
             witness_text(*report.witness) + "\n");
    err << "error: root condition fails; no root constructed\n";
    return kPrecondition;
  }
  const Matrix root = kth_root(a, o.k, tol);
  const bool verified = approx_equal(power(root, o.k), a, tol);
  j["root"] = render::matrix(root);
  j["verified"] = verified;
  emit(out, o, j,
       "k: " + std::to_string(o.k) + "\nroot condition: holds\nroot:\n" +
           render::matrix_text(root, "  ") + "verified: " +
           (verified ? "true" : "false") + "\n");
  if (!verified) throw InvariantError("root power does not reproduce the input");
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Tolerance tol{o.tol};
  const Matrix a = load(o.path);
  const Vector x0 = o.x0.empty() ? Vector(a.rows(), Scalar(0.0)) : parse_vector(o.x0);
  const SimTrace t = simulate(a, x0, o.steps, tol);
  const std::size_t horizon = o.horizon.value_or(default_horizon(a.rows()));
  const AttrVerdict attr = in_attr(a, x0, horizon, tol);
  if (!o.trace_path.empty()) {
    std::ofstream file(o.trace_path);
    if (!file) throw ParseError("cannot write '" + o.trace_path + "'", 0, 0);
    write_trace(file, t);
  }
  ordered_json j;
  j["lambda"] = render::scalar(t.lambda);
  j["steps"] = o.steps;
  j["steady_index"] = t.steady_index ? ordered_json(*t.steady_index) : ordered_json();
  j["attr"] = to_string(attr);
  j["horizon"] = horizon;
  ordered_json states = ordered_json::array();
  for (const auto& x : t.states) states.push_back(render::vector(x));
  j["states"] = states;

  std::ostringstream text;
  text << "lambda: " << format_scalar(t.lambda) << "\n";
  text << "steps: " << o.steps << "\n";
  text << "steady index: "
       << (t.steady_index ? std::to_string(*t.steady_index) : std::string("none")) << "\n";
  text << "attr: " << to_string(attr) << " (horizon " << horizon << ")\n";
  text << "states:\n";
  for (std::size_t r = 0; r < t.states.size(); ++r)
    text << "  " << r << ": " << format_row(t.states[r]) << "\n";
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Tolerance tol{o.tol};
  const Matrix a = load(o.path);
  const OptimalNodeResult nodes = optimal_nodes(a, tol);
  const auto factor = separable_factor(a, tol);
  ordered_json j;
  j["optimal_nodes"] = render::nodes(nodes.nodes);
  j["separable"] = factor.has_value();
  std::string text = "optimal nodes: " +
                     (nodes.is_optimal_node() ? render::nodes_text(nodes.nodes)
                                              : std::string("none")) +
                     "\nseparable: " + (factor ? "yes" : "no") + "\n";
  if (factor) {
    j["u"] = render::reals(factor->u);
    j["v"] = render::reals(factor->v);
    text += "u: " + format_row({factor->u.begin(), factor->u.end()}) + "\n";
    text += "v: " + format_row({factor->v.begin(), factor->v.end()}) + "\n";
  }
  if (a.rows() >= 2 && check_pdiag(a, tol).verdict) {
    const PDiagableClassification c = classify_pdiagable_special(a, tol);
    j["pseudo_diagonalizable"] = render::classification(c);
    text += "pseudo-diagonalizable shortcut:\n";
    std::istringstream lines(render::classification_text(c));
    for (std::string line; std::getline(lines, line);) text += "  " + line + "\n";
  }
  emit(out, o, j, text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app("Max-plus matrix analysis", "maxplus");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--tol", o.tol, "Absolute equality tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto file_arg = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("matrix", o.path, "Matrix file, or - for stdin")
                    ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
    if (required) opt->required();
    return sub;
  };
  CLI::App* analyze_cmd = file_arg(app.add_subcommand("analyze", "Full report"));
  CLI::App* eig_cmd = file_arg(app.add_subcommand("eig", "Eigenvalue and eigenbasis"));
  CLI::App* pdiag_cmd =
      file_arg(app.add_subcommand("pdiag", "Pseudo-diagonalizability certificate"));
  CLI::App* power_cmd = file_arg(app.add_subcommand("power", "Matrix power"));
  power_cmd->add_option("--k", o.k, "Exponent")->check(CLI::NonNegativeNumber);
  CLI::App* closure_cmd = file_arg(app.add_subcommand("closure", "Transitive closure"));
  closure_cmd->add_flag("--normalize", o.normalize, "Close A_lambda instead of A");
  CLI::App* roots_cmd = file_arg(app.add_subcommand("roots", "k-th root"), false);
  roots_cmd->add_option("--k", o.k, "Root order")->check(CLI::PositiveNumber);
  roots_cmd->add_option("--counterexample", o.counterexample,
                        "Diagonal 0 <= a_1 <= ... <= a_n of a pseudo-diagonal root");
  CLI::App* simulate_cmd = file_arg(app.add_subcommand("simulate", "Orbit of x0"));
  simulate_cmd->add_option("--steps", o.steps, "Number of steps")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--x0", o.x0, "Start vector (default all zeros)");
  simulate_cmd->add_option("--horizon", o.horizon, "Horizon for the attr check");
  simulate_cmd->add_option("--trace", o.trace_path, "Write the trace to this file");
  CLI::App* classify_cmd =
      file_arg(app.add_subcommand("classify", "Optimal-node and separable tests"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (eig_cmd->parsed()) return cmd_eig(o, out);
    if (pdiag_cmd->parsed()) return cmd_pdiag(o, out);
    if (power_cmd->parsed()) return cmd_power(o, out);
    if (closure_cmd->parsed()) return cmd_closure(o, out);
    if (roots_cmd->parsed()) return cmd_roots(o, out, err);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace maxplus::cli
