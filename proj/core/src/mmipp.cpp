#include "maxplus/mmipp.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "maxplus/errors.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/text_format.hpp"

namespace maxplus {

namespace {

void require_start(const Matrix& a, const Vector& x0, const char* what) {
  require_square(a, what);
  if (x0.size() != a.rows()) {
    throw ShapeError(std::string(what) + ": start vector has " +
                     std::to_string(x0.size()) + " entries, matrix is " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.rows()));
  }
  if (is_eps_vector(x0))
    throw DomainError(std::string(what) + ": start vector is all epsilon");
}

}  // namespace

SimTrace simulate(const Matrix& a, const Vector& x0, std::size_t t_max,
                  Tolerance tol) {
  require_start(a, x0, "simulate");
  SimTrace trace;
  trace.lambda = max_cycle_mean(a);
  trace.states.reserve(t_max + 1);
  trace.states.push_back(x0);
  for (std::size_t r = 0; r < t_max; ++r) {
    trace.states.push_back(mul(a, trace.states.back()));
    if (!trace.steady_index &&
        approx_equal(trace.states[r + 1], scale(trace.lambda, trace.states[r]),
                     tol)) {
      trace.steady_index = r;
    }
  }
  return trace;
}

AttrVerdict in_attr(const Matrix& a, const Vector& x0, std::size_t k_max,
                    Tolerance tol) {
  require_start(a, x0, "in_attr");
  const Scalar lambda = max_cycle_mean(a);
  Vector x = x0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (!is_eps_vector(x) && is_eigenvector(a, x, lambda, tol))
      return AttrVerdict::Member;
    x = mul(a, x);
  }
  return AttrVerdict::NotWithinHorizon;
}

std::size_t default_horizon(std::size_t n) noexcept {
  return std::max<std::size_t>(2 * n * n, 64);
}

const char* to_string(AttrVerdict verdict) noexcept {
  return verdict == AttrVerdict::Member ? "member" : "not-within-horizon";
}

void write_trace(std::ostream& out, const SimTrace& trace) {
  out << "# lambda=" << format_scalar(trace.lambda) << " steady_index="
      << (trace.steady_index ? std::to_string(*trace.steady_index) : "none")
      << '\n';
  for (const Vector& state : trace.states) out << format_row(state) << '\n';
}

SimTrace read_trace(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty trace", 1, 1);
  const std::string lambda_key = "# lambda=";
  const std::string steady_key = " steady_index=";
  const auto steady_pos = header.find(steady_key);
  if (header.rfind(lambda_key, 0) != 0 || steady_pos == std::string::npos)
    throw ParseError("malformed trace header", 1, 1);

  SimTrace trace;
  const std::string lambda_text =
      header.substr(lambda_key.size(), steady_pos - lambda_key.size());
  trace.lambda = parse_vector(lambda_text).front();
  const std::string steady_text = header.substr(steady_pos + steady_key.size());
  if (steady_text != "none") {
    try {
      trace.steady_index = std::stoul(steady_text);
    } catch (const std::exception&) {
      throw ParseError("bad steady_index '" + steady_text + "'", 1,
                       steady_pos + steady_key.size() + 1);
    }
  }

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      trace.states.push_back(parse_vector(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
    if (trace.states.back().size() != trace.states.front().size())
      throw ParseError("state has inconsistent dimension", line_no, 1);
  }
  if (trace.states.empty()) throw ParseError("trace has no states", line_no, 1);
  return trace;
}

}  // namespace maxplus
