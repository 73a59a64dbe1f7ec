#include "maxplus/text_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

Scalar parse_token(std::string_view token, std::size_t line,
                   std::size_t column) {
  if (token == "eps" || token == "-inf") return Scalar::eps();
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || digits.empty() ||
      !std::isfinite(value)) {
    throw ParseError("unparseable entry '" + std::string(token) + "'", line,
                     column);
  }
  return Scalar(value);
}

// Splits one line into entries; column numbers are 1-based.
Vector parse_line(std::string_view text, std::size_t line) {
  Vector row;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    row.push_back(parse_token(text.substr(start, pos - start), line, start + 1));
  }
  return row;
}

bool is_blank_or_comment(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos == text.size() || text[pos] == '#';
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::vector<Vector> rows;
  std::size_t line_no = 0;
  std::size_t first_line = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (is_blank_or_comment(line)) continue;
    Vector row = parse_line(line, line_no);
    if (rows.empty()) {
      first_line = line_no;
    } else if (row.size() != rows.front().size()) {
      throw ParseError("ragged row " + std::to_string(rows.size() + 1) + ": " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()) + " (from line " +
                           std::to_string(first_line) + ")",
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix input", line_no + 1, 1);

  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix read_matrix(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  return read_matrix(in);
}

Vector parse_vector(std::string_view text) {
  Vector v = parse_line(text, 1);
  if (v.empty()) throw ParseError("empty vector", 1, 1);
  return v;
}

std::string format_scalar(Scalar a) {
  if (a.is_eps()) return "eps";
  double value = a.value();
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_row(const Vector& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out += ' ';
    out += format_scalar(row[j]);
  }
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace maxplus
