#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Matrix text format: one row per line, entries separated by whitespace.
/// Finite entries are decimal literals; epsilon is `eps` or `-inf` on input
/// and always `eps` on output. Blank lines and lines starting with `#` are
/// ignored.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// Parses a whitespace-separated list of entries as a column vector.
Vector parse_vector(std::string_view text);

/// Shortest decimal that round-trips through strtod; `eps` for epsilon.
std::string format_scalar(Scalar a);
std::string format_row(const Vector& row);
std::string format_matrix(const Matrix& m);

}  // namespace maxplus
