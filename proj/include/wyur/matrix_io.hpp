#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wyur/matrix.hpp"

namespace wyur {

// Text format:
//   rows cols
//   a+bi a-bi ...   (one line per row, `cols` entries each)
// Entries are decimal "a+bi" / "a-bi" with no inner spaces; a bare real "a"
// is also accepted.

Complex parse_complex(std::string_view token);
std::string format_complex(Complex z);

/// Shortest round-trip decimal for a double, locale independent.
std::string format_double(double x);
/// Decimal with at most `digits` significant digits, locale independent.
std::string format_double(double x, int digits);
double parse_double(std::string_view token);

ComplexMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace wyur
