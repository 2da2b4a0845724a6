#include "wyur/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "wyur/error.hpp"

namespace wyur {

namespace {

std::string to_chars_string(double x, std::chars_format fmt, int precision) {
  char buf[64];
  auto res = precision < 0 ? std::to_chars(buf, buf + sizeof buf, x)
                           : std::to_chars(buf, buf + sizeof buf, x, fmt, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_double(double x) { return to_chars_string(x, std::chars_format::general, -1); }

std::string format_double(double x, int digits) {
  return to_chars_string(x, std::chars_format::general, digits);
}

double parse_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(token) + "'");
  }
  return value;
}

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty complex entry");
  if (token.back() != 'i') return {parse_double(token), 0.0};

  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size() - 1; k > 0; --k) {
    const char ch = token[k];
    if ((ch == '+' || ch == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  if (split == std::string_view::npos) {
    return {0.0, parse_double(body)};
  }
  const std::string_view re = token.substr(0, split);
  std::string_view im = body.substr(split);
  if (im == "+" || im == "-") {
    throw Error(ErrorCode::ParseError, "missing imaginary magnitude in '" + std::string(token) + "'");
  }
  return {parse_double(re), parse_double(im)};
}

std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    s += '-';
    s += format_double(-im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

ComplexMatrix read_matrix(std::istream& in) {
  long long rows = 0;
  long long cols = 0;
  if (!(in >> rows >> cols)) throw Error(ErrorCode::ParseError, "missing 'rows cols' header");
  if (rows <= 0 || cols <= 0) throw Error(ErrorCode::ParseError, "matrix dimensions must be positive");
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  std::string token;
  for (long long k = 0; k < rows * cols; ++k) {
    if (!(in >> token)) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(rows * cols) +
                                             " entries, got " + std::to_string(k));
    }
    entries.push_back(parse_complex(token));
  }
  return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries)};
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_matrix(in);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_matrix(out, m);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace wyur
