#include "wyur/channel_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "wyur/error.hpp"
#include "wyur/matrix_io.hpp"

namespace wyur {

KrausChannel read_channel(std::istream& in, std::string label) {
  long long dim = 0;
  long long count = 0;
  if (!(in >> dim >> count)) throw Error(ErrorCode::ParseError, "missing 'd n' channel header");
  if (dim <= 0 || count <= 0) throw Error(ErrorCode::ParseError, "channel header values must be positive");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    ComplexMatrix k = read_matrix(in);
    if (k.rows() != static_cast<std::size_t>(dim) || k.cols() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "Kraus operator " + std::to_string(i) + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus), std::move(label));
}

void write_channel(std::ostream& out, const KrausChannel& channel) {
  out << channel.dim() << ' ' << channel.size() << '\n';
  for (const ComplexMatrix& k : channel.kraus()) write_matrix(out, k);
}

KrausChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_channel(in, path);
}

void save_channel(const std::string& path, const KrausChannel& channel) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_channel(out, channel);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

std::optional<KrausChannel> builtin_channel(std::string_view name) {
  if (name == "rot_y_pi8") return rotation_unitaries().first;
  if (name == "rot_z_pi8") return rotation_unitaries().second;

  const auto open = name.find('(');
  if (open == std::string_view::npos) return std::nullopt;
  const std::string_view family = name.substr(0, open);
  if (family != "phase_damping" && family != "bit_flip") return std::nullopt;
  if (name.back() != ')') {
    throw Error(ErrorCode::ParseError, "unterminated argument list in '" + std::string(name) + "'");
  }
  const double q = parse_double(name.substr(open + 1, name.size() - open - 2));
  return family == "phase_damping" ? phase_damping(q) : bit_flip(q);
}

}  // namespace wyur
