#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "wyur/quantum.hpp"

namespace wyur {

// Channel text format: a "d n" header followed by n matrices in the matrix
// text format (each with its own "d d" header).

KrausChannel read_channel(std::istream& in, std::string label = {});
void write_channel(std::ostream& out, const KrausChannel& channel);

KrausChannel load_channel(const std::string& path);
void save_channel(const std::string& path, const KrausChannel& channel);

/// Builtin channels by name: "phase_damping(q)", "bit_flip(q)", "rot_y_pi8",
/// "rot_z_pi8". Returns nullopt if `name` does not look like a builtin;
/// throws ParseError / ParamOutOfRange for a builtin with bad arguments.
std::optional<KrausChannel> builtin_channel(std::string_view name);

}  // namespace wyur
