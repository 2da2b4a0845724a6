#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "wyur/bounds.hpp"
#include "wyur/channel_io.hpp"
#include "wyur/error.hpp"
#include "wyur/experiments.hpp"
#include "wyur/matrix_io.hpp"
#include "wyur/quantum.hpp"

namespace wyur::cli {

namespace {

/// An Error tagged with the command-line field that produced it.
struct FieldError {
  std::string field;
  Error error;
};

template <typename F>
auto with_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw FieldError{field, e};
  }
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

DensityState parse_state(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = colon == std::string::npos ? "" : spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? spec : spec.substr(colon + 1);
  if (kind == "bloch") {
    const auto parts = split_list(arg);
    if (parts.size() != 3) throw Error(ErrorCode::ParseError, "bloch state needs three components x,y,z");
    return state_from_bloch({parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])});
  }
  if (kind == "paper") return paper_state(parse_double(arg));
  if (kind == "random") {
    const double d = parse_double(arg);
    if (d < 2 || d != static_cast<double>(static_cast<std::size_t>(d))) {
      throw Error(ErrorCode::ParseError, "random state needs an integer dimension >= 2");
    }
    return random_state(static_cast<std::size_t>(d), seed);
  }
  const std::string path = kind == "file" ? arg : spec;
  return DensityState::from_matrix(load_matrix(path), path);
}

KrausChannel parse_channel(const std::string& spec, std::uint64_t seed) {
  if (spec.rfind("random:", 0) == 0) {
    const auto parts = split_list(spec.substr(7));
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "random channel needs 'random:d,n'");
    const double d = parse_double(parts[0]);
    const double n = parse_double(parts[1]);
    if (d < 2 || n < 1) throw Error(ErrorCode::ParseError, "random channel needs d >= 2 and n >= 1");
    return random_channel(static_cast<std::size_t>(d), static_cast<std::size_t>(n), seed);
  }
  return resolve_channel(spec);
}

std::vector<std::string> parse_bound_list(const std::string& text) {
  if (text == "all") return {kBoundIds.begin(), kBoundIds.end()};
  std::vector<std::string> ids = split_list(text);
  if (ids.empty()) throw Error(ErrorCode::InvalidArgument, "empty bound list");
  for (const std::string& id : ids) {
    if (!is_known_bound(id)) throw Error(ErrorCode::InvalidArgument, "unknown bound '" + id + "'");
  }
  return ids;
}

std::string permutation_text(const Permutation& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? " " : "") + std::to_string(p[k]);
  return s + "]";
}

std::string signs_text(const std::vector<int>& signs) {
  std::string s = "[";
  for (std::size_t k = 0; k < signs.size(); ++k) s += (k ? " " : "") + std::string(signs[k] > 0 ? "+" : "-");
  return s + "]";
}

void print_report_text(std::ostream& out, const BoundReport& r, const std::vector<std::string>& ids) {
  auto line = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << '\n';
  };
  auto complete = [](bool c) { return std::string(c ? "" : "  (incomplete Kraus list)"); };
  line("state", r.state_label);
  line("channel_a", r.channel_a_label + complete(r.channel_a_complete));
  line("channel_b", r.channel_b_label + complete(r.channel_b_complete));
  line("skew_a", format_double(r.skew_a, 12));
  line("skew_b", format_double(r.skew_b, 12));
  line("product_uncertainty", format_double(r.product_uncertainty, 12));
  line("sum_uncertainty", format_double(r.sum_uncertainty, 12));
  for (const std::string& id : ids) line(id, format_double(r.bound(id), 12));
  line("fu_perterm_pairing", permutation_text(r.fu_perterm.permutation) + " signs " + signs_text(r.fu_perterm.signs));
  line("fu_global_pairing", permutation_text(r.fu_global.permutation) + " signs " + signs_text(r.fu_global.signs));
  line("thm1_default", std::string(to_string(r.thm1_default)));
  line("thm3_pairing", std::string(to_string(r.thm3_pairing)));
}

void print_report_csv(std::ostream& out, const BoundReport& r, const std::vector<std::string>& ids) {
  out << "product_uncertainty,sum_uncertainty";
  for (const std::string& id : ids) out << ',' << id;
  out << '\n' << format_double(r.product_uncertainty, 12) << ',' << format_double(r.sum_uncertainty, 12);
  for (const std::string& id : ids) out << ',' << format_double(r.bound(id), 12);
  out << '\n';
}

/// Writes through `emit` either to `path` or to `out` when path is empty.
template <typename Emit>
void write_output(const std::string& path, std::ostream& out, Emit&& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FieldError{"--out", Error(ErrorCode::IoError, "cannot write '" + path + "'")};
  emit(file);
  file.flush();
  if (!file) throw FieldError{"--out", Error(ErrorCode::IoError, "write failed for '" + path + "'")};
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DimensionMismatch: return kDimensionMismatch;
    case ErrorCode::IoError: return kIoFailure;
    default: return kBadConfig;
  }
}

struct BoundsOptions {
  std::string state;
  std::string chan_a;
  std::string chan_b;
  std::string bounds = "all";
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
};

struct FigureOptions {
  std::string panel;
  int resolution = kDefaultResolution;
  std::string out;
  int threads = 0;
};

struct VerifyOptions {
  std::size_t dim = 2;
  std::size_t n_kraus = 2;
  long long trials = 1000;
  std::uint64_t seed = 1;
};

struct SweepOptions {
  std::string param = "theta";
  double from = 0.0;
  double to = 2.0 * std::numbers::pi;
  int points = kDefaultResolution;
  std::string grid;
  double theta = std::numbers::pi / 4.0;
  std::string chan_a = "phase_damping(0.5)";
  std::string chan_b = "bit_flip(0.5)";
  std::string bounds = "thm1_proof,thm2,zhou";
  std::string out;
  int threads = 0;
};

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  const DensityState state = with_field("--state", [&] { return parse_state(o.state, o.seed); });
  const KrausChannel a = with_field("--chan-a", [&] { return parse_channel(o.chan_a, o.seed + 1); });
  const KrausChannel b = with_field("--chan-b", [&] { return parse_channel(o.chan_b, o.seed + 2); });
  const std::vector<std::string> ids = with_field("--bounds", [&] { return parse_bound_list(o.bounds); });
  if (o.format != "text" && o.format != "csv") {
    throw FieldError{"--format", Error(ErrorCode::InvalidArgument, "expected 'text' or 'csv'")};
  }
  if (a.dim() != state.dim() || b.dim() != state.dim()) {
    const std::string field = a.dim() != state.dim() ? "--chan-a" : "--chan-b";
    throw FieldError{field, Error(ErrorCode::DimensionMismatch,
                                  "state dimension " + std::to_string(state.dim()) + ", channel dimension " +
                                      std::to_string(a.dim() != state.dim() ? a.dim() : b.dim()))};
  }
  const BoundReport report = with_field("--bounds", [&] { return evaluate_all(state, a, b); });
  write_output(o.out, out, [&](std::ostream& os) {
    if (o.format == "csv") {
      print_report_csv(os, report, ids);
    } else {
      print_report_text(os, report, ids);
    }
  });
  return kOk;
}

int cmd_figure(const FigureOptions& o, std::ostream& out) {
  const auto panel = parse_panel(o.panel);
  if (!panel) throw FieldError{"panel", Error(ErrorCode::InvalidArgument, "expected one of a, b, c, d")};
  if (o.resolution < 2) throw FieldError{"--resolution", Error(ErrorCode::InvalidArgument, "must be >= 2")};
  const SweepTable table = run_panel(*panel, o.resolution, o.threads);
  write_output(o.out, out, [&](std::ostream& os) { write_csv(os, table); });
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.trials < 1) throw FieldError{"--trials", Error(ErrorCode::InvalidArgument, "must be >= 1")};
  const VerificationSummary summary = with_field(
      "verify", [&] { return verify_random(o.dim, o.n_kraus, static_cast<std::size_t>(o.trials), o.seed); });
  print_summary(out, summary);
  return summary.passed() ? kOk : kViolations;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  SweepSpec spec;
  if (o.param == "theta") {
    spec.param = SweepParam::Theta;
  } else if (o.param == "q") {
    spec.param = SweepParam::Q;
  } else {
    throw FieldError{"--param", Error(ErrorCode::InvalidArgument, "expected 'theta' or 'q'")};
  }
  if (!o.grid.empty()) {
    for (const std::string& v : split_list(o.grid))
      spec.grid.push_back(with_field("--grid", [&] { return parse_double(v); }));
  } else {
    spec.grid = with_field("--points", [&] { return linspace(o.from, o.to, o.points); });
  }
  spec.fixed_theta = o.theta;
  spec.channel_a = o.chan_a;
  spec.channel_b = o.chan_b;
  spec.bounds_requested = with_field("--bounds", [&] { return parse_bound_list(o.bounds); });
  spec.output_path = o.out;
  with_field("sweep", [&] { spec.validate(); });
  const SweepTable table = with_field("sweep", [&] { return run_sweep(spec, o.threads); });
  write_output(o.out, out, [&](std::ostream& os) { write_csv(os, table); });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner-Yanase skew information uncertainty bounds for quantum channels", "wyur"};
  app.require_subcommand(1);

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate all bounds for one state and channel pair");
  bounds_cmd->add_option("--state", bounds.state, "bloch:x,y,z | paper:THETA | random:D | file:PATH | PATH")
      ->required();
  bounds_cmd->add_option("--chan-a", bounds.chan_a, "builtin name, random:D,N, or channel file")->required();
  bounds_cmd->add_option("--chan-b", bounds.chan_b, "builtin name, random:D,N, or channel file")->required();
  bounds_cmd->add_option("--bounds", bounds.bounds, "'all' or comma-separated bound ids")->capture_default_str();
  bounds_cmd->add_option("--format", bounds.format, "text | csv")->capture_default_str();
  bounds_cmd->add_option("--out", bounds.out, "output path (default stdout)");
  bounds_cmd->add_option("--seed", bounds.seed, "seed for random: specs")->capture_default_str();

  FigureOptions figure;
  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV data of one figure panel (a, b, c, d)");
  figure_cmd->add_option("panel", figure.panel, "a | b | c | d")->required();
  figure_cmd->add_option("--resolution", figure.resolution, "grid points")->capture_default_str();
  figure_cmd->add_option("--out", figure.out, "output path (default stdout)");
  figure_cmd->add_option("--threads", figure.threads, "worker threads (0 = WYUR_THREADS or auto)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized verification of every bound invariant");
  verify_cmd->add_option("--dim", verify.dim, "Hilbert space dimension, 2..6")->capture_default_str();
  verify_cmd->add_option("--n", verify.n_kraus, "Kraus operators per channel, 1..4")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "random instances")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "campaign seed")->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Custom one-parameter sweep over the worked qubit example");
  sweep_cmd->add_option("--param", sweep.param, "theta | q")->capture_default_str();
  sweep_cmd->add_option("--from", sweep.from, "first grid value")->capture_default_str();
  sweep_cmd->add_option("--to", sweep.to, "last grid value")->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points, "grid points")->capture_default_str();
  sweep_cmd->add_option("--grid", sweep.grid, "explicit comma-separated grid (overrides from/to/points)");
  sweep_cmd->add_option("--theta", sweep.theta, "fixed theta in radians for q sweeps")->capture_default_str();
  sweep_cmd->add_option("--chan-a", sweep.chan_a, "channel spec; '(q)' is replaced in q sweeps")
      ->capture_default_str();
  sweep_cmd->add_option("--chan-b", sweep.chan_b, "channel spec; '(q)' is replaced in q sweeps")
      ->capture_default_str();
  sweep_cmd->add_option("--bounds", sweep.bounds, "comma-separated bound ids of one form")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = WYUR_THREADS or auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (figure_cmd->parsed()) return cmd_figure(figure, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
  } catch (const FieldError& e) {
    err << "error: " << e.field << ": " << e.error.what() << '\n';
    return exit_code_for(e.error);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kBadConfig;
}

}  // namespace wyur::cli
