#include "wyur/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "wyur/channel_io.hpp"
#include "wyur/error.hpp"
#include "wyur/matrix_io.hpp"

namespace wyur {

namespace {

std::string substitute_q(const std::string& spec, double q) {
  const std::string placeholder = "(q)";
  const auto pos = spec.find(placeholder);
  if (pos == std::string::npos) return spec;
  return spec.substr(0, pos) + "(" + format_double(q) + ")" + spec.substr(pos + placeholder.size());
}

SweepRow evaluate_row(const SweepSpec& spec, bool sum_form, double param) {
  const bool theta_sweep = spec.param == SweepParam::Theta;
  const DensityState state = paper_state(theta_sweep ? param : spec.fixed_theta);
  const KrausChannel a = resolve_channel(theta_sweep ? spec.channel_a : substitute_q(spec.channel_a, param));
  const KrausChannel b = resolve_channel(theta_sweep ? spec.channel_b : substitute_q(spec.channel_b, param));
  const BoundReport report = evaluate_all(state, a, b);

  SweepRow row;
  row.param = param;
  row.uncertainty = sum_form ? report.sum_uncertainty : report.product_uncertainty;
  row.values.reserve(spec.bounds_requested.size());
  for (const std::string& id : spec.bounds_requested) row.values.push_back(report.bound(id));
  return row;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::optional<Panel> parse_panel(std::string_view text) {
  if (text == "a") return Panel::A;
  if (text == "b") return Panel::B;
  if (text == "c") return Panel::C;
  if (text == "d") return Panel::D;
  return std::nullopt;
}

char panel_letter(Panel panel) { return static_cast<char>('a' + static_cast<int>(panel)); }

void SweepSpec::validate() const {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "sweep grid is empty");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) throw Error(ErrorCode::InvalidArgument, "sweep grid must be strictly increasing");
  }
  if (param == SweepParam::Q && (grid.front() < 0.0 || grid.back() >= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange, "q grid must lie in [0, 1)");
  }
  if (panel) {
    const bool wants_q = *panel == Panel::B;
    if (wants_q != (param == SweepParam::Q)) {
      throw Error(ErrorCode::InvalidArgument, std::string("panel ") + panel_letter(*panel) +
                                                  " sweeps " + (wants_q ? "q" : "theta"));
    }
  }
  if (bounds_requested.empty()) throw Error(ErrorCode::InvalidArgument, "no bounds requested");
  for (const std::string& id : bounds_requested) {
    if (!is_known_bound(id)) throw Error(ErrorCode::InvalidArgument, "unknown bound '" + id + "'");
  }
  const bool first_product = is_product_bound(bounds_requested.front());
  for (const std::string& id : bounds_requested) {
    if (is_product_bound(id) != first_product) {
      throw Error(ErrorCode::InvalidArgument, "a sweep cannot mix product-form and sum-form bounds");
    }
  }
}

bool SweepSpec::sum_form() const {
  return !bounds_requested.empty() && !is_product_bound(bounds_requested.front());
}

double SweepTable::value(std::size_t row, std::string_view column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) throw Error(ErrorCode::InvalidArgument, "no column '" + std::string(column) + "'");
  return rows.at(row).values[static_cast<std::size_t>(it - columns.begin())];
}

std::vector<double> linspace(double first, double last, int points) {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (last - first) / (points - 1);
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = first + step * k;
  out.back() = last;
  return out;
}

SweepSpec panel_spec(Panel panel, int resolution) {
  SweepSpec spec;
  spec.panel = panel;
  const std::vector<std::string> product_columns = {"thm1_proof", "thm2", "zhou"};
  switch (panel) {
    case Panel::A:
      spec.param = SweepParam::Theta;
      spec.grid = linspace(0.0, 2.0 * std::numbers::pi, resolution);
      spec.channel_a = "phase_damping(0.5)";
      spec.channel_b = "bit_flip(0.5)";
      spec.bounds_requested = product_columns;
      break;
    case Panel::B:
      spec.param = SweepParam::Q;
      spec.grid = linspace(0.0, 0.99, resolution);
      spec.fixed_theta = std::numbers::pi / 4.0;
      spec.channel_a = "phase_damping(q)";
      spec.channel_b = "bit_flip(q)";
      spec.bounds_requested = product_columns;
      break;
    case Panel::C:
      spec.param = SweepParam::Theta;
      spec.grid = linspace(0.0, 2.0 * std::numbers::pi, resolution);
      spec.channel_a = "rot_y_pi8";
      spec.channel_b = "rot_z_pi8";
      spec.bounds_requested = product_columns;
      break;
    case Panel::D:
      spec.param = SweepParam::Theta;
      spec.grid = linspace(0.0, 2.0 * std::numbers::pi, resolution);
      spec.channel_a = "rot_y_pi8";
      spec.channel_b = "rot_z_pi8";
      spec.bounds_requested = {"thm3_desc", "thm3_id", "fu_perterm", "fu_global"};
      break;
  }
  return spec;
}

unsigned sweep_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("WYUR_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepTable run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const bool sum_form = spec.sum_form();

  SweepTable table;
  table.columns = spec.bounds_requested;
  table.sum_form = sum_form;
  table.rows.resize(spec.grid.size());

  const unsigned workers = std::min<unsigned>(sweep_threads(threads), static_cast<unsigned>(spec.grid.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < spec.grid.size(); k = next++) {
      try {
        table.rows[k] = evaluate_row(spec, sum_form, spec.grid[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

SweepTable run_panel(Panel panel, int resolution, int threads) {
  return run_sweep(panel_spec(panel, resolution), threads);
}

KrausChannel resolve_channel(const std::string& spec) {
  if (auto builtin = builtin_channel(spec)) return *std::move(builtin);
  std::ifstream probe(spec);
  if (!probe) {
    throw Error(ErrorCode::ParseError, "'" + spec + "' is neither a builtin channel nor a readable file");
  }
  return read_channel(probe, spec);
}

std::vector<std::string> check_rows(const SweepTable& table, double tol) {
  std::vector<std::string> out;
  for (const SweepRow& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (row.values[c] > row.uncertainty + tol) {
        std::ostringstream os;
        os << "param " << row.param << ": " << table.columns[c] << " = " << row.values[c] << " > uncertainty "
           << row.uncertainty;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << table.param_name << ",uncertainty";
  for (const std::string& c : table.columns) out << ',' << c;
  out << '\n';
  for (const SweepRow& row : table.rows) {
    out << format_double(row.param, 12) << ',' << format_double(row.uncertainty, 12);
    for (double v : row.values) out << ',' << format_double(v, 12);
    out << '\n';
  }
}

void emit_csv(const SweepTable& table, const std::string& path) {
  if (table.rows.empty()) throw Error(ErrorCode::InvalidArgument, "refusing to write an empty sweep");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_csv(out, table);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

SweepTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty CSV");
  const std::vector<std::string> header = split(line, ',');
  if (header.size() < 2 || header[1] != "uncertainty") {
    throw Error(ErrorCode::ParseError, "CSV header must start with 'param,uncertainty'");
  }
  SweepTable table;
  table.param_name = header[0];
  table.columns.assign(header.begin() + 2, header.end());
  table.sum_form = !table.columns.empty() && !is_product_bound(table.columns.front());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != header.size()) throw Error(ErrorCode::ParseError, "CSV row has wrong field count");
    SweepRow row;
    row.param = parse_double(fields[0]);
    row.uncertainty = parse_double(fields[1]);
    for (std::size_t k = 2; k < fields.size(); ++k) row.values.push_back(parse_double(fields[k]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

SweepTable load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_csv(in);
}

InstanceSeeds instance_seeds(std::uint64_t seed, std::size_t trial) {
  const std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
  return {splitmix64(base + 1), splitmix64(base + 2), splitmix64(base + 3)};
}

std::size_t VerificationSummary::total_violations() const {
  std::size_t total = 0;
  for (const InvariantTally& t : invariants) total += t.violations;
  return total;
}

const InvariantTally& VerificationSummary::tally(std::string_view name) const {
  for (const InvariantTally& t : invariants)
    if (t.name == name) return t;
  throw Error(ErrorCode::InvalidArgument, "no invariant named '" + std::string(name) + "'");
}

VerificationSummary verify_random(std::size_t dim, std::size_t n_kraus, std::size_t trials, std::uint64_t seed) {
  if (dim < 2 || dim > 6) throw Error(ErrorCode::InvalidArgument, "dim must be in [2, 6]");
  if (n_kraus < 1 || n_kraus > 4) throw Error(ErrorCode::InvalidArgument, "n_kraus must be in [1, 4]");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");

  VerificationSummary summary;
  summary.dim = dim;
  summary.n_kraus = n_kraus;
  summary.trials = trials;
  summary.seed = seed;

  std::vector<InvariantTally>& tallies = summary.invariants;
  auto index_of = [&](const std::string& name, double tol) {
    for (std::size_t k = 0; k < tallies.size(); ++k)
      if (tallies[k].name == name) return k;
    tallies.push_back({name, tol, 0, 0, std::numeric_limits<double>::infinity(), std::nullopt});
    return tallies.size() - 1;
  };
  auto record = [&](const std::string& name, double tol, double margin, std::size_t trial) {
    InvariantTally& t = tallies[index_of(name, tol)];
    ++t.checked;
    t.worst_margin = std::min(t.worst_margin, margin);
    if (margin < -tol) {
      ++t.violations;
      if (!t.first_violation_trial) t.first_violation_trial = trial;
    }
  };

  const bool qubit = dim == 2;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const InstanceSeeds seeds = instance_seeds(seed, trial);
    const DensityState state = random_state(dim, seeds.state);
    const KrausChannel a = random_channel(dim, n_kraus, seeds.channel_a);
    const KrausChannel b = random_channel(dim, n_kraus, seeds.channel_b);
    const BoundReport r = evaluate_all(state, a, b);

    for (const std::string_view id : kBoundIds) {
      const double limit = is_product_bound(id) ? r.product_uncertainty : r.sum_uncertainty;
      record("valid:" + std::string(id), kBoundTol, limit - r.bound(id), trial);
    }
    const TildeSet ta = tildes(state, a);
    const TildeSet tb = tildes(state, b);
    for (const PermStrategy strategy : {PermStrategy::Identity, PermStrategy::Descending}) {
      const double matched = thm3_bound(ta, tb, Thm3Pairing::MatchedPairs, strategy);
      record("valid:thm3_matched_" + std::string(to_string(strategy)), kBoundTol, r.sum_uncertainty - matched,
             trial);
    }
    if (qubit) {
      for (const Thm3Pairing pairing : {Thm3Pairing::DoubleSumNormalized, Thm3Pairing::MatchedPairs}) {
        const double exhaustive = thm3_bound(ta, tb, pairing, PermStrategy::ExhaustiveSmall);
        record("valid:thm3_exhaustive_" + std::string(to_string(pairing)), kBoundTol,
               r.sum_uncertainty - exhaustive, trial);
      }
      const double exhaustive = thm3_bound(ta, tb, Thm3Pairing::DoubleSumNormalized, PermStrategy::ExhaustiveSmall);
      record("argmax:thm3_identity", kBoundTol, -std::abs(exhaustive - r.bound("thm3_id")), trial);
    }

    const double zhou = r.bound("zhou");
    const double thm1 = r.bound("thm1_proof");
    const double thm2 = r.bound("thm2");
    record("chain:thm2>=thm1_proof", kChainSlack, thm2 - thm1, trial);
    record("chain:thm1_proof>=zhou", kChainSlack, thm1 - zhou, trial);
    record("order:fu_perterm>=fu_global", kChainSlack, r.bound("fu_perterm") - r.bound("fu_global"), trial);
    record("order:thm3_id>=thm3_desc", kChainSlack, r.bound("thm3_id") - r.bound("thm3_desc"), trial);
    record("saturation:thm3_id==sum", kBoundTol, -std::abs(r.bound("thm3_id") - r.sum_uncertainty), trial);

    if (thm2 - zhou > kStrictMargin) ++summary.strict_thm2_over_zhou;
    if (thm1 - zhou > kStrictMargin) ++summary.strict_thm1_over_zhou;
    if (thm2 - thm1 > kStrictMargin) ++summary.strict_thm2_over_thm1;
  }
  return summary;
}

void print_summary(std::ostream& out, const VerificationSummary& summary) {
  out << "verify dim=" << summary.dim << " n=" << summary.n_kraus << " trials=" << summary.trials
      << " seed=" << summary.seed << '\n';
  std::size_t width = 0;
  for (const InvariantTally& t : summary.invariants) width = std::max(width, t.name.size());
  for (const InvariantTally& t : summary.invariants) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << t.name << "  "
        << (t.violations == 0 ? "PASS" : "FAIL") << "  checked=" << t.checked << " violations=" << t.violations
        << " worst_margin=" << format_double(t.worst_margin, 6);
    if (t.first_violation_trial) {
      const InstanceSeeds s = instance_seeds(summary.seed, *t.first_violation_trial);
      out << " first_failure=trial " << *t.first_violation_trial << " (state_seed=" << s.state
          << " chan_a_seed=" << s.channel_a << " chan_b_seed=" << s.channel_b << ")";
    }
    out << '\n';
  }
  out << "  strict thm2>zhou: " << summary.strict_thm2_over_zhou << '/' << summary.trials
      << "  thm1>zhou: " << summary.strict_thm1_over_zhou << '/' << summary.trials
      << "  thm2>thm1: " << summary.strict_thm2_over_thm1 << '/' << summary.trials << '\n';
  out << (summary.passed() ? "PASS" : "FAIL") << ": " << summary.total_violations() << " violation(s)\n";
}

}  // namespace wyur
