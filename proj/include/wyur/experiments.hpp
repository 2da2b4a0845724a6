#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wyur/bounds.hpp"

namespace wyur {

enum class Panel { A, B, C, D };

std::optional<Panel> parse_panel(std::string_view text);
char panel_letter(Panel panel);

enum class SweepParam { Theta, Q };

/// A one-parameter sweep over the worked qubit example.
///
/// Theta sweeps evaluate paper_state(θ) with fixed channels; q sweeps fix θ
/// and substitute q into any channel spec written with a literal "(q)"
/// argument, e.g. "phase_damping(q)".
struct SweepSpec {
  std::optional<Panel> panel;
  SweepParam param = SweepParam::Theta;
  std::vector<double> grid;
  double fixed_theta = 0.0;  // used when param == Q
  std::string channel_a;
  std::string channel_b;
  std::vector<std::string> bounds_requested;
  std::string output_path;

  /// Throws InvalidArgument / ParamOutOfRange on a malformed spec.
  void validate() const;
  /// True when the requested bounds are sum-form (all must agree).
  bool sum_form() const;
};

struct SweepRow {
  double param = 0.0;
  double uncertainty = 0.0;
  std::vector<double> values;  // one per SweepTable::columns entry
};

struct SweepTable {
  std::string param_name = "param";
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
  bool sum_form = false;

  double value(std::size_t row, std::string_view column) const;
};

inline constexpr int kDefaultResolution = 200;

/// Evenly spaced grid including both endpoints.
std::vector<double> linspace(double first, double last, int points);

SweepSpec panel_spec(Panel panel, int resolution = kDefaultResolution);

/// Worker count: `requested` if positive, otherwise WYUR_THREADS if set and
/// positive, otherwise hardware concurrency.
unsigned sweep_threads(int requested = 0);

/// Rows come back in grid order regardless of worker scheduling.
SweepTable run_sweep(const SweepSpec& spec, int threads = 0);
SweepTable run_panel(Panel panel, int resolution = kDefaultResolution, int threads = 0);

/// Resolves a channel spec (builtin name or channel file path).
KrausChannel resolve_channel(const std::string& spec);

/// Row-invariant failures (bound > uncertainty + tol); empty when clean.
std::vector<std::string> check_rows(const SweepTable& table, double tol = kBoundTol);

// CSV: `param,uncertainty,<bound ids…>`, LF endings, 12 significant digits,
// locale independent.
void write_csv(std::ostream& out, const SweepTable& table);
void emit_csv(const SweepTable& table, const std::string& path);
SweepTable read_csv(std::istream& in);
SweepTable load_csv(const std::string& path);

// ---------------------------------------------------------------------------
// Randomized verification campaigns

struct InstanceSeeds {
  std::uint64_t state = 0;
  std::uint64_t channel_a = 0;
  std::uint64_t channel_b = 0;
};

/// Seeds of trial `trial` in a campaign seeded with `seed`.
InstanceSeeds instance_seeds(std::uint64_t seed, std::size_t trial);

struct InvariantTally {
  std::string name;
  double tolerance = 0.0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Smallest margin seen; an instance violates when margin < -tolerance.
  double worst_margin = 0.0;
  std::optional<std::size_t> first_violation_trial;
};

struct VerificationSummary {
  std::size_t dim = 0;
  std::size_t n_kraus = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<InvariantTally> invariants;
  /// Instances where thm2 - zhou exceeds kStrictMargin.
  std::size_t strict_thm2_over_zhou = 0;
  std::size_t strict_thm1_over_zhou = 0;
  std::size_t strict_thm2_over_thm1 = 0;

  std::size_t total_violations() const;
  bool passed() const { return total_violations() == 0; }
  const InvariantTally& tally(std::string_view name) const;
};

inline constexpr double kStrictMargin = 1e-6;

/// Evaluates every bound on `trials` seeded random instances and tallies the
/// validity, ordering and saturation invariants. Requires dim in [2, 6],
/// n_kraus in [1, 4] and trials ≥ 1 (InvalidArgument otherwise).
VerificationSummary verify_random(std::size_t dim, std::size_t n_kraus, std::size_t trials, std::uint64_t seed);

void print_summary(std::ostream& out, const VerificationSummary& summary);

}  // namespace wyur
