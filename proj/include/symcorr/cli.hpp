#pragma once

// Front-end logic behind the `symcorr` executable: state construction from
// command-line parameters, measure evaluation, CSV sweeps and reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symcorr/qstate.hpp"
#include "symcorr/rotation.hpp"
#include "symcorr/states.hpp"

namespace symcorr::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Largest n for the discord measures in symmetric mode. The global-discord
/// grid search costs O(4^n) per evaluation.
inline constexpr int kDiscordQubitCap = 8;

/// Output file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { thermo, ghz_ad, ghz_pd };
enum class Measure { genuine_discord, genuine_classical, global_discord, svetlichny, mutual_info };

Family parse_family(const std::string& s);
Measure parse_measure(const std::string& s);
std::string to_string(Family f);
std::string to_string(Measure m);

/// Name of the parameter a sweep varies: p0, lambda or gamma.
std::string swept_parameter(Family f);

struct StateParams {
  Family family = Family::thermo;
  int n = 3;
  double p0 = 0.5;
  double alpha1 = kInvSqrt2;
  double lambda = 0.0;
  double gamma = 0.0;
  AlphaPolicy policy = AlphaPolicy::lenient;
};

DensityMatrix build_state(const StateParams& p);

struct EvalOptions {
  DiscordMode mode = DiscordMode::symmetric;
  std::uint64_t seed = 20150601;
  /// Size cap for general mode (brute-force searches).
  int oracle_max_qubits = 4;
};

struct PointResult {
  std::vector<double> values;
  /// Serialized JSON object with the optimal angles of each measure.
  std::string angles_json;
};

/// Evaluates the measures in order. Throws GuardError when a measure is
/// refused for the state size.
PointResult evaluate(const StateParams& p, const std::vector<Measure>& measures, const EvalOptions& options);

struct SweepSpec {
  StateParams base;
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
  std::vector<Measure> measures;

  /// Throws ArgumentError unless steps >= 2, the range lies in [0, 1] and at
  /// least one measure is requested.
  void validate() const;
  double value_at(int i) const;
};

/// CSV text of a sweep: header row, then one row per point, 12 significant
/// digits, UNIX newlines.
struct SweepOutput {
  std::string csv;
  std::string metadata_json;
};

SweepOutput compute_sweep(const SweepSpec& spec, const EvalOptions& options);

/// Writes `out_path` and `out_path + ".meta.json"`; throws IoError.
void run_sweep(const SweepSpec& spec, const EvalOptions& options, const std::string& out_path);

/// Aligned "key value" lines for one state.
void run_single(const StateParams& p, const std::vector<Measure>& measures, const EvalOptions& options,
                std::ostream& out);

void run_bounds(int n, std::ostream& out);

/// "%.12g" with negative zero printed as 0.
std::string format_number(double x);

/// Parses "start:stop" or a single number (start == stop).
std::pair<double, double> parse_range(const std::string& s);

}  // namespace symcorr::cli
