#include "symcorr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "symcorr/channels.hpp"
#include "symcorr/genuine.hpp"
#include "symcorr/global_discord.hpp"
#include "symcorr/nonlocality.hpp"

namespace symcorr::cli {
namespace {

using nlohmann::json;

bool is_discord_measure(Measure m) {
  return m == Measure::genuine_discord || m == Measure::genuine_classical || m == Measure::global_discord;
}

OracleConfig oracle_config(const EvalOptions& options, int restarts) {
  OracleConfig c;
  c.restarts = restarts;
  c.seed = options.seed;
  c.max_qubits = options.oracle_max_qubits;
  return c;
}

// T^(n): smallest mutual information over bipartitions.
double genuine_total(const DensityMatrix& rho, DiscordMode mode) {
  const int n = rho.n_qubits();
  double best = std::numeric_limits<double>::infinity();
  if (mode == DiscordMode::symmetric) {
    if (!is_permutation_invariant(rho)) throw SymmetryError("mutual_info: state is not permutation invariant");
    for (int k = 1; k <= n / 2; ++k) best = std::min(best, mutual_information(rho, Cut::trailing(n, k)));
    return best;
  }
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<int> measured;
    for (int q = 0; q < n; ++q) {
      if ((mask >> (n - 1 - q)) & 1U) measured.push_back(q);
    }
    best = std::min(best, mutual_information(rho, Cut(n, std::move(measured))));
  }
  return best;
}

std::string double_text(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "thermo") return Family::thermo;
  if (s == "ghz_ad") return Family::ghz_ad;
  if (s == "ghz_pd") return Family::ghz_pd;
  throw ArgumentError("unknown state family '" + s + "' (expected thermo, ghz_ad or ghz_pd)");
}

Measure parse_measure(const std::string& s) {
  if (s == "genuine_discord") return Measure::genuine_discord;
  if (s == "genuine_classical") return Measure::genuine_classical;
  if (s == "global_discord") return Measure::global_discord;
  if (s == "svetlichny") return Measure::svetlichny;
  if (s == "mutual_info") return Measure::mutual_info;
  throw ArgumentError("unknown measure '" + s + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::thermo: return "thermo";
    case Family::ghz_ad: return "ghz_ad";
    case Family::ghz_pd: return "ghz_pd";
  }
  return "?";
}

std::string to_string(Measure m) {
  switch (m) {
    case Measure::genuine_discord: return "genuine_discord";
    case Measure::genuine_classical: return "genuine_classical";
    case Measure::global_discord: return "global_discord";
    case Measure::svetlichny: return "svetlichny";
    case Measure::mutual_info: return "mutual_info";
  }
  return "?";
}

std::string swept_parameter(Family f) {
  switch (f) {
    case Family::thermo: return "p0";
    case Family::ghz_ad: return "lambda";
    case Family::ghz_pd: return "gamma";
  }
  return "?";
}

DensityMatrix build_state(const StateParams& p) {
  switch (p.family) {
    case Family::thermo: return thermo_state(p.n, p.p0);
    case Family::ghz_ad: return ghz_ad_closed(p.n, p.alpha1, p.lambda, p.policy);
    case Family::ghz_pd: return ghz_pd_closed(p.n, p.alpha1, p.gamma, p.policy);
  }
  throw ArgumentError("unknown state family");
}

PointResult evaluate(const StateParams& p, const std::vector<Measure>& measures, const EvalOptions& options) {
  for (Measure m : measures) {
    if (is_discord_measure(m) && options.mode == DiscordMode::symmetric && p.n > kDiscordQubitCap) {
      throw GuardError(to_string(m) + " is limited to n <= " + std::to_string(kDiscordQubitCap));
    }
  }
  const DensityMatrix rho = build_state(p);

  std::optional<GenuineReport> genuine;
  auto genuine_report = [&]() -> const GenuineReport& {
    if (!genuine) {
      GenuineConfig config;
      config.oracle = oracle_config(options, config.oracle.restarts);
      genuine = genuine_correlations(rho, options.mode, config);
    }
    return *genuine;
  };

  PointResult out;
  json angles = json::object();
  for (Measure m : measures) {
    const std::string key = to_string(m);
    switch (m) {
      case Measure::genuine_discord:
      case Measure::genuine_classical: {
        const auto& g = genuine_report();
        out.values.push_back(m == Measure::genuine_discord ? g.quantum : g.classical);
        angles[key] = {{"cut", g.discord_cut.to_string()}, {"theta", g.optimal_theta}};
        break;
      }
      case Measure::global_discord: {
        GlobalDiscordConfig config;
        config.oracle = oracle_config(options, config.oracle.restarts);
        const auto g = global_discord(rho, options.mode, config);
        out.values.push_back(g.value);
        angles[key] = {{"theta", g.angles.theta}, {"phi", g.angles.phi}};
        break;
      }
      case Measure::svetlichny: {
        ViolationOptions vo;
        vo.seed = options.seed;
        const auto v = max_violation(rho, vo);
        out.values.push_back(v.value);
        json settings = json::array();
        for (const auto& pair : v.settings.angles) settings.push_back({pair[0], pair[1]});
        angles[key] = {{"settings", settings}, {"closed_form", v.closed_form}};
        break;
      }
      case Measure::mutual_info:
        out.values.push_back(genuine_total(rho, options.mode));
        break;
    }
  }
  out.angles_json = angles.dump();
  return out;
}

void SweepSpec::validate() const {
  if (steps < 2) throw ArgumentError("--steps must be at least 2");
  if (!(start >= 0.0 && start <= 1.0 && stop >= 0.0 && stop <= 1.0)) {
    throw ArgumentError("sweep range for " + swept_parameter(base.family) + " must lie in [0, 1]");
  }
  if (measures.empty()) throw ArgumentError("at least one --measure is required");
}

double SweepSpec::value_at(int i) const {
  if (i == steps - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepOutput compute_sweep(const SweepSpec& spec, const EvalOptions& options) {
  spec.validate();
  std::ostringstream csv;
  csv << swept_parameter(spec.base.family);
  for (Measure m : spec.measures) csv << ',' << to_string(m);
  csv << '\n';

  json points = json::array();
  for (int i = 0; i < spec.steps; ++i) {
    StateParams p = spec.base;
    const double x = spec.value_at(i);
    switch (p.family) {
      case Family::thermo: p.p0 = x; break;
      case Family::ghz_ad: p.lambda = x; break;
      case Family::ghz_pd: p.gamma = x; break;
    }
    const PointResult r = evaluate(p, spec.measures, options);
    csv << format_number(x);
    for (double v : r.values) csv << ',' << format_number(v);
    csv << '\n';
    points.push_back({{swept_parameter(p.family), x}, {"angles", json::parse(r.angles_json)}});
  }

  json meta;
  meta["tool"] = "symcorr";
  meta["version"] = kToolVersion;
  meta["family"] = to_string(spec.base.family);
  meta["n"] = spec.base.n;
  meta["swept"] = swept_parameter(spec.base.family);
  meta["range"] = {spec.start, spec.stop};
  meta["steps"] = spec.steps;
  if (spec.base.family != Family::thermo) meta["alpha1"] = spec.base.alpha1;
  meta["mode"] = options.mode == DiscordMode::symmetric ? "symmetric" : "general";
  meta["seed"] = options.seed;
  meta["angle_unit"] = "radian";
  json names = json::array();
  for (Measure m : spec.measures) names.push_back(to_string(m));
  meta["measures"] = names;
  meta["points"] = points;
  return {csv.str(), meta.dump(2) + "\n"};
}

void run_sweep(const SweepSpec& spec, const EvalOptions& options, const std::string& out_path) {
  const SweepOutput result = compute_sweep(spec, options);
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
  };
  write(out_path, result.csv);
  write(out_path + ".meta.json", result.metadata_json);
}

void run_single(const StateParams& p, const std::vector<Measure>& measures, const EvalOptions& options,
                std::ostream& out) {
  if (measures.empty()) throw ArgumentError("at least one --measure is required");
  const PointResult r = evaluate(p, measures, options);

  std::vector<std::pair<std::string, std::string>> rows{{"family", to_string(p.family)},
                                                        {"n", std::to_string(p.n)}};
  switch (p.family) {
    case Family::thermo: rows.emplace_back("p0", double_text(p.p0)); break;
    case Family::ghz_ad:
      rows.emplace_back("alpha1", double_text(p.alpha1));
      rows.emplace_back("lambda", double_text(p.lambda));
      break;
    case Family::ghz_pd:
      rows.emplace_back("alpha1", double_text(p.alpha1));
      rows.emplace_back("gamma", double_text(p.gamma));
      break;
  }
  for (std::size_t i = 0; i < measures.size(); ++i) rows.emplace_back(to_string(measures[i]), format_number(r.values[i]));

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
}

void run_bounds(int n, std::ostream& out) {
  const SvetlichnyBounds b = bounds(n);
  std::string thresholds;
  for (double t : b.separability_thresholds) {
    if (!thresholds.empty()) thresholds += ' ';
    thresholds += format_number(t);
  }
  if (thresholds.empty()) thresholds = "none";
  out << std::left << std::setw(24) << "n" << n << '\n'
      << std::setw(24) << "lhv" << format_number(b.lhv) << '\n'
      << std::setw(24) << "quantum_max" << format_number(b.quantum_max) << '\n'
      << std::setw(24) << "separability_thresholds" << thresholds << '\n';
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::pair<double, double> parse_range(const std::string& s) {
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw ArgumentError("malformed number '" + t + "' in '" + s + "'");
    }
    if (used != t.size()) throw ArgumentError("malformed number '" + t + "' in '" + s + "'");
    return v;
  };
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const double v = number(s);
    return {v, v};
  }
  return {number(s.substr(0, colon)), number(s.substr(colon + 1))};
}

}  // namespace symcorr::cli
