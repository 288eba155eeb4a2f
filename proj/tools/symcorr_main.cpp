// symcorr: correlation measures of symmetric n-qubit states.
//
//   symcorr single thermo --n 3 --p0 0.8 --measure genuine_discord --measure global_discord
//   symcorr sweep ghz_ad --n 4 --alpha1 0.7071 --lambda 0:1 --steps 101 --measure svetlichny --out ad4.csv
//   symcorr bounds --n 5
//
// Exit codes: 0 ok, 2 usage, 3 size guard, 4 I/O.

#include <algorithm>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "symcorr/cli.hpp"

namespace {

using namespace symcorr;

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

struct Args {
  std::string family;
  int n = 3;
  std::string p0;
  std::string alpha1;
  std::string lambda;
  std::string gamma;
  int steps = 11;
  std::vector<std::string> measures;
  std::string out;
  std::uint64_t seed = 20150601;
  std::string mode = "symmetric";
  bool strict_alpha = false;
  int oracle_max_qubits = 4;
};

double scalar_flag(const std::string& text, const char* name, double fallback) {
  if (text.empty()) return fallback;
  const auto [lo, hi] = cli::parse_range(text);
  if (lo != hi) throw ArgumentError(std::string("--") + name + " takes a single value here");
  return lo;
}

cli::StateParams state_params(const Args& a, bool sweeping) {
  cli::StateParams p;
  p.family = cli::parse_family(a.family);
  p.n = a.n;
  p.policy = a.strict_alpha ? AlphaPolicy::strict : AlphaPolicy::lenient;
  const std::string swept = sweeping ? cli::swept_parameter(p.family) : "";
  auto value = [&](const std::string& text, const char* name, double fallback) {
    return swept == name ? fallback : scalar_flag(text, name, fallback);
  };
  p.p0 = value(a.p0, "p0", 0.5);
  p.alpha1 = value(a.alpha1, "alpha1", kInvSqrt2);
  p.lambda = value(a.lambda, "lambda", 0.0);
  p.gamma = value(a.gamma, "gamma", 0.0);
  if (p.family != cli::Family::thermo && !a.strict_alpha && alpha_exceeds_strict_range(p.alpha1)) {
    std::cerr << "warning: alpha1 = " << p.alpha1
              << " exceeds 1/sqrt(2); equivalent to a relabelled state with alpha1' = sqrt(1 - alpha1^2)\n";
  }
  return p;
}

cli::EvalOptions eval_options(const Args& a) {
  cli::EvalOptions o;
  o.mode = a.mode == "general" ? DiscordMode::general : DiscordMode::symmetric;
  o.seed = a.seed;
  o.oracle_max_qubits = a.oracle_max_qubits;
  return o;
}

std::vector<cli::Measure> measures(const Args& a) {
  std::vector<cli::Measure> out;
  for (const auto& s : a.measures) {
    const auto m = cli::parse_measure(s);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

void add_state_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("family", a.family, "State family: thermo, ghz_ad, ghz_pd")->required();
  cmd->add_option("--n", a.n, "Number of qubits");
  cmd->add_option("--p0", a.p0, "Thermo population p0 (sweep: start:stop)");
  cmd->add_option("--alpha1", a.alpha1, "GHZ amplitude alpha1 (default 1/sqrt(2))");
  cmd->add_option("--lambda", a.lambda, "Amplitude-damping rate (sweep: start:stop)");
  cmd->add_option("--gamma", a.gamma, "Phase-damping rate (sweep: start:stop)");
  cmd->add_option("--measure", a.measures,
                  "genuine_discord, genuine_classical, global_discord, svetlichny, mutual_info (repeatable)");
  cmd->add_option("--seed", a.seed, "Seed for multi-start searches");
  cmd->add_option("--mode", a.mode, "Discord optimization: symmetric or general")
      ->check(CLI::IsMember({"symmetric", "general"}));
  cmd->add_flag("--strict-alpha", a.strict_alpha, "Reject alpha1 > 1/sqrt(2)");
  cmd->add_option("--oracle-max-qubits", a.oracle_max_qubits, "Size cap for general mode (2..5)")
      ->check(CLI::Range(2, 5));
}

int run(int argc, char** argv) {
  CLI::App app{"Correlation measures of symmetric n-qubit states"};
  app.require_subcommand(1);
  Args a;

  auto* single = app.add_subcommand("single", "Evaluate measures for one state");
  add_state_flags(single, a);

  auto* sweep = app.add_subcommand("sweep", "Sweep the family parameter and write CSV");
  add_state_flags(sweep, a);
  sweep->add_option("--steps", a.steps, "Number of sweep points (>= 2)");
  sweep->add_option("--out", a.out, "Output CSV path; metadata goes to <out>.meta.json")->required();

  auto* bounds = app.add_subcommand("bounds", "Svetlichny bounds for n parties");
  bounds->add_option("--n", a.n, "Number of qubits")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*single) {
    cli::run_single(state_params(a, false), measures(a), eval_options(a), std::cout);
  } else if (*sweep) {
    cli::SweepSpec spec;
    spec.base = state_params(a, true);
    const std::map<std::string, const std::string*> range_flags{{"p0", &a.p0}, {"lambda", &a.lambda}, {"gamma", &a.gamma}};
    const std::string& text = *range_flags.at(cli::swept_parameter(spec.base.family));
    if (!text.empty()) std::tie(spec.start, spec.stop) = cli::parse_range(text);
    spec.steps = a.steps;
    spec.measures = measures(a);
    cli::run_sweep(spec, eval_options(a), a.out);
  } else if (*bounds) {
    cli::run_bounds(a.n, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symcorr::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const symcorr::SymmetryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const symcorr::GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const symcorr::cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
