#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "symcorr/cli.hpp"
#include "symcorr/global_discord.hpp"

using namespace symcorr;
using namespace symcorr::cli;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

SweepSpec thermo_sweep(int n, int steps, std::vector<Measure> measures) {
  SweepSpec spec;
  spec.base.family = Family::thermo;
  spec.base.n = n;
  spec.steps = steps;
  spec.measures = std::move(measures);
  return spec;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(SYMCORR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(CliParse, FamiliesAndMeasures) {
  EXPECT_EQ(parse_family("ghz_ad"), Family::ghz_ad);
  EXPECT_THROW(parse_family("w"), ArgumentError);
  for (Measure m : {Measure::genuine_discord, Measure::genuine_classical, Measure::global_discord, Measure::svetlichny,
                    Measure::mutual_info}) {
    EXPECT_EQ(parse_measure(to_string(m)), m);
  }
  EXPECT_THROW(parse_measure("negativity"), ArgumentError);
  EXPECT_EQ(swept_parameter(Family::thermo), "p0");
  EXPECT_EQ(swept_parameter(Family::ghz_ad), "lambda");
  EXPECT_EQ(swept_parameter(Family::ghz_pd), "gamma");
}

TEST(CliParse, Ranges) {
  EXPECT_EQ(parse_range("0.2:0.7"), std::make_pair(0.2, 0.7));
  EXPECT_EQ(parse_range("0.25"), std::make_pair(0.25, 0.25));
  EXPECT_THROW(parse_range("a:b"), ArgumentError);
  EXPECT_THROW(parse_range("0.1x"), ArgumentError);
  EXPECT_THROW(parse_range(""), ArgumentError);
}

TEST(CliFormat, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1234567.123456789), "1234567.12346");
}

TEST(CliSweep, Validation) {
  auto spec = thermo_sweep(3, 1, {Measure::mutual_info});
  EXPECT_THROW(spec.validate(), ArgumentError);
  spec.steps = 5;
  spec.stop = 1.5;
  EXPECT_THROW(spec.validate(), ArgumentError);
  spec.stop = 1.0;
  spec.measures.clear();
  EXPECT_THROW(spec.validate(), ArgumentError);
}

TEST(CliSweep, CsvLayout) {
  const auto spec = thermo_sweep(3, 5, {Measure::genuine_discord, Measure::global_discord});
  const auto out = compute_sweep(spec, {});
  const auto lines = split(out.csv, '\n');
  ASSERT_EQ(lines.size(), 6U);
  EXPECT_EQ(lines[0], "p0,genuine_discord,global_discord");
  EXPECT_EQ(out.csv.find('\r'), std::string::npos);
  EXPECT_EQ(split(lines[1], ',')[0], "0");
  EXPECT_EQ(split(lines[3], ','), (std::vector<std::string>{"0.5", "0", "0"}));
  EXPECT_EQ(split(lines[5], ',')[2], "1");
  // Values carry 12 significant digits.
  std::string digits = split(lines[2], ',')[2];
  digits.erase(0, digits.find_first_not_of("0."));
  EXPECT_EQ(digits.size(), 12U);
  EXPECT_NEAR(std::stod(split(lines[2], ',')[2]), global_discord_thermo_analytic(3, 0.25), 1e-6);

  const auto meta = nlohmann::json::parse(out.metadata_json);
  EXPECT_EQ(meta["angle_unit"], "radian");
  EXPECT_EQ(meta["steps"], 5);
  ASSERT_EQ(meta["points"].size(), 5U);
  const double theta = meta["points"][1]["angles"]["genuine_discord"]["theta"];
  EXPECT_NEAR(theta, 0.7853981634, 1e-3);
}

TEST(CliSweep, ByteStable) {
  const auto spec = thermo_sweep(4, 7, {Measure::genuine_discord, Measure::genuine_classical, Measure::svetlichny});
  const auto a = compute_sweep(spec, {});
  const auto b = compute_sweep(spec, {});
  EXPECT_EQ(a.csv, b.csv);
  EXPECT_EQ(a.metadata_json, b.metadata_json);
}

TEST(CliSweep, SymmetricAboutHalf) {
  const auto spec = thermo_sweep(4, 11, {Measure::genuine_discord, Measure::global_discord, Measure::mutual_info});
  const auto lines = split(compute_sweep(spec, {}).csv, '\n');
  for (std::size_t i = 1; i <= 11; ++i) {
    const auto a = split(lines[i], ',');
    const auto b = split(lines[12 - i], ',');
    for (std::size_t c = 1; c < a.size(); ++c) EXPECT_NEAR(std::stod(a[c]), std::stod(b[c]), 1e-9);
  }
}

TEST(CliSweep, AmplitudeDampingCrossesLhvBound) {
  SweepSpec spec;
  spec.base.family = Family::ghz_ad;
  spec.base.n = 2;
  spec.steps = 101;
  spec.measures = {Measure::svetlichny};
  const auto lines = split(compute_sweep(spec, {}).csv, '\n');
  int crossing = -1;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    if (std::stod(split(lines[i], ',')[1]) > 1.0 && std::stod(split(lines[i + 1], ',')[1]) <= 1.0) {
      crossing = static_cast<int>(i);
    }
  }
  // 1 - 1/sqrt(2) = 0.2929 lies between rows for lambda = 0.29 and 0.30.
  EXPECT_EQ(crossing, 30);
}

TEST(CliEvaluate, LargeSvetlichnyAndGuards) {
  StateParams p;
  p.n = 8;
  p.p0 = 0.9;
  EXPECT_NO_THROW(evaluate(p, {Measure::svetlichny}, {}));
  p.n = 9;
  EXPECT_THROW(evaluate(p, {Measure::global_discord}, {}), GuardError);
  EXPECT_NO_THROW(evaluate(p, {Measure::svetlichny}, {}));
  p.n = 5;
  EXPECT_THROW(evaluate(p, {Measure::genuine_discord}, {DiscordMode::general, 1, 4}), GuardError);
  p.n = 13;
  EXPECT_THROW(build_state(p), GuardError);
}

TEST(CliReports, SingleAndBounds) {
  StateParams p;
  p.p0 = 1.0;
  std::ostringstream out;
  run_single(p, {Measure::global_discord}, {}, out);
  EXPECT_NE(out.str().find("global_discord"), std::string::npos);
  std::ostringstream b;
  run_bounds(6, b);
  EXPECT_NE(b.str().find("5.65685424949"), std::string::npos);
}

TEST(CliExecutable, ExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / "symcorr_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "t.csv").string();

  EXPECT_EQ(run_tool("bounds --n 4"), 0);
  EXPECT_EQ(run_tool("--help"), 0);
  EXPECT_EQ(run_tool("single thermo --n 3 --p0 0.8 --measure genuine_discord"), 0);
  EXPECT_EQ(run_tool(""), 2);
  EXPECT_EQ(run_tool("single thermo --measure nonsense"), 2);
  EXPECT_EQ(run_tool("single thermo --p0 2 --measure mutual_info"), 2);
  EXPECT_EQ(run_tool("single thermo --mode fancy --measure mutual_info"), 2);
  EXPECT_EQ(run_tool("single ghz_ad --alpha1 0.9 --strict-alpha --measure svetlichny"), 2);
  EXPECT_EQ(run_tool("sweep thermo --steps 3 --measure mutual_info"), 2);
  EXPECT_EQ(run_tool("single thermo --n 13 --measure mutual_info"), 3);
  EXPECT_EQ(run_tool("single thermo --n 9 --measure global_discord"), 3);
  EXPECT_EQ(run_tool("sweep thermo --steps 3 --measure mutual_info --out /nonexistent/dir/x.csv"), 4);

  EXPECT_EQ(run_tool("sweep thermo --n 3 --p0 0:1 --steps 5 --measure genuine_discord --out " + csv), 0);
  const std::string first = slurp(csv);
  const std::string first_meta = slurp(csv + ".meta.json");
  EXPECT_EQ(run_tool("sweep thermo --n 3 --p0 0:1 --steps 5 --measure genuine_discord --out " + csv), 0);
  EXPECT_EQ(slurp(csv), first);
  EXPECT_EQ(slurp(csv + ".meta.json"), first_meta);
  EXPECT_EQ(first.substr(0, first.find('\n')), "p0,genuine_discord");
  std::filesystem::remove_all(dir);
}
