/******************************************************************************
 * Copyright 2026 The ktur Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ktur/cli.hpp"
#include "ktur/error.hpp"
#include "ktur/serialize.hpp"

using namespace ktur;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = std::to_string(::getpid());
  const auto err_path = dir / ("ktur_cli_err_" + tag);
  const std::string cmd = std::string(KTUR_CLI_PATH) + " " + args + " 2>" + err_path.string();
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST(CliParsing, Signals) {
  const auto g = cli::parse_signal("gaussian:1,0.5,0.2,0.3", true);
  const auto* gs = std::get_if<GaussianSpec>(&g.kind);
  ASSERT_NE(gs, nullptr);
  EXPECT_EQ(gs->mu, 1.0);
  EXPECT_EQ(gs->sigma, 0.5);
  EXPECT_EQ(gs->chirp, 0.2);
  EXPECT_EQ(gs->p0, 0.3);
  const auto h = cli::parse_signal("hermite:0+3", true);
  ASSERT_NE(std::get_if<HermiteSpec>(&h.kind), nullptr);
  EXPECT_EQ(std::get<HermiteSpec>(h.kind).levels, (std::vector<int>{0, 3}));
  EXPECT_THROW(cli::parse_signal("triangle", true), Error);
  EXPECT_THROW(cli::parse_signal("hermite:x", true), Error);
}

TEST(CliParsing, Sweep) {
  const cli::SweepAxis ax = cli::parse_sweep("alpha=0.1:3.0:30");
  EXPECT_EQ(ax.param, "alpha");
  EXPECT_EQ(ax.count, 30);
  EXPECT_DOUBLE_EQ(ax.value(0), 0.1);
  EXPECT_DOUBLE_EQ(ax.value(29), 3.0);
  EXPECT_DOUBLE_EQ(ax.value(1), 0.2);
  EXPECT_THROW(cli::parse_sweep("alpha=0:1"), Error);
  EXPECT_THROW(cli::parse_sweep("alpha=0:1:0"), Error);
}

TEST(CliBinary, TransformWritesCsvAndSidecar) {
  const auto out = std::filesystem::temp_directory_path() / ("ktur_t_" + std::to_string(::getpid()) + ".csv");
  const CliRun r = run_cli("transform --kernel frft --alpha 1.5707963267948966 --signal gaussian --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(slurp(out), &header);
  EXPECT_EQ(header, "p,re,im");
  ASSERT_FALSE(rows.empty());
  const Json side = Json::parse(slurp(out.string() + ".json"));
  EXPECT_EQ(side["command"], "transform");
  EXPECT_TRUE(side["passed"].get<bool>());
  EXPECT_LE(side["unitarity"]["relative_defect"].get<double>(), 1e-7);
  EXPECT_EQ(Json::parse(r.out), side);
  // The Fourier transform of the ground state is itself, up to sampling.
  double worst = 0.0;
  for (const auto& row : rows) {
    const double want = std::pow(M_PI, -0.25) * std::exp(-0.5 * row[0] * row[0]);
    worst = std::max(worst, std::hypot(row[1] - want, row[2]));
  }
  EXPECT_LE(worst, 1e-8);
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".json");
}

TEST(CliBinary, OutputIsDeterministic) {
  const std::string args = "ur --kernel squeeze --alpha 0.4 --beta 0.2 --theta 0.3 --signal gaussian:0.5,0.6,0.3,0.1";
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const CliRun s1 = run_cli("sweep --kernel frft --sweep alpha=0.1:1.0:4 --sweep beta=0:0.9:4 --signal hermite:1");
  const CliRun s2 = run_cli("sweep --kernel frft --sweep alpha=0.1:1.0:4 --sweep beta=0:0.9:4 --signal hermite:1");
  ASSERT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s2.out);
}

TEST(CliBinary, ConfigErrorsExitTwo) {
  for (const std::string args : {"transform --kernel banana", "ur --kernel frft --signal nope", "frobnicate",
                                 "sweep --kernel frft --sweep gamma=0:1:3", "transform --signal gaussian"}) {
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.code, 2) << args;
    EXPECT_FALSE(r.err.empty()) << args;
  }
  const CliRun r = run_cli("ur --kernel frft --signal nope");
  const Json e = Json::parse(r.err);
  EXPECT_EQ(e["error_kind"], "invalid_argument");
  EXPECT_TRUE(e.contains("detail"));
}

TEST(CliBinary, NumericalErrorsExitThree) {
  const CliRun r = run_cli("transform --kernel lct --a 1 --b 0 --d 1");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.err)["error_kind"], "degenerate_kernel");
  const CliRun n = run_cli("pn-ur --signal gaussian:0,0.7071067811865476,1,0 --n-max 6");
  EXPECT_EQ(n.code, 3);
  EXPECT_EQ(Json::parse(n.err)["error_kind"], "insufficient_basis");
}

TEST(CliBinary, SweepOverFrftAngle) {
  const CliRun r = run_cli("sweep --kernel frft --beta 0 --sweep alpha=0.1:3.0:30 --signal hermite:2");
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "alpha,sigma2_1,sigma2_2,f_term,w_term,lhs,bound,margin,saturation");
  ASSERT_EQ(rows.size(), 30u);
  for (const auto& row : rows) {
    EXPECT_GE(row[7], -1e-7);
    // psi_2 is uncorrelated with sigma_x^2 = sigma_p^2 = 5/2.
    EXPECT_NEAR(row[1], 2.5, 1e-6);
    EXPECT_NEAR(row[4], -std::sin(row[0]), 1e-9);
  }
}

TEST(CliBinary, GaussianSaturatesEverywhere) {
  const CliRun r = run_cli("sweep --kernel frft --sweep alpha=0.2:2.9:10 --sweep beta=0.15:2.85:10 --signal gaussian --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json rows = Json::parse(r.out);
  ASSERT_EQ(rows.size(), 100u);
  for (const auto& row : rows) {
    const auto& rep = row["report"];
    if (rep["saturation"].is_null()) continue;
    EXPECT_NEAR(rep["saturation"].get<double>(), 1.0, 1e-6) << row.dump();
  }
}

TEST(CliBinary, SqueezeCommutatorTerm) {
  const CliRun r = run_cli("sweep --kernel squeeze --theta 0.3 --beta 0.2 --sweep alpha=0.1:0.5:5 --signal gaussian");
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : parse_csv(r.out)) {
    EXPECT_NEAR(row[4], std::cos(0.3) * std::sinh(0.2 - row[0]), 1e-9);
  }
}

TEST(CliBinary, MomentumNumberTwoLevel) {
  const CliRun r = run_cli("pn-ur --signal hermite:0+1 --n-max 16");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["number"]["variance"].get<double>(), 0.25, 1e-8);
  EXPECT_NEAR(j["commutator_term"].get<double>(), 0.125, 1e-6);
  EXPECT_GE(j["margin"].get<double>(), -1e-7);
}

TEST(CliBinary, GtfTransformOnDefaultGrid) {
  const CliRun r = run_cli("transform --kernel gtf --phi 0.9 --n 2048 --half-width 12 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_LE(j["unitarity"]["relative_defect"].get<double>(), 1e-5);
  EXPECT_GT(j["grid_out"]["half_width"].get<double>(), 12.0);
}

TEST(CliBinary, GtfPairReportsBothBounds) {
  const CliRun r = run_cli("ur --kernel gtf --phi 0.4 --phi2 1.2 --n 2048 --half-width 12");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_TRUE(j.contains("bound_unscaled_commutator"));
  EXPECT_NEAR(j["w_term"].get<double>(), std::sin(1.2 - 0.4), 1e-7);
  EXPECT_NEAR(j["closed_form_bound"].get<double>(), j["bound"].get<double>(), 1e-7);
}
