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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ktur/grid.hpp"
#include "ktur/kernel.hpp"
#include "ktur/signals.hpp"

namespace ktur::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kNumericalError = 3,
  kInvariantFailure = 4,
};

/// Kernel parameters as given on the command line. Unset values take the
/// family defaults.
struct KernelSpec {
  std::string family;  ///< frft | lct | squeeze | gtf | file:<path> | x | p
  double alpha = 0.0;
  double theta = 0.0;
  double a = 1.0;
  double b = 1.0;
  double d = 1.0;
  double phi = 0.0;
};

struct SweepAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double value(int i) const;
};

struct RunConfig {
  std::string command;
  std::string signal = "gaussian";
  bool normalize = true;
  std::size_t n = 1024;
  double half_width = 10.0;
  std::optional<std::size_t> out_n;
  std::optional<double> out_half_width;
  KernelSpec kernel1{"frft", 0.0, 0.0, 1.0, 1.0, 1.0, 0.0};
  KernelSpec kernel2{"frft", 0.0, 0.0, 1.0, 1.0, 1.0, 0.0};
  bool kernel1_given = false;
  bool kernel2_given = false;
  int n_max = 32;
  std::vector<SweepAxis> sweeps;
  std::string out;
  /// json | csv; empty selects the command default.
  std::string format;
  bool json = false;
};

AnalyticSignalSpec parse_signal(const std::string& text, bool normalize);
SweepAxis parse_sweep(const std::string& text);
QuadPhaseKernel build_kernel(const KernelSpec& spec);
/// Sets a named kernel parameter: alpha, beta, theta, phi, phi2, a, b, d, a2, b2, d2.
void set_param(RunConfig& cfg, const std::string& name, double value);

int cmd_transform(const RunConfig& cfg);
int cmd_moments(const RunConfig& cfg);
int cmd_ur(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_pn_ur(const RunConfig& cfg);
int cmd_selftest(const RunConfig& cfg);

struct InvariantResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      ///< worst observed defect
  double tolerance = 0.0;
  std::string detail;
};

struct SelftestOptions {
  std::size_t n = 1024;
  double half_width = 10.0;
};

/// Runs the invariant suite; results are in a fixed order.
std::vector<InvariantResult> run_selftest(const SelftestOptions& opts);

/// Entry point for the ktur executable.
int run(int argc, char** argv);

}  // namespace ktur::cli
