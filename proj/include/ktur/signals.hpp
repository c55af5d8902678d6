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

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "ktur/grid.hpp"

namespace ktur {

inline constexpr int kMaxHermiteOrder = 64;

/// Gaussian with intensity standard deviation `sigma`:
///   f(x) ~ exp(-(1 - i chirp)(x - mu)^2 / (4 sigma^2) + i p0 x).
/// sigma = sqrt(1/2) with chirp = p0 = mu = 0 is the oscillator ground state.
struct GaussianSpec {
  double mu = 0.0;
  double sigma = 0.70710678118654752440;
  double chirp = 0.0;
  double p0 = 0.0;
};

/// Equal-weight superposition of Hermite functions psi_n (a single entry is
/// the eigenfunction itself).
struct HermiteSpec {
  std::vector<int> levels{0};
};

/// Real smooth bump exp(-1 / (1 - ((x - mu) / width)^2)), zero outside
/// |x - mu| < width.
struct BumpSpec {
  double mu = 0.0;
  double width = 4.0;
};

struct TableSpec {
  std::filesystem::path path;
};

struct AnalyticSignalSpec {
  std::variant<GaussianSpec, HermiteSpec, BumpSpec, TableSpec> kind;
  bool normalize = true;
};

SampledSignal sample(const AnalyticSignalSpec& spec, const Grid& grid);

/// Orthonormal Hermite function psi_n on the grid, from the normalized
/// three-term recurrence.
SampledSignal hermite_function(int n, const Grid& grid);

/// Smallest half-width on which psi_n is considered resolved.
double hermite_required_half_width(int n_max);

/// psi_0 .. psi_{n_max} sampled once on a grid; read-only after construction.
class HermiteBasis {
 public:
  HermiteBasis(const Grid& grid, int n_max);

  const Grid& grid() const noexcept { return grid_; }
  int n_max() const noexcept { return n_max_; }
  /// Samples of psi_n.
  std::span<const double> row(int n) const noexcept;

 private:
  Grid grid_;
  int n_max_;
  std::vector<double> rows_;
};

/// CSV `x,re,im` whose x column must match `grid` sample for sample.
SampledSignal load_signal_table(const std::filesystem::path& path, const Grid& grid, bool normalize = true);

/// CSV with header `<axis>,re,im`, shortest round-trip float formatting.
void write_signal_table(const std::filesystem::path& path, const SampledSignal& f, const std::string& axis = "x");

}  // namespace ktur
