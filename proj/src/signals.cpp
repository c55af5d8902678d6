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

#include "ktur/signals.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ktur/error.hpp"
#include "ktur/serialize.hpp"

namespace ktur {

namespace {

SampledSignal sample_gaussian(const GaussianSpec& g, const Grid& grid) {
  const double h = grid.spacing();
  const double L = grid.half_width();
  if (!(g.sigma > 0.0)) throw Error(ErrorKind::resolution, "gaussian width must be positive");
  if (g.sigma < 3.0 * h) {
    throw Error(ErrorKind::resolution, "gaussian width " + std::to_string(g.sigma) +
                                           " is below 3 grid spacings (" + std::to_string(3.0 * h) + ")");
  }
  if (L < std::abs(g.mu) + 6.0 * g.sigma) {
    throw Error(ErrorKind::resolution, "gaussian does not decay inside the grid: need half_width >= |mu| + 6 sigma");
  }
  const double s2 = 4.0 * g.sigma * g.sigma;
  const double reach = std::min(L + std::abs(g.mu), 10.0 * g.sigma);
  if (std::abs(g.p0) + std::abs(g.chirp) * 2.0 * reach / s2 > std::numbers::pi / h) {
    throw Error(ErrorKind::resolution, "gaussian chirp/momentum exceeds the grid Nyquist wavenumber");
  }
  const double amp = std::pow(2.0 * std::numbers::pi * g.sigma * g.sigma, -0.25);
  const Complex shape(-1.0 / s2, g.chirp / s2);
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    const double d = x - g.mu;
    v[i] = amp * std::exp(shape * (d * d) + Complex(0.0, g.p0 * x));
  }
  std::ostringstream label;
  label << "gaussian(" << g.mu << "," << g.sigma << "," << g.chirp << "," << g.p0 << ")";
  return SampledSignal(grid, std::move(v), label.str());
}

SampledSignal sample_bump(const BumpSpec& b, const Grid& grid) {
  if (!(b.width >= 20.0 * grid.spacing())) {
    throw Error(ErrorKind::resolution, "bump width must span at least 20 grid spacings");
  }
  if (grid.half_width() < std::abs(b.mu) + b.width) {
    throw Error(ErrorKind::resolution, "bump does not fit inside the grid");
  }
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = (grid.x(i) - b.mu) / b.width;
    if (std::abs(u) < 1.0) v[i] = std::exp(-1.0 / (1.0 - u * u));
  }
  std::ostringstream label;
  label << "bump(" << b.mu << "," << b.width << ")";
  return SampledSignal(grid, std::move(v), label.str());
}

void require_hermite_resolved(int n_max, const Grid& grid) {
  if (n_max < 0 || n_max > kMaxHermiteOrder) {
    throw Error(ErrorKind::resolution, "hermite order must lie in [0, 64], got " + std::to_string(n_max));
  }
  if (grid.half_width() < hermite_required_half_width(n_max)) {
    throw Error(ErrorKind::resolution, "hermite order " + std::to_string(n_max) + " needs half_width >= " +
                                           std::to_string(hermite_required_half_width(n_max)));
  }
  // Oscillation wavenumber of psi_n reaches sqrt(2n+1) inside the turning points.
  if (std::numbers::pi / grid.spacing() < hermite_required_half_width(n_max)) {
    throw Error(ErrorKind::resolution, "grid spacing too coarse for hermite order " + std::to_string(n_max));
  }
}

}  // namespace

double hermite_required_half_width(int n_max) { return std::sqrt(2.0 * n_max + 1.0) + 4.0; }

HermiteBasis::HermiteBasis(const Grid& grid, int n_max) : grid_(grid), n_max_(n_max) {
  require_hermite_resolved(n_max, grid);
  const std::size_t n = grid.size();
  rows_.assign(static_cast<std::size_t>(n_max + 1) * n, 0.0);
  const double c0 = std::pow(std::numbers::pi, -0.25);
  // Each grid point runs its own recurrence.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double x = grid.x(i);
    double prev = 0.0;
    double cur = c0 * std::exp(-0.5 * x * x);
    rows_[i] = cur;
    for (int k = 0; k < n_max; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
      rows_[static_cast<std::size_t>(k + 1) * n + i] = cur;
    }
  }
}

std::span<const double> HermiteBasis::row(int n) const noexcept {
  const std::size_t len = grid_.size();
  return std::span<const double>(rows_).subspan(static_cast<std::size_t>(n) * len, len);
}

SampledSignal hermite_function(int n, const Grid& grid) {
  HermiteBasis basis(grid, n);
  auto r = basis.row(n);
  std::vector<Complex> v(r.begin(), r.end());
  return SampledSignal(grid, std::move(v), "hermite(" + std::to_string(n) + ")");
}

SampledSignal sample(const AnalyticSignalSpec& spec, const Grid& grid) {
  if (const auto* t = std::get_if<TableSpec>(&spec.kind)) {
    return load_signal_table(t->path, grid, spec.normalize);
  }
  SampledSignal out = [&] {
    if (const auto* g = std::get_if<GaussianSpec>(&spec.kind)) return sample_gaussian(*g, grid);
    if (const auto* b = std::get_if<BumpSpec>(&spec.kind)) return sample_bump(*b, grid);
    const auto& h = std::get<HermiteSpec>(spec.kind);
    if (h.levels.empty()) throw Error(ErrorKind::invalid_argument, "hermite superposition needs at least one level");
    const int top = *std::max_element(h.levels.begin(), h.levels.end());
    require_hermite_resolved(top, grid);
    HermiteBasis basis(grid, top);
    std::vector<Complex> v(grid.size());
    std::string label = "hermite(";
    for (std::size_t k = 0; k < h.levels.size(); ++k) {
      const int lvl = h.levels[k];
      if (lvl < 0) throw Error(ErrorKind::resolution, "hermite order must be non-negative");
      auto r = basis.row(lvl);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += r[i];
      label += (k ? "+" : "") + std::to_string(lvl);
    }
    label += ")";
    return SampledSignal(grid, std::move(v), label);
  }();
  return spec.normalize ? normalized(out) : out;
}

SampledSignal load_signal_table(const std::filesystem::path& path, const Grid& grid, bool normalize) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open signal table " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::parse_error, "signal table is empty: " + path.string());
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  if (line != "x,re,im") throw Error(ErrorKind::parse_error, "signal table header must be 'x,re,im', got '" + line + "'");

  std::vector<Complex> values;
  values.reserve(grid.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double x, re, im;
    if (!(fields >> x >> re >> im)) {
      throw Error(ErrorKind::parse_error, "malformed row " + std::to_string(row + 2) + " in " + path.string());
    }
    if (row >= grid.size()) throw Error(ErrorKind::incompatible_grids, "signal table has more rows than grid points");
    if (std::abs(x - grid.x(row)) > 1e-6 * grid.spacing()) {
      throw Error(ErrorKind::incompatible_grids,
                  "signal table x at row " + std::to_string(row + 2) + " does not match the grid coordinate");
    }
    values.emplace_back(re, im);
    ++row;
  }
  if (row != grid.size()) {
    throw Error(ErrorKind::incompatible_grids, "signal table has " + std::to_string(row) + " rows, grid has " +
                                                   std::to_string(grid.size()));
  }
  SampledSignal f(grid, std::move(values), "file:" + path.filename().string());
  return normalize ? normalized(f) : f;
}

void write_signal_table(const std::filesystem::path& path, const SampledSignal& f, const std::string& axis) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  out << axis << ",re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_double(f.grid().x(i)) << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag())
        << '\n';
  }
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + path.string());
}

}  // namespace ktur
