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

#include "ktur/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "ktur/error.hpp"

namespace ktur {

Grid::Grid(std::size_t n_points, double half_width)
    : n_points_(n_points), half_width_(half_width), spacing_(0.0) {
  if (n_points < 8) {
    throw Error(ErrorKind::invalid_grid, "grid needs at least 8 points, got " + std::to_string(n_points));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorKind::invalid_grid, "grid half_width must be positive and finite");
  }
  spacing_ = 2.0 * half_width / static_cast<double>(n_points);
}

std::vector<double> Grid::coordinates() const {
  std::vector<double> xs(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) xs[i] = x(i);
  return xs;
}

Grid make_grid(std::size_t n_points, double half_width) { return Grid(n_points, half_width); }

SampledSignal::SampledSignal(Grid grid, std::vector<Complex> values, std::string label)
    : grid_(grid), values_(std::move(values)), label_(std::move(label)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::incompatible_grids, "sample count " + std::to_string(values_.size()) +
                                                   " does not match grid size " + std::to_string(grid_.size()));
  }
}

SampledSignal SampledSignal::zeros(const Grid& grid, std::string label) {
  return SampledSignal(grid, std::vector<Complex>(grid.size()), std::move(label));
}

SampledSignal SampledSignal::with_label(std::string label) const {
  return SampledSignal(grid_, values_, std::move(label));
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) {
    std::ostringstream os;
    os << where << ": grids differ (" << a.size() << ", " << a.half_width() << ") vs (" << b.size() << ", "
       << b.half_width() << ")";
    throw Error(ErrorKind::incompatible_grids, os.str());
  }
}

SampledSignal operator+(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "signal sum");
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return SampledSignal(f.grid(), std::move(out), f.label());
}

SampledSignal operator-(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "signal difference");
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] - g[i];
  return SampledSignal(f.grid(), std::move(out), f.label());
}

SampledSignal operator*(Complex s, const SampledSignal& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = s * f[i];
  return SampledSignal(f.grid(), std::move(out), f.label());
}

Complex inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::conj(f[i]) * g[i];
  return acc * f.grid().spacing();
}

double norm_squared(const SampledSignal& f) {
  double acc = 0.0;
  for (Complex v : f.values()) acc += std::norm(v);
  return acc * f.grid().spacing();
}

double norm(const SampledSignal& f) { return std::sqrt(norm_squared(f)); }

double max_abs(const SampledSignal& f) {
  double m = 0.0;
  for (Complex v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

SampledSignal normalized(const SampledSignal& f) {
  const double n = norm(f);
  if (n == 0.0) return f;
  return Complex(1.0 / n) * f;
}

bool boundary_decay_ok(const SampledSignal& f, double tol) {
  const double peak = max_abs(f);
  if (peak == 0.0) return true;
  const std::size_t n = f.size();
  const std::size_t edge = std::min(kBoundarySamples, n / 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < edge; ++i) {
    worst = std::max({worst, std::abs(f[i]), std::abs(f[n - 1 - i])});
  }
  return worst <= tol * peak;
}

std::pair<std::size_t, std::size_t> effective_support(const SampledSignal& f, double tol) {
  const double cut = tol * max_abs(f);
  std::size_t first = f.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > cut) {
      first = std::min(first, i);
      last = i;
    }
  }
  return {first, last};
}

namespace {

// The FFTW planner is not reentrant; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SampledSignal spectral_derivative(const SampledSignal& f, DerivativeMode mode) {
  if (mode == DerivativeMode::checked && !boundary_decay_ok(f)) {
    throw Error(ErrorKind::aliasing_risk,
                "spectral_derivative: signal '" + f.label() + "' does not decay at the grid boundary");
  }
  const std::size_t n = f.size();
  std::vector<Complex> buf(f.values().begin(), f.values().end());
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());

  fftw_plan forward;
  fftw_plan backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_1d(static_cast<int>(n), data, data, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_1d(static_cast<int>(n), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(forward);

  const double k0 = std::numbers::pi / f.grid().half_width();
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    double k;
    if (2 * j < n) {
      k = k0 * static_cast<double>(j);
    } else if (2 * j == n) {
      k = 0.0;
    } else {
      k = k0 * (static_cast<double>(j) - static_cast<double>(n));
    }
    buf[j] *= k * inv_n;
  }
  fftw_execute(backward);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  return SampledSignal(f.grid(), std::move(buf), f.label());
}

}  // namespace ktur
