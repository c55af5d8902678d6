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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ktur {

using Complex = std::complex<double>;

/// Relative edge magnitude below which a signal counts as decayed.
inline constexpr double kBoundaryTolerance = 1e-10;
/// Edge samples inspected at each end by the decay check.
inline constexpr std::size_t kBoundarySamples = 3;

/// Uniform half-open grid on [-half_width, half_width).
class Grid {
 public:
  Grid(std::size_t n_points, double half_width);

  std::size_t size() const noexcept { return n_points_; }
  double half_width() const noexcept { return half_width_; }
  double spacing() const noexcept { return spacing_; }
  double x(std::size_t i) const noexcept { return -half_width_ + static_cast<double>(i) * spacing_; }
  std::vector<double> coordinates() const;

  bool operator==(const Grid& other) const noexcept {
    return n_points_ == other.n_points_ && half_width_ == other.half_width_;
  }

 private:
  std::size_t n_points_;
  double half_width_;
  double spacing_;
};

Grid make_grid(std::size_t n_points, double half_width);

/// Complex samples f(x_i) on a grid. Immutable once built.
class SampledSignal {
 public:
  SampledSignal(Grid grid, std::vector<Complex> values, std::string label = {});

  static SampledSignal zeros(const Grid& grid, std::string label = {});

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::string& label() const noexcept { return label_; }

  SampledSignal with_label(std::string label) const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
  std::string label_;
};

SampledSignal operator+(const SampledSignal& f, const SampledSignal& g);
SampledSignal operator-(const SampledSignal& f, const SampledSignal& g);
SampledSignal operator*(Complex s, const SampledSignal& f);

/// Pointwise g(x_i) * f(x_i).
template <class Fn>
SampledSignal multiply_pointwise(const SampledSignal& f, Fn&& g) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g(f.grid().x(i)) * f[i];
  return SampledSignal(f.grid(), std::move(out), f.label());
}

/// Trapezoid approximation of the integral of conj(f) g; on the half-open
/// periodic grid every sample has weight `spacing`.
Complex inner_product(const SampledSignal& f, const SampledSignal& g);

double norm_squared(const SampledSignal& f);
double norm(const SampledSignal& f);
double max_abs(const SampledSignal& f);

/// f / ||f||. The zero signal is returned unchanged.
SampledSignal normalized(const SampledSignal& f);

/// True iff every one of the kBoundarySamples edge samples at each end is at
/// most tol * max|f|. The zero signal passes vacuously.
bool boundary_decay_ok(const SampledSignal& f, double tol = kBoundaryTolerance);

/// Index range [first, last] of samples with |f| > tol * max|f|. For the zero
/// signal first > last.
std::pair<std::size_t, std::size_t> effective_support(const SampledSignal& f,
                                                      double tol = kBoundaryTolerance);

enum class DerivativeMode { checked, unsafe };

/// p f = (1/i) f' by discrete-Fourier differentiation with wavenumbers
/// k_j = pi j / half_width (signed ordering, Nyquist bin zeroed).
SampledSignal spectral_derivative(const SampledSignal& f, DerivativeMode mode = DerivativeMode::checked);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

}  // namespace ktur
