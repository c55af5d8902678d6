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

#include <vector>

#include "ktur/grid.hpp"
#include "ktur/signals.hpp"

namespace ktur {

/// Coefficients C_n = <psi_n | f>, n = 0..n_max.
struct NumberDecomposition {
  std::vector<Complex> coeffs;
  /// ||f||^2 - sum |C_n|^2.
  double truncation_residual = 0.0;
  Grid grid;

  int n_max() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double captured() const;
};

NumberDecomposition decompose(const SampledSignal& f, int n_max);
NumberDecomposition decompose(const SampledSignal& f, const HermiteBasis& basis);

inline constexpr double kMaxNumberResidual = 1e-8;

struct NumberMoments {
  /// Moments of |C_n|^2 renormalized by sum |C_n|^2.
  double mean = 0.0;
  double variance = 0.0;
  /// Same sums without renormalization.
  double raw_mean = 0.0;
  double raw_variance = 0.0;
};

NumberMoments number_moments(const NumberDecomposition& d);

/// sum_n C_n psi_n on `grid`.
SampledSignal reconstruct(const NumberDecomposition& d, const Grid& grid);

/// <p>, <n> and 1/2 <{p, n}> evaluated in coefficient space, where p acts as
/// (p C)_m = i sqrt(m/2) C_{m-1} - i sqrt((m+1)/2) C_{m+1}.
struct CoefficientMomentumNumber {
  double mean_p = 0.0;
  double mean_n = 0.0;
  double half_anticommutator = 0.0;
};

CoefficientMomentumNumber coefficient_momentum_number(const NumberDecomposition& d);

}  // namespace ktur
