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

#include <functional>

#include "ktur/grid.hpp"
#include "ktur/kernel.hpp"

namespace ktur {

struct UnitarityReport {
  double norm_in = 0.0;
  double norm_out = 0.0;
  double relative_defect = 0.0;
};

/// Maximum of |d/dx phase(p, x)| over the effective support of f, for the
/// output sample where it is largest.
struct OscillationBound {
  double worst_p = 0.0;
  double max_frequency = 0.0;
  double limit = 0.0;  ///< pi / input spacing
};

OscillationBound oscillation_bound(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid);

/// Largest output half-width for which the oscillation guard still passes.
double admissible_output_half_width(const QuadPhaseKernel& k, const SampledSignal& f);

/// Output grid for kernels whose transformed signal spreads well past the
/// input extent (polynomial extra phases): twice the input points over the
/// admissible half-width (capped at 8x the input half-width). Other kernels
/// get the input grid.
Grid default_output_grid(const QuadPhaseKernel& k, const SampledSignal& f);

/// T_K[f](p_j) = sum_i K(p_j, x_i) f(x_i) h by direct quadrature, in parallel
/// over output samples. Each output sample is summed left to right, so the
/// result does not depend on the thread count.
SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid);
SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f);

namespace reference {

/// Serial evaluation of the same quadrature through eval_kernel at every
/// (p_j, x_i). Kept as the oracle for the parallel path.
SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid);

}  // namespace reference

/// Norms of a signal and its transform and |norm_out - norm_in| / norm_in.
UnitarityReport unitarity(const SampledSignal& input, const SampledSignal& output);

UnitarityReport check_parseval(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid);
UnitarityReport check_parseval(const QuadPhaseKernel& k, const SampledSignal& f);

using KernelFamily = std::function<QuadPhaseKernel(double)>;

/// ||T_a[T_b f] - T_{a+b} f|| / ||f|| on f's grid. When a + b hits an
/// identity or parity limit the target is f or f(-x).
double check_additivity(const KernelFamily& family, double alpha, double beta, const SampledSignal& f);

/// f(-x) on the half-open grid; the unmatched sample at -L takes f(-L).
SampledSignal reflect(const SampledSignal& f);

}  // namespace ktur
