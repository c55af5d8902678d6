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

#include "ktur/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ktur/error.hpp"

namespace ktur {

namespace {

struct SupportFrequencies {
  double g_min = 0.0;
  double g_max = 0.0;
  bool empty = true;
};

// Range of b x + X'(x), the x-dependent part of the phase derivative, over the
// samples where f is not negligible.
SupportFrequencies support_frequencies(const QuadPhaseKernel& k, const SampledSignal& f) {
  SupportFrequencies out;
  const auto [first, last] = effective_support(f);
  if (first > last) return out;
  const Polynomial dx = k.extra_x_phase().derivative();
  out.empty = false;
  out.g_min = out.g_max = k.b() * f.grid().x(first) + dx(f.grid().x(first));
  for (std::size_t i = first; i <= last; ++i) {
    const double x = f.grid().x(i);
    const double g = k.b() * x + dx(x);
    out.g_min = std::min(out.g_min, g);
    out.g_max = std::max(out.g_max, g);
  }
  return out;
}

void require_one_dimensional(const QuadPhaseKernel& k) {
  if (k.dim() != 1) throw Error(ErrorKind::invalid_argument, "sampled transforms support dim 1 kernels only");
}

void preflight(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  require_one_dimensional(k);
  if (!boundary_decay_ok(f)) {
    throw Error(ErrorKind::aliasing_risk,
                "transform input '" + f.label() + "' does not decay at the grid boundary");
  }
  const OscillationBound ob = oscillation_bound(k, f, out_grid);
  if (ob.max_frequency > ob.limit) {
    std::ostringstream os;
    os.precision(17);
    os << "kernel " << k.label() << " oscillates at " << ob.max_frequency << " rad/unit at p = " << ob.worst_p
       << ", above the input Nyquist limit " << ob.limit;
    throw Error(ErrorKind::grid_too_coarse, os.str());
  }
}

}  // namespace

OscillationBound oscillation_bound(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  require_one_dimensional(k);
  OscillationBound ob;
  ob.limit = std::numbers::pi / f.grid().spacing();
  const SupportFrequencies sf = support_frequencies(k, f);
  if (sf.empty) return ob;
  const double c = k.c();
  for (std::size_t j = 0; j < out_grid.size(); ++j) {
    const double cp = c * out_grid.x(j);
    const double worst = std::max(sf.g_max - cp, cp - sf.g_min);
    if (worst > ob.max_frequency) {
      ob.max_frequency = worst;
      ob.worst_p = out_grid.x(j);
    }
  }
  return ob;
}

double admissible_output_half_width(const QuadPhaseKernel& k, const SampledSignal& f) {
  require_one_dimensional(k);
  const double limit = std::numbers::pi / f.grid().spacing();
  const SupportFrequencies sf = support_frequencies(k, f);
  if (sf.empty) return f.grid().half_width();
  const double slack = limit - std::max(sf.g_max, -sf.g_min);
  if (slack <= 0.0) return 0.0;
  return slack / std::abs(k.c());
}

Grid default_output_grid(const QuadPhaseKernel& k, const SampledSignal& f) {
  if (!k.has_extra_phase()) return f.grid();
  const double reach = std::min(0.98 * admissible_output_half_width(k, f), 8.0 * f.grid().half_width());
  if (reach <= f.grid().half_width()) return f.grid();
  return Grid(2 * f.grid().size(), reach);
}

SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  preflight(k, f, out_grid);
  const Grid& in = f.grid();
  const std::size_t n_in = in.size();
  const double h = in.spacing();
  const Polynomial& xphase = k.extra_x_phase();
  const Polynomial& pphase = k.extra_p_phase();

  // Fold the x-only part of the phase and the quadrature weight into the input.
  std::vector<Complex> chirped(n_in);
  std::vector<double> xs(n_in);
  for (std::size_t i = 0; i < n_in; ++i) {
    const double x = in.x(i);
    xs[i] = x;
    chirped[i] = f[i] * std::polar(h, 0.5 * k.b() * x * x + xphase(x));
  }

  const double c = k.c();
  const std::size_t n_out = out_grid.size();
  std::vector<Complex> out(n_out);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n_out); ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const double p = out_grid.x(j);
    const double cp = c * p;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) {
      const double arg = -cp * xs[i];
      const double cs = std::cos(arg);
      const double sn = std::sin(arg);
      re += chirped[i].real() * cs - chirped[i].imag() * sn;
      im += chirped[i].real() * sn + chirped[i].imag() * cs;
    }
    out[j] = k.prefactor() * std::polar(1.0, 0.5 * k.a() * p * p + pphase(p)) * Complex(re, im);
  }
  return SampledSignal(out_grid, std::move(out), k.label());
}

SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f) {
  return apply_transform(k, f, f.grid());
}

namespace reference {

SampledSignal apply_transform(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  preflight(k, f, out_grid);
  const double h = f.grid().spacing();
  std::vector<Complex> out(out_grid.size());
  for (std::size_t j = 0; j < out_grid.size(); ++j) {
    const double p = out_grid.x(j);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) acc += eval_kernel(k, p, f.grid().x(i)) * f[i];
    out[j] = acc * h;
  }
  return SampledSignal(out_grid, std::move(out), k.label());
}

}  // namespace reference

UnitarityReport unitarity(const SampledSignal& input, const SampledSignal& output) {
  UnitarityReport r;
  r.norm_in = norm(input);
  r.norm_out = norm(output);
  r.relative_defect = r.norm_in == 0.0 ? 0.0 : std::abs(r.norm_out - r.norm_in) / r.norm_in;
  return r;
}

UnitarityReport check_parseval(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  return unitarity(f, apply_transform(k, f, out_grid));
}

UnitarityReport check_parseval(const QuadPhaseKernel& k, const SampledSignal& f) {
  return check_parseval(k, f, f.grid());
}

SampledSignal reflect(const SampledSignal& f) {
  const std::size_t n = f.size();
  std::vector<Complex> out(n);
  out[0] = f[0];
  for (std::size_t i = 1; i < n; ++i) out[i] = f[n - i];
  return SampledSignal(f.grid(), std::move(out), f.label());
}

double check_additivity(const KernelFamily& family, double alpha, double beta, const SampledSignal& f) {
  const double f_norm = norm(f);
  if (f_norm == 0.0) return 0.0;
  const SampledSignal composed = apply_transform(family(alpha), apply_transform(family(beta), f));
  SampledSignal target = [&] {
    try {
      return apply_transform(family(alpha + beta), f);
    } catch (const DegenerateKernelError& e) {
      if (e.limit() == DegenerateLimit::identity) return f;
      if (e.limit() == DegenerateLimit::parity) return reflect(f);
      throw;
    }
  }();
  return norm(composed - target) / f_norm;
}

}  // namespace ktur
