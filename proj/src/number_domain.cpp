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

#include "ktur/number_domain.hpp"

#include <cmath>

#include "ktur/error.hpp"

namespace ktur {

double NumberDecomposition::captured() const {
  double s = 0.0;
  for (Complex c : coeffs) s += std::norm(c);
  return s;
}

NumberDecomposition decompose(const SampledSignal& f, const HermiteBasis& basis) {
  require_same_grid(f.grid(), basis.grid(), "decompose");
  const double h = f.grid().spacing();
  const int n_max = basis.n_max();
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1);
#pragma omp parallel for schedule(static)
  for (int n = 0; n <= n_max; ++n) {
    auto row = basis.row(n);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * f[i];
    coeffs[static_cast<std::size_t>(n)] = acc * h;
  }
  NumberDecomposition d{std::move(coeffs), 0.0, f.grid()};
  d.truncation_residual = norm_squared(f) - d.captured();
  return d;
}

NumberDecomposition decompose(const SampledSignal& f, int n_max) {
  return decompose(f, HermiteBasis(f.grid(), n_max));
}

NumberMoments number_moments(const NumberDecomposition& d) {
  if (d.truncation_residual > kMaxNumberResidual) {
    throw Error(ErrorKind::insufficient_basis, "hermite truncation residual " + std::to_string(d.truncation_residual) +
                                                   " exceeds " + std::to_string(kMaxNumberResidual) +
                                                   "; raise n_max");
  }
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t n = 0; n < d.coeffs.size(); ++n) {
    const double w = std::norm(d.coeffs[n]);
    const double dn = static_cast<double>(n);
    s0 += w;
    s1 += dn * w;
    s2 += dn * dn * w;
  }
  NumberMoments m;
  m.raw_mean = s1;
  m.raw_variance = s2 - s1 * s1;
  if (s0 > 0.0) {
    m.mean = s1 / s0;
    m.variance = s2 / s0 - m.mean * m.mean;
  }
  return m;
}

SampledSignal reconstruct(const NumberDecomposition& d, const Grid& grid) {
  if (d.coeffs.empty()) return SampledSignal::zeros(grid, "reconstruction");
  HermiteBasis basis(grid, d.n_max());
  std::vector<Complex> v(grid.size());
  for (int n = 0; n <= d.n_max(); ++n) {
    const Complex c = d.coeffs[static_cast<std::size_t>(n)];
    if (c == Complex{}) continue;
    auto row = basis.row(n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * row[i];
  }
  return SampledSignal(grid, std::move(v), "reconstruction");
}

CoefficientMomentumNumber coefficient_momentum_number(const NumberDecomposition& d) {
  const auto& c = d.coeffs;
  const std::size_t len = c.size();
  const Complex I(0.0, 1.0);
  auto apply_p = [&](const std::vector<Complex>& v) {
    std::vector<Complex> out(len);
    for (std::size_t m = 0; m < len; ++m) {
      const double dm = static_cast<double>(m);
      if (m >= 1) out[m] += I * std::sqrt(dm / 2.0) * v[m - 1];
      if (m + 1 < len) out[m] -= I * std::sqrt((dm + 1.0) / 2.0) * v[m + 1];
    }
    return out;
  };
  std::vector<Complex> nc(len);
  for (std::size_t m = 0; m < len; ++m) nc[m] = static_cast<double>(m) * c[m];
  const std::vector<Complex> pc = apply_p(c);

  CoefficientMomentumNumber out;
  Complex p_mean{}, cross{};
  double n_mean = 0.0;
  for (std::size_t m = 0; m < len; ++m) {
    p_mean += std::conj(c[m]) * pc[m];
    n_mean += static_cast<double>(m) * std::norm(c[m]);
    // <p f | n f>; the symmetrized product is its real part.
    cross += std::conj(pc[m]) * nc[m];
  }
  out.mean_p = p_mean.real();
  out.mean_n = n_mean;
  out.half_anticommutator = cross.real();
  return out;
}

}  // namespace ktur
