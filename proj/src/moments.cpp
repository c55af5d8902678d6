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

#include "ktur/moments.hpp"

#include <cmath>
#include <sstream>

#include "ktur/error.hpp"
#include "ktur/serialize.hpp"
#include "ktur/transform.hpp"

namespace ktur {

namespace detail {

void require_normalized(const SampledSignal& f) {
  const double n2 = norm_squared(f);
  if (std::abs(n2 - 1.0) > kNormalizationTolerance) {
    std::ostringstream os;
    os << "signal '" << f.label() << "' is not normalized (<f|f> = " << n2 << ")";
    throw Error(ErrorKind::not_normalized, os.str());
  }
}

Expectation checked_real(Complex z, const char* what) {
  Expectation e;
  e.value = z.real();
  e.residue = std::abs(z.imag()) / std::max(1.0, std::abs(z.real()));
  if (e.residue > kHardResidue) {
    std::ostringstream os;
    os << what << " has imaginary residue " << z.imag() << " (real part " << z.real() << ")";
    throw Error(ErrorKind::hermiticity_violation, os.str());
  }
  return e;
}

}  // namespace detail

SampledSignal PolyObservable::apply(const SampledSignal& f, DerivativeMode mode) const {
  if (x_poly.degree() > kMaxObservableDegree) {
    throw Error(ErrorKind::invalid_argument, "observable polynomial degree exceeds 6");
  }
  SampledSignal gx = multiply_pointwise(f, [this](double x) { return x_poly(x); });
  if (p_coeff == 0.0) return gx;
  return Complex(p_coeff) * spectral_derivative(f, mode) + gx;
}

PolyObservable position_observable() { return {0.0, Polynomial{0.0, 1.0}, "x"}; }

PolyObservable momentum_observable() { return {1.0, {}, "p"}; }

PolyObservable power_observable(int k) { return {0.0, Polynomial::monomial(k), "x^" + std::to_string(k)}; }

SampledSignal NumberObservable::apply(const SampledSignal& f, DerivativeMode mode) const {
  const SampledSignal pf = spectral_derivative(f, mode);
  const SampledSignal ppf = spectral_derivative(pf, DerivativeMode::unsafe);
  const SampledSignal x2f = multiply_pointwise(f, [](double x) { return x * x; });
  return Complex(0.5) * (x2f + ppf - f);
}

PolyObservable commutator_closed_form(const PolyObservable& o1, const PolyObservable& o2) {
  PolyObservable out;
  out.x_poly = o1.x_poly.derivative() * o2.p_coeff - o2.x_poly.derivative() * o1.p_coeff;
  out.label = "(1/i)[" + o1.label + "," + o2.label + "]";
  return out;
}

MomentSet moment_set(const SampledSignal& f) {
  const PolyObservable x = position_observable();
  const PolyObservable p = momentum_observable();
  MomentSet m;
  m.mean_x = expectation(x, f);
  m.mean_p = expectation(p, f);
  m.dxx = covariance(x, x, f);
  m.dpp = covariance(p, p, f);
  m.dxp = covariance(x, p, f);
  const double denom = std::sqrt(std::max(0.0, m.dxx * m.dpp));
  m.r_xp = denom > 0.0 ? m.dxp / denom : 0.0;
  return m;
}

HigherMoments higher_moments(const SampledSignal& f) {
  detail::require_normalized(f);
  double mx = 0.0, mx2 = 0.0, mx3 = 0.0, mx4 = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.grid().x(i);
    const double w = std::norm(f[i]);
    mx += x * w;
    mx2 += x * x * w;
    mx3 += x * x * x * w;
    mx4 += x * x * x * x * w;
  }
  const double h = f.grid().spacing();
  HigherMoments hm;
  hm.mean_x2 = mx2 * h;
  hm.mean_x3 = mx3 * h;
  hm.mean_x4 = mx4 * h;
  hm.var_x2 = hm.mean_x4 - hm.mean_x2 * hm.mean_x2;
  hm.cov_x_x2 = hm.mean_x3 - mx * h * hm.mean_x2;
  hm.cov_x2_p = covariance(power_observable(2), momentum_observable(), f);
  return hm;
}

PolyObservable transformed_observable(const QuadPhaseKernel& k) {
  if (k.dim() != 1) throw Error(ErrorKind::invalid_argument, "transformed_observable supports dim 1 kernels only");
  const double inv_c = 1.0 / k.c();
  PolyObservable o;
  o.p_coeff = inv_c;
  o.x_poly = (Polynomial{0.0, k.b()} + k.extra_x_phase().derivative()) * inv_c;
  o.label = "p_K[" + k.label() + "]";
  return o;
}

PolyObservable frft_observable(double alpha) {
  PolyObservable o;
  o.p_coeff = std::sin(alpha);
  o.x_poly = Polynomial{0.0, std::cos(alpha)};
  o.label = "p_frft(" + format_double(alpha) + ")";
  return o;
}

DomainMoments coordinate_moments(const SampledSignal& g) {
  double mass = 0.0, first = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double w = std::norm(g[j]);
    mass += w;
    first += g.grid().x(j) * w;
  }
  DomainMoments dm;
  if (mass == 0.0) return dm;
  dm.mean = first / mass;
  double second = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double d = g.grid().x(j) - dm.mean;
    second += d * d * std::norm(g[j]);
  }
  dm.variance = second / mass;
  dm.mass = mass * g.grid().spacing();
  return dm;
}

DomainMoments transformed_domain_moments(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid) {
  return coordinate_moments(apply_transform(k, f, out_grid));
}

}  // namespace ktur
