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

#include <concepts>
#include <string>

#include "ktur/grid.hpp"
#include "ktur/kernel.hpp"
#include "ktur/polynomial.hpp"

namespace ktur {

/// Residue above which an expectation is reported as noisy.
inline constexpr double kSoftResidue = 1e-8;
/// Residue above which the observable is treated as non-Hermitian on f.
inline constexpr double kHardResidue = 1e-6;
inline constexpr double kNormalizationTolerance = 1e-6;
inline constexpr int kMaxObservableDegree = 6;

/// o = p_coeff * p + g(x) with g a real polynomial.
struct PolyObservable {
  double p_coeff = 0.0;
  Polynomial x_poly;
  std::string label;

  SampledSignal apply(const SampledSignal& f, DerivativeMode mode = DerivativeMode::checked) const;
};

PolyObservable position_observable();
PolyObservable momentum_observable();
/// x^k.
PolyObservable power_observable(int k);

/// n = (x^2 + p^2 - 1) / 2, applied as two first-order steps.
struct NumberObservable {
  std::string label = "n";
  SampledSignal apply(const SampledSignal& f, DerivativeMode mode = DerivativeMode::checked) const;
};

template <class O>
concept Observable = requires(const O& o, const SampledSignal& f, DerivativeMode mode) {
  { o.apply(f, mode) } -> std::same_as<SampledSignal>;
  { o.label } -> std::convertible_to<std::string>;
};

struct Expectation {
  double value = 0.0;
  /// |Im| / max(1, |Re|) of the underlying complex quadrature.
  double residue = 0.0;
  bool noisy() const noexcept { return residue > kSoftResidue; }
};

namespace detail {
void require_normalized(const SampledSignal& f);
Expectation checked_real(Complex z, const char* what);
}  // namespace detail

template <Observable O>
Expectation expectation_detail(const O& o, const SampledSignal& f) {
  detail::require_normalized(f);
  return detail::checked_real(inner_product(f, o.apply(f)), "expectation");
}

template <Observable O>
double expectation(const O& o, const SampledSignal& f) {
  return expectation_detail(o, f).value;
}

/// <f| o1 o2 |f> as a complex number, o2 applied first. Decay is checked on
/// f only: o2 f inherits it, and re-checking would trip on the roundoff
/// floor that repeated spectral derivatives amplify.
template <Observable O1, Observable O2>
Complex product_expectation(const O1& o1, const O2& o2, const SampledSignal& f) {
  detail::require_normalized(f);
  return inner_product(f, o1.apply(o2.apply(f), DerivativeMode::unsafe));
}

/// 1/2 <{o1, o2}> - <o1><o2>, both orderings applied explicitly.
template <Observable O1, Observable O2>
Expectation covariance_detail(const O1& o1, const O2& o2, const SampledSignal& f) {
  const Complex sym = 0.5 * (product_expectation(o1, o2, f) + product_expectation(o2, o1, f));
  Expectation e = detail::checked_real(sym, "covariance");
  e.value -= expectation(o1, f) * expectation(o2, f);
  return e;
}

template <Observable O1, Observable O2>
double covariance(const O1& o1, const O2& o2, const SampledSignal& f) {
  return covariance_detail(o1, o2, f).value;
}

/// <(1/i) [o1, o2]>.
template <Observable O1, Observable O2>
Expectation commutator_expectation_detail(const O1& o1, const O2& o2, const SampledSignal& f) {
  const Complex comm = product_expectation(o1, o2, f) - product_expectation(o2, o1, f);
  return detail::checked_real(comm / Complex(0.0, 1.0), "commutator");
}

template <Observable O1, Observable O2>
double commutator_expectation(const O1& o1, const O2& o2, const SampledSignal& f) {
  return commutator_expectation_detail(o1, o2, f).value;
}

/// (1/i)[a1 p + g1(x), a2 p + g2(x)] = a2 g1'(x) - a1 g2'(x).
PolyObservable commutator_closed_form(const PolyObservable& o1, const PolyObservable& o2);

struct MomentSet {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double dxx = 0.0;
  double dpp = 0.0;
  double dxp = 0.0;
  double r_xp = 0.0;
};

MomentSet moment_set(const SampledSignal& f);

struct HigherMoments {
  double mean_x2 = 0.0;
  double mean_x3 = 0.0;
  double mean_x4 = 0.0;
  double var_x2 = 0.0;
  double cov_x2_p = 0.0;
  double cov_x_x2 = 0.0;
};

HigherMoments higher_moments(const SampledSignal& f);

/// K^dagger p K for a 1-D kernel: (p + b x + X'(x)) / c.
PolyObservable transformed_observable(const QuadPhaseKernel& k);

/// sin(alpha) p + cos(alpha) x; defined at every angle, including those where
/// the FrFT kernel itself degenerates.
PolyObservable frft_observable(double alpha);

struct DomainMoments {
  double mean = 0.0;
  double variance = 0.0;
  /// Integral of |T_K f|^2 over the output grid; moments are divided by it.
  double mass = 0.0;
};

/// Moments of the output coordinate under |T_K f|^2 by direct quadrature on
/// the output grid.
DomainMoments transformed_domain_moments(const QuadPhaseKernel& k, const SampledSignal& f, const Grid& out_grid);

/// Moments of the coordinate under |g|^2 for an already transformed signal.
DomainMoments coordinate_moments(const SampledSignal& g);

}  // namespace ktur
