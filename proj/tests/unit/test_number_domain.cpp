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

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ktur/error.hpp"
#include "ktur/moments.hpp"
#include "ktur/number_domain.hpp"
#include "ktur/transform.hpp"

using namespace ktur;
using test::gaussian;
using test::hermite;

namespace {

const Grid& grid1024() {
  static const Grid g = make_grid(1024, 10.0);
  return g;
}

const Grid& grid_wide() {
  static const Grid g = make_grid(2048, 16.0);
  return g;
}

}  // namespace

TEST(NumberDomain, EigenfunctionCoefficients) {
  const NumberDecomposition d = decompose(hermite(grid1024(), {2}), 8);
  ASSERT_EQ(d.n_max(), 8);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_NEAR(std::abs(d.coeffs[n] - Complex(n == 2 ? 1.0 : 0.0)), 0.0, 1e-8) << n;
  }
}

TEST(NumberDomain, TwoLevelCoefficients) {
  const NumberDecomposition d = decompose(hermite(grid1024(), {0, 1}), 8);
  EXPECT_NEAR(std::abs(d.coeffs[0] - Complex(std::sqrt(0.5))), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(d.coeffs[1] - Complex(std::sqrt(0.5))), 0.0, 1e-8);
  const NumberMoments m = number_moments(d);
  EXPECT_NEAR(m.mean, 0.5, 1e-12);
  EXPECT_NEAR(m.variance, 0.25, 1e-12);
}

TEST(NumberDomain, CoherentStateIsPoisson) {
  const NumberDecomposition d = decompose(gaussian(grid_wide(), 1.0), 30);
  const double lam2 = 0.5;
  double fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    EXPECT_NEAR(std::norm(d.coeffs[n]), std::exp(-lam2) * std::pow(lam2, n) / fact, 1e-5) << n;
  }
  EXPECT_NEAR(number_moments(d).mean, 0.5, 1e-5);
}

TEST(NumberDomain, EigenstateMoments) {
  const NumberMoments m = number_moments(decompose(hermite(grid1024(), {3}), 10));
  EXPECT_NEAR(m.mean, 3.0, 1e-12);
  EXPECT_LE(std::abs(m.variance), 1e-10);
}

TEST(NumberDomain, RoundTrip) {
  const auto f = hermite(grid1024(), {0, 5});
  EXPECT_LE(norm(reconstruct(decompose(f, 12), grid1024()) - f), 1e-7);
  NumberDecomposition zero{std::vector<Complex>(5), 0.0, grid1024()};
  EXPECT_EQ(max_abs(reconstruct(zero, grid1024())), 0.0);
}

TEST(NumberDomain, TruncatedChirpedGaussian) {
  const auto f = gaussian(grid_wide(), 0.0, 1.0);
  const NumberDecomposition d = decompose(f, 40);
  EXPECT_LE(d.truncation_residual, 1e-6);
  EXPECT_LE(norm(reconstruct(d, grid_wide()) - f), 1e-5);
}

TEST(NumberDomain, ParsevalAndCoefficientBounds) {
  for (const auto& f : {hermite(grid_wide(), {0, 7}), gaussian(grid_wide(), 1.0, 0.5, 0.3), gaussian(grid_wide(), 0.0, 1.0)}) {
    const NumberDecomposition d = decompose(f, kMaxHermiteOrder);
    EXPECT_NEAR(d.captured() + d.truncation_residual, norm_squared(f), 1e-8);
    EXPECT_LE(d.captured(), 1.0 + 1e-9);
    EXPECT_GE(d.truncation_residual, -1e-9);
  }
}

TEST(NumberDomain, FrftActsAsPhaseOnCoefficients) {
  const auto f = gaussian(grid1024(), 1.0, 0.5, 0.5);
  const NumberDecomposition d0 = decompose(f, 10);
  for (double alpha : {0.4, 1.3, 2.6}) {
    const NumberDecomposition d = decompose(apply_transform(make_frft(alpha), f), 10);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_NEAR(std::abs(d.coeffs[n] - std::polar(1.0, -alpha * n) * d0.coeffs[n]), 0.0, 1e-6);
    }
  }
}

TEST(NumberDomain, CoefficientSpaceMatchesOperatorEngine) {
  const PolyObservable p = momentum_observable();
  const NumberObservable n;
  for (const auto& f : {hermite(grid_wide(), {0, 1}), gaussian(grid_wide(), 1.0), gaussian(grid_wide(), 0.5, 1.0, 0.3)}) {
    const CoefficientMomentumNumber c = coefficient_momentum_number(decompose(f, kMaxHermiteOrder));
    const double op = 0.5 * (product_expectation(p, n, f) + product_expectation(n, p, f)).real();
    EXPECT_NEAR(c.half_anticommutator, op, 1e-6) << f.label();
    EXPECT_NEAR(c.mean_p, expectation(p, f), 1e-8);
    EXPECT_NEAR(c.mean_n, expectation(n, f), 1e-8);
  }
}

TEST(NumberDomain, Preconditions) {
  try {
    decompose(hermite(grid1024(), {0}), 40);
    FAIL() << "expected resolution";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resolution);
  }
  EXPECT_THROW(decompose(hermite(grid_wide(), {0}), 65), Error);
  try {
    number_moments(decompose(gaussian(grid_wide(), 0.0, 1.0), 6));
    FAIL() << "expected insufficient_basis";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient_basis);
  }
}
