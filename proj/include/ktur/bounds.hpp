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

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "ktur/kernel.hpp"
#include "ktur/moments.hpp"

namespace ktur {

/// Schrodinger-Robertson report: lhs = sigma2_1 sigma2_2 >= f_term^2 + w_term^2 / 4.
struct UrReport {
  double sigma2_1 = 0.0;
  double sigma2_2 = 0.0;
  double f_term = 0.0;
  double w_term = 0.0;
  double bound = 0.0;
  /// Commutator term weighted w^2 instead of w^2 / 4 (GTF only).
  std::optional<double> bound_unscaled_commutator;
  double lhs = 0.0;
  double margin = 0.0;
  /// bound / lhs, or 1 when both vanish.
  double saturation = 1.0;
  std::vector<std::string> labels;

  /// margin >= -tol * max(1, lhs).
  bool holds(double tol = 1e-7) const noexcept;
};

UrReport make_report(double sigma2_1, double sigma2_2, double f_term, double w_term,
                     std::vector<std::string> labels);

struct WfMatrices {
  Eigen::MatrixXd w;
  Eigen::MatrixXd f;
};

/// Second moments arranged as dim x dim blocks (symmetrized cross block).
struct CovarianceBlocks {
  Eigen::MatrixXd xx;
  Eigen::MatrixXd xp;  ///< Cov(x_i, p_j); the px block is its transpose.
  Eigen::MatrixXd pp;
};

CovarianceBlocks covariance_blocks(const MomentSet& m);

/// (C1^T)^-1 (B1 - B2) C2^-1.
Eigen::MatrixXd w_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2);
/// (C1^T)^-1 (B1 Dxp + Dpx B2 + B1 Dxx B2 + Dpp) C2^-1.
Eigen::MatrixXd f_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const CovarianceBlocks& d);
Eigen::MatrixXd f_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const MomentSet& m);
WfMatrices wf_matrices(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const MomentSet& m);

/// Closed-form bound for two quadratic kernels; variances by the operator route.
UrReport ur_quadratic(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const SampledSignal& f);

/// Numeric bound for arbitrary Hermitian observables.
template <Observable O1, Observable O2>
UrReport ur_generic(const O1& o1, const O2& o2, const SampledSignal& f) {
  const double s1 = covariance(o1, o1, f);
  const double s2 = covariance(o2, o2, f);
  const double ft = covariance(o1, o2, f);
  const double wt = commutator_expectation(o1, o2, f);
  return make_report(s1, s2, ft, wt, {std::string(o1.label), std::string(o2.label)});
}

double frft_bound(double alpha, double beta, const MomentSet& m);
/// (sigma_x^2)^2 cos^2 alpha + sin^2 alpha / 4: frft_bound at beta = 0 for
/// an uncorrelated signal.
double frft_bound_uncorrelated(double alpha, const MomentSet& m);

struct LctParams {
  double a = 1.0;
  double b = 0.0;
  double d = 1.0;
};

double lct_bound(const LctParams& m1, const LctParams& m2, const MomentSet& m);
double squeeze_bound(double alpha, double beta, double theta, const MomentSet& m);

struct GtfBound {
  double cov = 0.0;
  double w = 0.0;
  /// cov^2 + w^2 / 4.
  double bound = 0.0;
  /// cov^2 + w^2.
  double bound_unscaled_commutator = 0.0;
};

/// Standard GTF (l = sin phi, g = cot phi / 2, f = x^3).
GtfBound gtf_bound(double phi1, double phi2, const MomentSet& m, const HigherMoments& hm);

/// Momentum vs. number operator: sigma_n^2 from the Hermite decomposition,
/// F = 1/2 <{p, n}> - <p><n>, w = <(1/i)[p, n]> = -<x>.
UrReport pn_bound(const SampledSignal& f, int n_max);

}  // namespace ktur
