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

#include "ktur/bounds.hpp"

#include <cmath>
#include <limits>

#include "ktur/error.hpp"
#include "ktur/number_domain.hpp"

namespace ktur {

namespace {

constexpr double kVanishing = 1e-12;

void require_quadratic(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2) {
  if (k1.has_extra_phase() || k2.has_extra_phase()) {
    throw Error(ErrorKind::unsupported_closed_form,
                "W/F closed forms need quadratic kernels; use the generic numeric bound");
  }
  if (k1.dim() != k2.dim()) throw Error(ErrorKind::invalid_argument, "kernels differ in dimension");
}

}  // namespace

bool UrReport::holds(double tol) const noexcept { return margin >= -tol * std::max(1.0, lhs); }

UrReport make_report(double sigma2_1, double sigma2_2, double f_term, double w_term,
                     std::vector<std::string> labels) {
  UrReport r;
  r.sigma2_1 = sigma2_1;
  r.sigma2_2 = sigma2_2;
  r.f_term = f_term;
  r.w_term = w_term;
  r.bound = f_term * f_term + 0.25 * w_term * w_term;
  r.lhs = sigma2_1 * sigma2_2;
  r.margin = r.lhs - r.bound;
  if (std::abs(r.lhs) <= kVanishing && r.bound <= kVanishing) {
    r.saturation = 1.0;
  } else if (r.lhs == 0.0) {
    r.saturation = std::numeric_limits<double>::infinity();
  } else {
    r.saturation = r.bound / r.lhs;
  }
  r.labels = std::move(labels);
  return r;
}

CovarianceBlocks covariance_blocks(const MomentSet& m) {
  CovarianceBlocks d;
  d.xx = Eigen::MatrixXd::Constant(1, 1, m.dxx);
  d.xp = Eigen::MatrixXd::Constant(1, 1, m.dxp);
  d.pp = Eigen::MatrixXd::Constant(1, 1, m.dpp);
  return d;
}

Eigen::MatrixXd w_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2) {
  require_quadratic(k1, k2);
  if (k1.dim() == 1) {
    // Written symmetrically so that swapping the kernels flips the sign exactly.
    return Eigen::MatrixXd::Constant(1, 1, (k1.b() - k2.b()) / (k1.c() * k2.c()));
  }
  const Eigen::MatrixXd c1t_inv = k1.c_mat().transpose().inverse();
  const Eigen::MatrixXd c2_inv = k2.c_mat().inverse();
  return c1t_inv * (k1.b_quad() - k2.b_quad()) * c2_inv;
}

Eigen::MatrixXd f_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const CovarianceBlocks& d) {
  require_quadratic(k1, k2);
  const auto n = k1.dim();
  if (d.xx.rows() != n || d.xp.rows() != n || d.pp.rows() != n) {
    throw Error(ErrorKind::invalid_argument, "covariance blocks do not match kernel dimension");
  }
  const Eigen::MatrixXd& b1 = k1.b_quad();
  const Eigen::MatrixXd& b2 = k2.b_quad();
  const Eigen::MatrixXd inner = b1 * d.xp + d.xp.transpose() * b2 + b1 * d.xx * b2 + d.pp;
  return k1.c_mat().transpose().inverse() * inner * k2.c_mat().inverse();
}

Eigen::MatrixXd f_matrix(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const MomentSet& m) {
  return f_matrix(k1, k2, covariance_blocks(m));
}

WfMatrices wf_matrices(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const MomentSet& m) {
  return {w_matrix(k1, k2), f_matrix(k1, k2, m)};
}

UrReport ur_quadratic(const QuadPhaseKernel& k1, const QuadPhaseKernel& k2, const SampledSignal& f) {
  require_quadratic(k1, k2);
  if (k1.dim() != 1) throw Error(ErrorKind::invalid_argument, "ur_quadratic evaluates 1-D kernels");
  const PolyObservable o1 = transformed_observable(k1);
  const PolyObservable o2 = transformed_observable(k2);
  const double s1 = covariance(o1, o1, f);
  const double s2 = covariance(o2, o2, f);
  const MomentSet m = moment_set(f);
  const double ft = f_matrix(k1, k2, m)(0, 0);
  const double wt = w_matrix(k1, k2)(0, 0);
  return make_report(s1, s2, ft, wt, {k1.label(), k2.label()});
}

double frft_bound(double alpha, double beta, const MomentSet& m) {
  const double cross = m.r_xp * std::sqrt(m.dxx * m.dpp);
  const double f = m.dpp * std::sin(alpha) * std::sin(beta) + cross * std::sin(alpha + beta) +
                   m.dxx * std::cos(alpha) * std::cos(beta);
  const double w = std::sin(alpha - beta);
  return f * f + 0.25 * w * w;
}

double frft_bound_uncorrelated(double alpha, const MomentSet& m) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return m.dxx * m.dxx * c * c + 0.25 * s * s;
}

double lct_bound(const LctParams& m1, const LctParams& m2, const MomentSet& m) {
  const double f = m1.a * m2.a * m.dxx + m1.b * m2.b * m.dpp + (m1.a * m2.b + m2.a * m1.b) * m.dxp;
  const double w = m1.a * m2.b - m2.a * m1.b;
  return f * f + 0.25 * w * w;
}

double squeeze_bound(double alpha, double beta, double theta, const MomentSet& m) {
  const double ct = std::cos(theta);
  if (std::abs(ct) < 1e-6) throw Error(ErrorKind::singular_parameter, "squeeze bound: cos(theta) = 0");
  const double st = std::sin(theta);
  const double sa = std::sinh(alpha), sb = std::sinh(beta);
  const double cross = m.r_xp * std::sqrt(m.dxx * m.dpp);
  const double f = m.dpp * sa * sb * ct * ct +
                   m.dxx * (std::cosh(alpha) + sa * st) * (std::cosh(beta) + sb * st) +
                   cross * (sa * sb * std::sin(2.0 * theta) + ct * std::sinh(alpha + beta));
  const double w = ct * std::sinh(alpha - beta);
  return f * f + 0.25 * w * w;
}

GtfBound gtf_bound(double phi1, double phi2, const MomentSet& m, const HigherMoments& hm) {
  const double s1 = std::sin(phi1), s2 = std::sin(phi2);
  const double c1 = std::cos(phi1), c2 = std::cos(phi2);
  GtfBound g;
  g.cov = (m.dpp - 6.0 * hm.cov_x2_p + 9.0 * hm.var_x2) * s1 * s2 + m.dxx * c1 * c2 +
          (m.dxp - 3.0 * hm.cov_x_x2) * std::sin(phi1 + phi2);
  g.w = std::sin(phi2 - phi1);
  g.bound = g.cov * g.cov + 0.25 * g.w * g.w;
  g.bound_unscaled_commutator = g.cov * g.cov + g.w * g.w;
  return g;
}

UrReport pn_bound(const SampledSignal& f, int n_max) {
  const PolyObservable p = momentum_observable();
  const NumberObservable n;
  const NumberDecomposition d = decompose(f, n_max);
  const NumberMoments nm = number_moments(d);
  const double sp = covariance(p, p, f);
  const double ft = covariance(p, n, f);
  const double wt = commutator_expectation(p, n, f);
  return make_report(sp, nm.variance, ft, wt, {p.label, n.label});
}

}  // namespace ktur
