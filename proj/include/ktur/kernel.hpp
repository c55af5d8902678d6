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

#include <complex>
#include <optional>
#include <string>

#include "ktur/grid.hpp"
#include "ktur/polynomial.hpp"

namespace ktur {

inline constexpr int kMaxExtraPhaseDegree = 6;

/// Kernel of the form
///   K(p, x) = prefactor * exp(i [ 1/2 p.A p + P(p) + 1/2 x.B x + X(x) - p.C x ])
/// where A, B are real symmetric, C is real nonsingular and P, X are optional
/// polynomial phases (1-D only). Unitarity requires |prefactor|^2 (2 pi)^n = |det C|.
class QuadPhaseKernel {
 public:
  QuadPhaseKernel(Eigen::MatrixXd a_quad, Eigen::MatrixXd b_quad, Eigen::MatrixXd c_mat, Complex prefactor,
                  Polynomial extra_x_phase = {}, Polynomial extra_p_phase = {}, std::string label = {});

  /// 1-D convenience constructor.
  static QuadPhaseKernel scalar(double a_quad, double b_quad, double c_mat, Complex prefactor,
                                Polynomial extra_x_phase = {}, Polynomial extra_p_phase = {},
                                std::string label = {});

  int dim() const noexcept { return static_cast<int>(c_mat_.rows()); }
  const Eigen::MatrixXd& a_quad() const noexcept { return a_quad_; }
  const Eigen::MatrixXd& b_quad() const noexcept { return b_quad_; }
  const Eigen::MatrixXd& c_mat() const noexcept { return c_mat_; }
  Complex prefactor() const noexcept { return prefactor_; }
  const Polynomial& extra_x_phase() const noexcept { return extra_x_phase_; }
  const Polynomial& extra_p_phase() const noexcept { return extra_p_phase_; }
  const std::string& label() const noexcept { return label_; }
  bool has_extra_phase() const noexcept { return !extra_x_phase_.is_zero() || !extra_p_phase_.is_zero(); }

  // Scalar coefficients; valid when dim() == 1.
  double a() const { return a_quad_(0, 0); }
  double b() const { return b_quad_(0, 0); }
  double c() const { return c_mat_(0, 0); }

  /// Phase of the kernel at (p, x), without the prefactor. 1-D only.
  double phase(double p, double x) const;

 private:
  Eigen::MatrixXd a_quad_;
  Eigen::MatrixXd b_quad_;
  Eigen::MatrixXd c_mat_;
  Complex prefactor_;
  Polynomial extra_x_phase_;
  Polynomial extra_p_phase_;
  std::string label_;
};

/// Fractional Fourier transform of angle alpha (radians).
QuadPhaseKernel make_frft(double alpha);

/// 1-D linear canonical transform with matrix (a, b; c, d). c does not enter
/// the kernel and is only recorded in the label.
QuadPhaseKernel make_lct(double a, double b, double d, std::optional<double> c = std::nullopt);

/// Fractional squeezing transform.
QuadPhaseKernel make_squeeze(double alpha, double theta);

/// Generalized time-frequency kernel
///   sqrt(1/(2 pi i l)) exp(i[(p^2 + x^2) g - x p / l + f(p) - f(x)]).
QuadPhaseKernel make_gtf(double phi, double g_of_phi, double l_of_phi, const Polynomial& f_poly);

/// make_gtf with l = sin(phi), g = cot(phi) / 2 and, by default, f(x) = x^3.
QuadPhaseKernel make_gtf_standard(double phi, const Polynomial& f_poly = Polynomial::monomial(3));

Complex eval_kernel(const QuadPhaseKernel& k, double p, double x);

}  // namespace ktur
