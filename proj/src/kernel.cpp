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

#include "ktur/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ktur/error.hpp"
#include "ktur/serialize.hpp"

namespace ktur {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerateTol = 1e-6;

std::string fmt_params(std::initializer_list<double> values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ",";
    out += format_double(v);
  }
  return out;
}

void require_symmetric(const Eigen::MatrixXd& m, const char* name) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::invalid_argument, std::string(name) + " must be symmetric");
  }
}

}  // namespace

QuadPhaseKernel::QuadPhaseKernel(Eigen::MatrixXd a_quad, Eigen::MatrixXd b_quad, Eigen::MatrixXd c_mat,
                                 Complex prefactor, Polynomial extra_x_phase, Polynomial extra_p_phase,
                                 std::string label)
    : a_quad_(std::move(a_quad)),
      b_quad_(std::move(b_quad)),
      c_mat_(std::move(c_mat)),
      prefactor_(prefactor),
      extra_x_phase_(std::move(extra_x_phase)),
      extra_p_phase_(std::move(extra_p_phase)),
      label_(std::move(label)) {
  const auto n = c_mat_.rows();
  if (n < 1 || c_mat_.cols() != n || a_quad_.rows() != n || a_quad_.cols() != n || b_quad_.rows() != n ||
      b_quad_.cols() != n) {
    throw Error(ErrorKind::invalid_argument, "kernel matrices must all be square with the same dimension");
  }
  if (!a_quad_.allFinite() || !b_quad_.allFinite() || !c_mat_.allFinite() || !std::isfinite(prefactor_.real()) ||
      !std::isfinite(prefactor_.imag())) {
    throw Error(ErrorKind::invalid_argument, "kernel coefficients must be finite");
  }
  require_symmetric(a_quad_, "a_quad");
  require_symmetric(b_quad_, "b_quad");
  const double det = c_mat_.determinant();
  if (std::abs(det) <= 1e-12) throw Error(ErrorKind::degenerate_kernel, "c_mat is singular");
  const double parseval = std::norm(prefactor_) * std::pow(kTwoPi, static_cast<double>(n)) / std::abs(det);
  if (std::abs(parseval - 1.0) > 1e-9) {
    throw Error(ErrorKind::invalid_argument,
                "prefactor violates the unitarity constraint |pref|^2 (2pi)^n = |det C| (ratio " +
                    std::to_string(parseval) + ")");
  }
  if (has_extra_phase()) {
    if (n != 1) throw Error(ErrorKind::invalid_argument, "extra polynomial phases are supported for dim 1 only");
    if (extra_x_phase_.degree() > kMaxExtraPhaseDegree || extra_p_phase_.degree() > kMaxExtraPhaseDegree) {
      throw Error(ErrorKind::invalid_argument, "extra phase polynomials are limited to degree 6");
    }
  }
}

QuadPhaseKernel QuadPhaseKernel::scalar(double a_quad, double b_quad, double c_mat, Complex prefactor,
                                        Polynomial extra_x_phase, Polynomial extra_p_phase, std::string label) {
  return QuadPhaseKernel(Eigen::MatrixXd::Constant(1, 1, a_quad), Eigen::MatrixXd::Constant(1, 1, b_quad),
                         Eigen::MatrixXd::Constant(1, 1, c_mat), prefactor, std::move(extra_x_phase),
                         std::move(extra_p_phase), std::move(label));
}

double QuadPhaseKernel::phase(double p, double x) const {
  return 0.5 * a() * p * p + extra_p_phase_(p) + 0.5 * b() * x * x + extra_x_phase_(x) - p * c() * x;
}

QuadPhaseKernel make_frft(double alpha) {
  const double s = std::sin(alpha);
  if (std::abs(s) < kDegenerateTol) {
    const bool identity = std::cos(alpha) > 0.0;
    throw DegenerateKernelError(identity ? DegenerateLimit::identity : DegenerateLimit::parity,
                                "frft(" + fmt_params({alpha}) + ") is degenerate: the kernel reduces to " +
                                    (identity ? "delta(p - x)" : "delta(p + x)"));
  }
  const double cot = std::cos(alpha) / s;
  const Complex pref = std::sqrt(Complex(1.0, -cot) / kTwoPi);
  return QuadPhaseKernel::scalar(cot, cot, 1.0 / s, pref, {}, {}, "frft(" + fmt_params({alpha}) + ")");
}

QuadPhaseKernel make_lct(double a, double b, double d, std::optional<double> c) {
  if (std::abs(b) < 1e-12) {
    throw DegenerateKernelError(DegenerateLimit::scaling,
                                "lct with b = 0 is a scaling/chirp map and has no integral kernel");
  }
  const Complex pref = std::sqrt(Complex(1.0, 0.0) / Complex(0.0, kTwoPi * b));
  std::string label = "lct(" + fmt_params({a, b}) + "," + (c ? fmt_params({*c}) : std::string("_")) + "," +
                      fmt_params({d}) + ")";
  return QuadPhaseKernel::scalar(d / b, a / b, 1.0 / b, pref, {}, {}, std::move(label));
}

QuadPhaseKernel make_squeeze(double alpha, double theta) {
  const double ct = std::cos(theta);
  if (std::abs(ct) < kDegenerateTol) {
    throw Error(ErrorKind::singular_parameter, "squeeze theta = " + fmt_params({theta}) + " has cos(theta) = 0");
  }
  const double sh = std::sinh(alpha);
  if (std::abs(sh) < kDegenerateTol) {
    throw DegenerateKernelError(DegenerateLimit::identity,
                                "squeeze(" + fmt_params({alpha, theta}) + ") is degenerate: identity-like limit");
  }
  const double quad = 1.0 / (std::tanh(alpha) * ct);
  const double tilt = std::tan(theta);
  const Complex pref = std::sqrt(Complex(1.0, 0.0) / Complex(0.0, kTwoPi * ct * sh));
  return QuadPhaseKernel::scalar(quad - tilt, quad + tilt, 1.0 / (sh * ct), pref, {}, {},
                                 "squeeze(" + fmt_params({alpha, theta}) + ")");
}

QuadPhaseKernel make_gtf(double phi, double g_of_phi, double l_of_phi, const Polynomial& f_poly) {
  if (std::abs(l_of_phi) < kDegenerateTol) {
    throw DegenerateKernelError(std::cos(phi) > 0.0 ? DegenerateLimit::identity : DegenerateLimit::scaling,
                                "gtf with l(phi) = 0 is degenerate");
  }
  const Complex pref = std::sqrt(Complex(1.0, 0.0) / Complex(0.0, kTwoPi * l_of_phi));
  return QuadPhaseKernel::scalar(2.0 * g_of_phi, 2.0 * g_of_phi, 1.0 / l_of_phi, pref, f_poly * -1.0, f_poly,
                                 "gtf(" + fmt_params({phi}) + ";f=" + f_poly.to_string() + ")");
}

QuadPhaseKernel make_gtf_standard(double phi, const Polynomial& f_poly) {
  const double s = std::sin(phi);
  if (std::abs(s) < kDegenerateTol) {
    // At phi = pi the extra phases no longer cancel, so only phi = 0 has a clean limit.
    throw DegenerateKernelError(std::cos(phi) > 0.0 ? DegenerateLimit::identity : DegenerateLimit::scaling,
                                "gtf(" + fmt_params({phi}) + ") is degenerate: sin(phi) = 0");
  }
  return make_gtf(phi, 0.5 * std::cos(phi) / s, s, f_poly);
}

Complex eval_kernel(const QuadPhaseKernel& k, double p, double x) {
  return k.prefactor() * std::polar(1.0, k.phase(p, x));
}

}  // namespace ktur
