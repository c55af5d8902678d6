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

#include "ktur/serialize.hpp"

#include <charconv>
#include <cmath>

#include "ktur/error.hpp"

namespace ktur {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
  if (m.rows() == 1 && m.cols() == 1) return m(0, 0);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j, const char* field) {
  if (j.is_number()) return Eigen::MatrixXd::Constant(1, 1, j.get<double>());
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::parse_error, std::string(field) + ": expected number or matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::parse_error, std::string(field) + ": ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

Json poly_json(const Polynomial& p) {
  Json a = Json::array();
  for (double c : p.coeffs()) a.push_back(c);
  return a;
}

Polynomial poly_from_json(const Json& j) {
  if (j.is_null()) return {};
  return Polynomial(j.get<std::vector<double>>());
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const QuadPhaseKernel& k) {
  Json j;
  j["label"] = k.label();
  j["dim"] = k.dim();
  j["a_quad"] = matrix_json(k.a_quad());
  j["b_quad"] = matrix_json(k.b_quad());
  j["c_mat"] = matrix_json(k.c_mat());
  j["prefactor_re"] = k.prefactor().real();
  j["prefactor_im"] = k.prefactor().imag();
  j["extra_x_phase"] = poly_json(k.extra_x_phase());
  j["extra_p_phase"] = poly_json(k.extra_p_phase());
  return j;
}

QuadPhaseKernel kernel_from_json(const Json& j) {
  try {
    return QuadPhaseKernel(matrix_from_json(j.at("a_quad"), "a_quad"), matrix_from_json(j.at("b_quad"), "b_quad"),
                           matrix_from_json(j.at("c_mat"), "c_mat"),
                           Complex(j.at("prefactor_re").get<double>(), j.at("prefactor_im").get<double>()),
                           poly_from_json(j.value("extra_x_phase", Json())),
                           poly_from_json(j.value("extra_p_phase", Json())), j.value("label", std::string()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("kernel json: ") + e.what());
  }
}

Json to_json(const MomentSet& m) {
  Json j;
  j["mean_x"] = m.mean_x;
  j["mean_p"] = m.mean_p;
  j["dxx"] = m.dxx;
  j["dpp"] = m.dpp;
  j["dxp"] = m.dxp;
  j["r_xp"] = m.r_xp;
  return j;
}

Json to_json(const HigherMoments& m) {
  Json j;
  j["mean_x2"] = m.mean_x2;
  j["mean_x3"] = m.mean_x3;
  j["mean_x4"] = m.mean_x4;
  j["var_x2"] = m.var_x2;
  j["cov_x2_p"] = m.cov_x2_p;
  j["cov_x_x2"] = m.cov_x_x2;
  return j;
}

Json to_json(const UrReport& r) {
  Json j;
  j["sigma2_1"] = r.sigma2_1;
  j["sigma2_2"] = r.sigma2_2;
  j["f_term"] = r.f_term;
  j["w_term"] = r.w_term;
  j["bound"] = r.bound;
  if (r.bound_unscaled_commutator) j["bound_unscaled_commutator"] = *r.bound_unscaled_commutator;
  j["lhs"] = r.lhs;
  j["margin"] = r.margin;
  j["saturation"] = finite_or_null(r.saturation);
  j["labels"] = r.labels;
  return j;
}

Json to_json(const UnitarityReport& r) {
  Json j;
  j["norm_in"] = r.norm_in;
  j["norm_out"] = r.norm_out;
  j["relative_defect"] = r.relative_defect;
  return j;
}

Json to_json(const NumberDecomposition& d) {
  Json j;
  j["n_max"] = d.n_max();
  j["residual"] = d.truncation_residual;
  Json c = Json::array();
  for (Complex z : d.coeffs) c.push_back(Json::array({z.real(), z.imag()}));
  j["coeffs"] = std::move(c);
  return j;
}

Json to_json(const DomainMoments& m) {
  Json j;
  j["mean"] = m.mean;
  j["variance"] = m.variance;
  j["mass"] = m.mass;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ktur
