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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ktur/bounds.hpp"
#include "ktur/cli.hpp"
#include "ktur/error.hpp"
#include "ktur/number_domain.hpp"
#include "ktur/serialize.hpp"
#include "ktur/transform.hpp"

namespace ktur::cli {

namespace {

constexpr double kQuadraticParsevalTolerance = 1e-7;
constexpr double kExtraPhaseParsevalTolerance = 1e-5;
constexpr double kMarginTolerance = 1e-7;

SampledSignal load_signal(const RunConfig& cfg) {
  const Grid g = make_grid(cfg.n, cfg.half_width);
  return sample(parse_signal(cfg.signal, cfg.normalize), g);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path);
  out << text;
}

Json grid_json(const Grid& g) {
  Json j;
  j["n"] = g.size();
  j["half_width"] = g.half_width();
  return j;
}

Grid output_grid(const RunConfig& cfg, const QuadPhaseKernel& k, const SampledSignal& f) {
  if (!cfg.out_n && !cfg.out_half_width) return default_output_grid(k, f);
  return make_grid(cfg.out_n.value_or(f.grid().size()), cfg.out_half_width.value_or(f.grid().half_width()));
}

/// One side of an uncertainty pair: a sampled kernel when one exists, and the
/// transformed momentum as an observable in every case.
struct Side {
  std::optional<QuadPhaseKernel> kernel;
  PolyObservable observable;
};

Side make_side(const KernelSpec& spec) {
  if (spec.family == "x") return {std::nullopt, position_observable()};
  if (spec.family == "p") return {std::nullopt, momentum_observable()};
  try {
    QuadPhaseKernel k = build_kernel(spec);
    PolyObservable o = transformed_observable(k);
    return {std::move(k), std::move(o)};
  } catch (const DegenerateKernelError&) {
    // The FrFT momentum stays well defined where the kernel collapses.
    if (spec.family == "frft") return {std::nullopt, frft_observable(spec.alpha)};
    throw;
  }
}

struct UrResult {
  UrReport report;
  std::optional<double> closed_form;
};

std::optional<double> closed_form_bound(const RunConfig& cfg, const SampledSignal& f) {
  const KernelSpec& k1 = cfg.kernel1;
  const KernelSpec& k2 = cfg.kernel2;
  if (k1.family != k2.family) return std::nullopt;
  const std::string& fam = k1.family;
  if (fam == "frft") return frft_bound(k1.alpha, k2.alpha, moment_set(f));
  if (fam == "lct") return lct_bound({k1.a, k1.b, k1.d}, {k2.a, k2.b, k2.d}, moment_set(f));
  if (fam == "squeeze" && k1.theta == k2.theta) return squeeze_bound(k1.alpha, k2.alpha, k1.theta, moment_set(f));
  if (fam == "gtf") return gtf_bound(k1.phi, k2.phi, moment_set(f), higher_moments(f)).bound;
  return std::nullopt;
}

UrResult evaluate_ur(const RunConfig& cfg, const SampledSignal& f) {
  const Side s1 = make_side(cfg.kernel1);
  const Side s2 = make_side(cfg.kernel2);
  UrResult r;
  const bool quadratic = s1.kernel && s2.kernel && !s1.kernel->has_extra_phase() && !s2.kernel->has_extra_phase();
  if (quadratic) {
    r.report = ur_quadratic(*s1.kernel, *s2.kernel, f);
  } else {
    r.report = ur_generic(s1.observable, s2.observable, f);
    const bool gtf_pair = cfg.kernel1.family == "gtf" && cfg.kernel2.family == "gtf";
    if (gtf_pair) r.report.bound_unscaled_commutator = r.report.f_term * r.report.f_term + r.report.w_term * r.report.w_term;
  }
  r.closed_form = closed_form_bound(cfg, f);
  return r;
}

const char* kReportColumns = "sigma2_1,sigma2_2,f_term,w_term,lhs,bound,margin,saturation";

std::string report_row(const UrReport& r) {
  std::ostringstream os;
  os << format_double(r.sigma2_1) << ',' << format_double(r.sigma2_2) << ',' << format_double(r.f_term) << ','
     << format_double(r.w_term) << ',' << format_double(r.lhs) << ',' << format_double(r.bound) << ','
     << format_double(r.margin) << ',' << format_double(r.saturation);
  return os.str();
}

std::string signal_csv(const SampledSignal& t) {
  std::ostringstream os;
  os << "p,re,im\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << format_double(t.grid().x(i)) << ',' << format_double(t[i].real()) << ',' << format_double(t[i].imag())
       << '\n';
  }
  return os.str();
}

}  // namespace

int cmd_transform(const RunConfig& cfg) {
  const SampledSignal f = load_signal(cfg);
  const QuadPhaseKernel k = build_kernel(cfg.kernel1);
  const Grid og = output_grid(cfg, k, f);
  const SampledSignal t = apply_transform(k, f, og);
  const UnitarityReport u = unitarity(f, t);
  const double tol = k.has_extra_phase() ? kExtraPhaseParsevalTolerance : kQuadraticParsevalTolerance;

  Json j;
  j["command"] = "transform";
  j["kernel"] = to_json(k);
  j["signal"] = cfg.signal;
  j["grid_in"] = grid_json(f.grid());
  j["grid_out"] = grid_json(og);
  j["unitarity"] = to_json(u);
  j["tolerance"] = tol;
  j["passed"] = u.relative_defect <= tol;

  if (!cfg.out.empty()) {
    emit(cfg.out, signal_csv(t));
    emit(cfg.out + ".json", dump(j));
    emit("", dump(j));
  } else if (cfg.format == "csv") {
    emit("", signal_csv(t));
  } else {
    emit("", dump(j));
  }
  return u.relative_defect <= tol ? kSuccess : kInvariantFailure;
}

int cmd_moments(const RunConfig& cfg) {
  const SampledSignal f = load_signal(cfg);
  Json j;
  j["command"] = "moments";
  j["signal"] = cfg.signal;
  j["grid"] = grid_json(f.grid());
  j["moments"] = to_json(moment_set(f));
  j["higher_moments"] = to_json(higher_moments(f));
  if (cfg.kernel1_given) {
    const QuadPhaseKernel k = build_kernel(cfg.kernel1);
    const Grid og = output_grid(cfg, k, f);
    const PolyObservable o = transformed_observable(k);
    Json t;
    t["kernel"] = to_json(k);
    t["grid_out"] = grid_json(og);
    t["transformed_domain"] = to_json(transformed_domain_moments(k, f, og));
    t["operator_mean"] = expectation(o, f);
    t["operator_variance"] = covariance(o, o, f);
    j["transformed"] = std::move(t);
  }
  if (cfg.format == "csv") {
    const MomentSet m = moment_set(f);
    std::ostringstream os;
    os << "mean_x,mean_p,dxx,dpp,dxp,r_xp\n"
       << format_double(m.mean_x) << ',' << format_double(m.mean_p) << ',' << format_double(m.dxx) << ','
       << format_double(m.dpp) << ',' << format_double(m.dxp) << ',' << format_double(m.r_xp) << '\n';
    emit(cfg.out, os.str());
  } else {
    emit(cfg.out, dump(j));
  }
  return kSuccess;
}

int cmd_ur(const RunConfig& cfg) {
  const SampledSignal f = load_signal(cfg);
  const UrResult r = evaluate_ur(cfg, f);
  if (cfg.format == "csv") {
    emit(cfg.out, std::string(kReportColumns) + "\n" + report_row(r.report) + "\n");
  } else {
    Json j = to_json(r.report);
    if (r.closed_form) j["closed_form_bound"] = *r.closed_form;
    emit(cfg.out, dump(j));
  }
  return r.report.holds(kMarginTolerance) ? kSuccess : kInvariantFailure;
}

int cmd_sweep(const RunConfig& cfg) {
  const SampledSignal f = load_signal(cfg);
  if (cfg.sweeps.empty()) throw Error(ErrorKind::invalid_argument, "sweep needs --sweep param=start:stop:count");
  const SweepAxis& ax0 = cfg.sweeps[0];
  const SweepAxis ax1 = cfg.sweeps.size() > 1 ? cfg.sweeps[1] : SweepAxis{"", 0.0, 0.0, 1};
  const int rows = ax0.count * ax1.count;

  // Validate parameter names before fanning out.
  {
    RunConfig probe = cfg;
    for (const auto& ax : cfg.sweeps) set_param(probe, ax.param, ax.start);
  }

  std::vector<UrReport> reports(static_cast<std::size_t>(rows));
  std::vector<std::optional<Error>> errors(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < rows; ++idx) {
    RunConfig point = cfg;
    set_param(point, ax0.param, ax0.value(idx / ax1.count));
    if (!ax1.param.empty()) set_param(point, ax1.param, ax1.value(idx % ax1.count));
    try {
      reports[static_cast<std::size_t>(idx)] = evaluate_ur(point, f).report;
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(idx)] = e;
    }
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }

  bool all_hold = true;
  for (const auto& r : reports) all_hold = all_hold && r.holds(kMarginTolerance);

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (int idx = 0; idx < rows; ++idx) {
      Json row;
      row[ax0.param] = ax0.value(idx / ax1.count);
      if (!ax1.param.empty()) row[ax1.param] = ax1.value(idx % ax1.count);
      row["report"] = to_json(reports[static_cast<std::size_t>(idx)]);
      arr.push_back(std::move(row));
    }
    emit(cfg.out, dump(arr));
  } else {
    std::ostringstream os;
    os << ax0.param << ',';
    if (!ax1.param.empty()) os << ax1.param << ',';
    os << kReportColumns << '\n';
    for (int idx = 0; idx < rows; ++idx) {
      os << format_double(ax0.value(idx / ax1.count)) << ',';
      if (!ax1.param.empty()) os << format_double(ax1.value(idx % ax1.count)) << ',';
      os << report_row(reports[static_cast<std::size_t>(idx)]) << '\n';
    }
    emit(cfg.out, os.str());
  }
  return all_hold ? kSuccess : kInvariantFailure;
}

int cmd_pn_ur(const RunConfig& cfg) {
  const SampledSignal f = load_signal(cfg);
  const UrReport r = pn_bound(f, cfg.n_max);
  const NumberDecomposition d = decompose(f, cfg.n_max);
  const NumberMoments nm = number_moments(d);
  if (cfg.format == "csv") {
    emit(cfg.out, std::string(kReportColumns) + "\n" + report_row(r) + "\n");
  } else {
    Json j = to_json(r);
    j["commutator_term"] = 0.25 * r.w_term * r.w_term;
    Json n;
    n["mean"] = nm.mean;
    n["variance"] = nm.variance;
    n["raw_mean"] = nm.raw_mean;
    n["raw_variance"] = nm.raw_variance;
    n["truncation_residual"] = d.truncation_residual;
    j["number"] = std::move(n);
    emit(cfg.out, dump(j));
  }
  return r.holds(kMarginTolerance) ? kSuccess : kInvariantFailure;
}

int cmd_selftest(const RunConfig& cfg) {
  const auto results = run_selftest({cfg.n, cfg.half_width});
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.json) {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json j;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["value"] = r.value;
      j["tolerance"] = r.tolerance;
      j["detail"] = r.detail;
      arr.push_back(std::move(j));
    }
    Json top;
    top["passed"] = all;
    top["results"] = std::move(arr);
    std::cout << dump(top);
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst=" << format_double(r.value)
                << " tol=" << format_double(r.tolerance);
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << '\n';
    }
    std::cout << (all ? "all invariants passed" : "some invariants failed") << '\n';
  }
  return all ? kSuccess : kInvariantFailure;
}

}  // namespace ktur::cli
