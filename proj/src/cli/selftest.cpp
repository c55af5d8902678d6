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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "ktur/bounds.hpp"
#include "ktur/cli.hpp"
#include "ktur/error.hpp"
#include "ktur/number_domain.hpp"
#include "ktur/transform.hpp"

namespace ktur::cli {

namespace {

using std::numbers::pi;

constexpr double kAngles[] = {0.3, 0.7, 1.1, 1.9, 2.6};
constexpr double kSqueezeAngles[] = {0.25, 0.3, 0.35, 0.4, 0.45};

SampledSignal gaussian(const Grid& g, double mu = 0.0, double chirp = 0.0, double p0 = 0.0) {
  GaussianSpec s;
  s.mu = mu;
  s.chirp = chirp;
  s.p0 = p0;
  return sample({s}, g);
}

SampledSignal hermite(const Grid& g, std::vector<int> levels) { return sample({HermiteSpec{std::move(levels)}}, g); }

double distance(const SampledSignal& a, const SampledSignal& b) { return norm(a - b); }

struct Check {
  std::string name;
  double tolerance;
  // Returns the worst observed defect; appends context to `detail`.
  std::function<double(std::string& detail)> body;
};

/// Worst |value| accumulated over a lattice; NaN poisons the result.
struct Worst {
  double value = 0.0;
  void operator()(double v) { value = (std::isnan(v) || std::isnan(value)) ? NAN : std::max(value, v); }
};

}  // namespace

std::vector<InvariantResult> run_selftest(const SelftestOptions& opts) {
  const std::size_t n = opts.n;
  const double L = opts.half_width;
  const Grid g = make_grid(n, L);
  // Wider grids for transforms that spread the signal.
  const Grid g_wide = make_grid(2 * n, 1.2 * L);
  const Grid g_squeeze = make_grid(2 * n, 1.6 * L);
  // Resolves the full Hermite basis up to kMaxHermiteOrder at the default scale.
  const Grid& g_basis = g_squeeze;

  std::vector<Check> checks;

  checks.push_back({"grid.spectral_derivative", 1e-9, [&](std::string&) {
                      const int top = 6;
                      HermiteBasis basis(g, top);
                      Worst w;
                      for (int k = 0; k < top; ++k) {
                        const SampledSignal psi = hermite_function(k, g);
                        const SampledSignal dp = spectral_derivative(psi);
                        // p psi_k = i sqrt((k+1)/2) psi_{k+1} - i sqrt(k/2) psi_{k-1}
                        std::vector<Complex> expect(g.size());
                        for (std::size_t i = 0; i < g.size(); ++i) {
                          Complex v = Complex(0.0, std::sqrt((k + 1) / 2.0)) * basis.row(k + 1)[i];
                          if (k > 0) v -= Complex(0.0, std::sqrt(k / 2.0)) * basis.row(k - 1)[i];
                          expect[i] = v;
                        }
                        w(distance(dp, SampledSignal(g, std::move(expect))));
                      }
                      return w.value;
                    }});

  checks.push_back({"grid.hermite_orthonormality", 1e-10, [&](std::string&) {
                      HermiteBasis basis(g_basis, kMaxHermiteOrder);
                      Worst w;
                      for (int a = 0; a <= kMaxHermiteOrder; ++a) {
                        for (int b = a; b <= kMaxHermiteOrder; ++b) {
                          double s = 0.0;
                          for (std::size_t i = 0; i < g_basis.size(); ++i) s += basis.row(a)[i] * basis.row(b)[i];
                          w(std::abs(s * g_basis.spacing() - (a == b ? 1.0 : 0.0)));
                        }
                      }
                      return w.value;
                    }});

  checks.push_back({"transform.fourier_gaussian", 1e-8, [&](std::string&) {
                      const SampledSignal psi = hermite_function(0, g);
                      return distance(apply_transform(make_frft(pi / 2), psi), psi) / norm(psi);
                    }});

  checks.push_back({"transform.frft_eigenphase", 1e-6, [&](std::string&) {
                      Worst w;
                      for (double alpha : {0.4, 0.7, 1.3}) {
                        const QuadPhaseKernel k = make_frft(alpha);
                        for (int m = 0; m <= 5; ++m) {
                          const SampledSignal psi = hermite_function(m, g);
                          w(distance(apply_transform(k, psi), std::polar(1.0, -alpha * m) * psi));
                        }
                      }
                      return w.value;
                    }});

  checks.push_back({"transform.parallel_matches_serial", 1e-12, [&](std::string&) {
                      const SampledSignal f = gaussian(g, 0.5, 1.0, 0.3);
                      const QuadPhaseKernel k = make_frft(0.7);
                      const SampledSignal par = apply_transform(k, f, g);
                      const SampledSignal ser = reference::apply_transform(k, f, g);
                      return distance(par, ser) / norm(ser);
                    }});

  checks.push_back({"transform.frft_additivity", 1e-6, [&](std::string& detail) {
                      const SampledSignal f = gaussian(g, 1.0, 0.0, 0.5);
                      Worst w;
                      for (double a : kAngles) {
                        for (double b : kAngles) w(check_additivity(make_frft, a, b, f));
                      }
                      detail = "5x5 lattice, shifted gaussian";
                      return w.value;
                    }});

  checks.push_back({"transform.squeeze_additivity", 1e-5, [&](std::string& detail) {
                      const SampledSignal f = hermite_function(0, g_squeeze);
                      const KernelFamily fam = [](double a) { return make_squeeze(a, 0.3); };
                      Worst w;
                      for (double a : kSqueezeAngles) {
                        for (double b : kSqueezeAngles) w(check_additivity(fam, a, b, f));
                      }
                      detail = "theta = 0.3, 5x5 lattice";
                      return w.value;
                    }});

  checks.push_back({"transform.parseval_quadratic", 1e-7, [&](std::string&) {
                      const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                               gaussian(g, 0.0, 1.0)};
                      const std::vector<QuadPhaseKernel> ks = {make_frft(0.7), make_frft(1.9), make_lct(1, 1, 1),
                                                               make_lct(0.5, 2, 0.3), make_squeeze(0.3, 0.3)};
                      const Grid out = make_grid(2 * n, 2.0 * L);
                      Worst w;
                      for (const auto& k : ks) {
                        for (const auto& f : sigs) w(check_parseval(k, f, out).relative_defect);
                      }
                      return w.value;
                    }});

  checks.push_back({"transform.parseval_gtf", 1e-5, [&](std::string& detail) {
                      const SampledSignal f = hermite_function(0, g_wide);
                      const QuadPhaseKernel k = make_gtf_standard(0.9);
                      const Grid og = default_output_grid(k, f);
                      detail = "output half-width " + std::to_string(og.half_width());
                      return check_parseval(k, f, og).relative_defect;
                    }});

  checks.push_back({"moments.dual_route_variance", 1e-6, [&](std::string&) {
                      const std::vector<SampledSignal> sigs = {hermite_function(0, g_wide), hermite(g_wide, {0, 1}),
                                                               gaussian(g_wide, 0.0, 1.0)};
                      const Grid out = make_grid(2 * n, 2.0 * L);
                      std::vector<QuadPhaseKernel> ks;
                      for (double a : {0.3, 0.7, 1.1, 1.9}) ks.push_back(make_frft(a));
                      ks.push_back(make_lct(0, 1, 0));
                      ks.push_back(make_lct(1, 1, 1));
                      ks.push_back(make_lct(0.5, 2, 0.3));
                      ks.push_back(make_lct(2, 0.5, 1));
                      for (double a : {0.3, 0.5, 0.8, 1.0}) ks.push_back(make_squeeze(a, 0.3));
                      for (double phi : {0.3, 0.6, 0.9, 1.2}) ks.push_back(make_gtf_standard(phi));
                      Worst w;
                      for (const auto& k : ks) {
                        for (const auto& f : sigs) {
                          const Grid og = k.has_extra_phase() ? default_output_grid(k, f) : out;
                          const double v_dom = transformed_domain_moments(k, f, og).variance;
                          const PolyObservable o = transformed_observable(k);
                          const double v_op = covariance(o, o, f);
                          w(std::abs(v_dom - v_op) / std::max(1.0, std::abs(v_op)));
                        }
                      }
                      return w.value;
                    }});

  checks.push_back({"moments.real_signal_xp", 1e-7, [&](std::string&) {
                      const PolyObservable x = position_observable();
                      const PolyObservable p = momentum_observable();
                      Worst w;
                      for (const SampledSignal& f : {hermite_function(2, g), sample({BumpSpec{}}, g)}) {
                        w(std::abs(product_expectation(x, p, f) - Complex(0.0, 0.5)));
                      }
                      return w.value;
                    }});

  checks.push_back({"moments.gtf_commutator", 1e-7, [&](std::string&) {
                      const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                               gaussian(g, 0.5, 1.0)};
                      const std::pair<double, double> pairs[] = {{0.4, 1.2}, {0.3, 0.9}, {1.0, 2.0}};
                      Worst w;
                      for (auto [p1, p2] : pairs) {
                        const PolyObservable o1 = transformed_observable(make_gtf_standard(p1));
                        const PolyObservable o2 = transformed_observable(make_gtf_standard(p2));
                        for (const auto& f : sigs) w(std::abs(commutator_expectation(o1, o2, f) - std::sin(p2 - p1)));
                      }
                      return w.value;
                    }});

  const std::vector<SampledSignal> lattice_signals = {hermite_function(0, g), hermite(g, {0, 1}),
                                                      gaussian(g, 0.0, 1.0), gaussian(g, 1.0)};
  const std::vector<SampledSignal> basis_signals = {hermite_function(0, g_basis), hermite(g_basis, {0, 1}),
                                                    gaussian(g_basis, 0.0, 1.0), gaussian(g_basis, 1.0)};

  checks.push_back({"bounds.closed_form_agreement", 1e-7, [&](std::string&) {
                      Worst w;
                      auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); };
                      for (const auto& f : lattice_signals) {
                        const MomentSet m = moment_set(f);
                        w(rel(frft_bound(0.9, 0.3, m), ur_quadratic(make_frft(0.9), make_frft(0.3), f).bound));
                        w(rel(frft_bound(1.9, 0.7, m), ur_quadratic(make_frft(1.9), make_frft(0.7), f).bound));
                        w(rel(lct_bound({0, 1, 0}, {1, 1, 1}, m), ur_quadratic(make_lct(0, 1, 0), make_lct(1, 1, 1), f).bound));
                        w(rel(lct_bound({2, 1, 1}, {0.5, 2, 0.3}, m),
                              ur_quadratic(make_lct(2, 1, 1), make_lct(0.5, 2, 0.3), f).bound));
                        w(rel(squeeze_bound(0.5, 1.0, 0.3, m),
                              ur_quadratic(make_squeeze(0.5, 0.3), make_squeeze(1.0, 0.3), f).bound));
                      }
                      return w.value;
                    }});

  checks.push_back({"bounds.special_case_collapse", 1e-12, [&](std::string&) {
                      MomentSet m = moment_set(hermite_function(2, g));
                      m.r_xp = 0.0;
                      m.dxp = 0.0;
                      Worst w;
                      for (double a : kAngles) {
                        const double ref = frft_bound_uncorrelated(a, m);
                        w(std::abs(frft_bound(a, 0.0, m) - ref) / ref);
                      }
                      return w.value;
                    }});

  checks.push_back({"bounds.inequality", 1e-7, [&](std::string&) {
                      Worst w;
                      auto violation = [](const UrReport& r) { return std::max(0.0, -r.margin) / std::max(1.0, r.lhs); };
                      for (const auto& f : lattice_signals) {
                        for (double a : kAngles) {
                          for (double b : kAngles) {
                            if (a == b) continue;
                            w(violation(ur_quadratic(make_frft(a), make_frft(b), f)));
                          }
                        }
                        const PolyObservable o1 = transformed_observable(make_gtf_standard(0.4));
                        const PolyObservable o2 = transformed_observable(make_gtf_standard(1.2));
                        w(violation(ur_generic(o1, o2, f)));
                      }
                      return w.value;
                    }});

  checks.push_back({"bounds.gaussian_saturation", 1e-6, [&](std::string&) {
                      const SampledSignal f = hermite_function(0, g);
                      Worst w;
                      for (double a : kAngles) {
                        for (double b : kAngles) {
                          if (a == b) continue;
                          w(std::abs(ur_quadratic(make_frft(a), make_frft(b), f).saturation - 1.0));
                        }
                      }
                      w(std::abs(ur_generic(position_observable(), momentum_observable(), f).saturation - 1.0));
                      return w.value;
                    }});

  checks.push_back({"bounds.w_antisymmetry", 0.0, [&](std::string&) {
                      Worst w;
                      const std::pair<QuadPhaseKernel, QuadPhaseKernel> pairs[] = {
                          {make_frft(0.3), make_frft(1.1)},
                          {make_lct(2, 1, 1), make_lct(0.5, 2, 0.3)},
                          {make_squeeze(0.5, 0.3), make_squeeze(1.0, 0.3)}};
                      for (const auto& [k1, k2] : pairs) {
                        w((w_matrix(k1, k2) + w_matrix(k2, k1).transpose()).cwiseAbs().maxCoeff());
                      }
                      return w.value;
                    }});

  checks.push_back({"number.two_level_variance", 1e-8, [&](std::string&) {
                      return std::abs(number_moments(decompose(hermite(g, {0, 1}), 16)).variance - 0.25);
                    }});

  checks.push_back({"number.eigenstate_variance", 1e-10, [&](std::string&) {
                      return std::abs(number_moments(decompose(hermite_function(3, g), 16)).variance);
                    }});

  checks.push_back({"bounds.momentum_number_commutator", 1e-6, [&](std::string&) {
                      const SampledSignal f = hermite(g, {0, 1});
                      const UrReport r = pn_bound(f, 16);
                      const double xbar = expectation(position_observable(), f);
                      return std::abs(0.25 * r.w_term * r.w_term - 0.25 * xbar * xbar) +
                             std::abs(0.25 * xbar * xbar - 0.125);
                    }});

  checks.push_back({"bounds.momentum_number_inequality", 1e-7, [&](std::string&) {
                      Worst w;
                      for (const auto& f : basis_signals) {
                        const UrReport r = pn_bound(f, kMaxHermiteOrder);
                        w(std::max(0.0, -r.margin) / std::max(1.0, r.lhs));
                      }
                      return w.value;
                    }});

  checks.push_back({"number.coefficient_bounds", 1e-9, [&](std::string&) {
                      Worst w;
                      for (const auto& f : basis_signals) {
                        const NumberDecomposition d = decompose(f, kMaxHermiteOrder);
                        w(std::max(0.0, d.captured() - 1.0));
                        w(std::max(0.0, -d.truncation_residual));
                      }
                      return w.value;
                    }});

  checks.push_back({"number.frft_phases", 1e-6, [&](std::string&) {
                      const SampledSignal f = gaussian(g, 1.0, 0.0, 0.5);
                      const NumberDecomposition d0 = decompose(f, 10);
                      Worst w;
                      for (double a : {0.4, 1.3, 2.6}) {
                        const NumberDecomposition d = decompose(apply_transform(make_frft(a), f), 10);
                        for (int m = 0; m <= 10; ++m) {
                          w(std::abs(d.coeffs[m] - std::polar(1.0, -a * m) * d0.coeffs[m]));
                        }
                      }
                      return w.value;
                    }});

  checks.push_back({"number.round_trip", 1e-7, [&](std::string&) {
                      const SampledSignal f = hermite(g, {0, 5});
                      return distance(reconstruct(decompose(f, 12), g), f);
                    }});

  checks.push_back({"number.coefficient_space_anticommutator", 1e-6, [&](std::string&) {
                      Worst w;
                      for (const auto& f : basis_signals) {
                        const CoefficientMomentumNumber c = coefficient_momentum_number(decompose(f, kMaxHermiteOrder));
                        const double op = 0.5 * (product_expectation(momentum_observable(), NumberObservable{}, f) +
                                                 product_expectation(NumberObservable{}, momentum_observable(), f))
                                                    .real();
                        w(std::abs(c.half_anticommutator - op));
                      }
                      return w.value;
                    }});

  checks.push_back({"number.coherent_poisson", 1e-5, [&](std::string&) {
                      const NumberDecomposition d = decompose(gaussian(g_basis, 1.0), 30);
                      const double lam2 = 0.5;
                      Worst w;
                      double fact = 1.0;
                      for (int m = 0; m <= 6; ++m) {
                        if (m > 0) fact *= m;
                        const double poisson = std::exp(-lam2) * std::pow(lam2, m) / fact;
                        w(std::abs(std::norm(d.coeffs[m]) - poisson));
                      }
                      w(std::abs(number_moments(d).mean - lam2));
                      return w.value;
                    }});

  std::vector<InvariantResult> results;
  results.reserve(checks.size());
  for (auto& c : checks) {
    InvariantResult r;
    r.name = c.name;
    r.tolerance = c.tolerance;
    try {
      r.value = c.body(r.detail);
      r.passed = !std::isnan(r.value) && r.value <= c.tolerance;
    } catch (const Error& e) {
      r.value = NAN;
      r.passed = false;
      r.detail = std::string(to_string(e.kind())) + ": " + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ktur::cli
