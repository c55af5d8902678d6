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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <omp.h>

#include "ktur/bounds.hpp"
#include "ktur/cli.hpp"
#include "ktur/error.hpp"
#include "ktur/number_domain.hpp"
#include "ktur/serialize.hpp"
#include "ktur/transform.hpp"

using namespace ktur;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SampledSignal gaussian(const Grid& g, double mu = 0.0, double chirp = 0.0, double p0 = 0.0) {
  GaussianSpec s;
  s.mu = mu;
  s.chirp = chirp;
  s.p0 = p0;
  return sample({s}, g);
}

SampledSignal hermite(const Grid& g, std::vector<int> levels) { return sample({HermiteSpec{std::move(levels)}}, g); }

struct Worst {
  double value = 0.0;
  void operator()(double v) { value = (std::isnan(v) || std::isnan(value)) ? NAN : std::max(value, v); }
};

struct Line {
  bool passed = false;
  std::string text;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Line()> body;
};

/// A single "observed <= tolerance" measurement.
struct Measure {
  std::string name;
  double value;
  double tolerance;
  bool ok() const { return !std::isnan(value) && value <= tolerance; }
  std::string str() const { return name + "=" + format_double(value) + " (tol " + format_double(tolerance) + ")"; }
};

Line combine(const std::vector<Measure>& ms) {
  Line l{true, ""};
  for (const auto& m : ms) {
    l.passed = l.passed && m.ok();
    if (!l.text.empty()) l.text += ", ";
    l.text += m.str();
  }
  return l;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

int main() {
  const Grid g = make_grid(1024, 10.0);
  const Grid g_wide = make_grid(2048, 12.0);
  const Grid g_basis = make_grid(2048, 16.0);
  const double angles[] = {0.3, 0.7, 1.1, 1.9, 2.6};

  std::vector<Criterion> crits;

  crits.push_back({"AC1", "transform correctness", [&] {
                     const SampledSignal psi0 = hermite_function(0, g);
                     double worst_time = 0.0;
                     auto timed = [&](const QuadPhaseKernel& k, const SampledSignal& f) {
                       const auto t0 = Clock::now();
                       SampledSignal t = apply_transform(k, f);
                       worst_time = std::max(worst_time, seconds_since(t0));
                       return t;
                     };
                     const double ft = norm(timed(make_frft(pi / 2), psi0) - psi0) / norm(psi0);
                     Worst eig;
                     for (double a : {0.4, 0.7, 1.3}) {
                       const QuadPhaseKernel k = make_frft(a);
                       for (int n = 0; n <= 5; ++n) {
                         const SampledSignal psi = hermite_function(n, g);
                         // Eigenphase of psi_n under the order-a transform.
                         eig(norm(timed(k, psi) - std::polar(1.0, -a * n) * psi));
                       }
                     }
                     return combine({{"fourier_psi0", ft, 1e-8}, {"eigen_n<=5", eig.value, 1e-6},
                                     {"max_seconds", worst_time, 5.0}});
                   }});

  crits.push_back({"AC2", "additivity", [&] {
                     const SampledSignal f = gaussian(g, 1.0, 0.0, 0.5);
                     Worst fr;
                     for (double a : angles) {
                       for (double b : angles) fr(check_additivity(make_frft, a, b, f));
                     }
                     const Grid gs = make_grid(2048, 16.0);
                     const SampledSignal h = hermite_function(0, gs);
                     const KernelFamily sq = [](double a) { return make_squeeze(a, 0.3); };
                     const double sq_angles[] = {0.25, 0.3, 0.35, 0.4, 0.45};
                     Worst sw;
                     for (double a : sq_angles) {
                       for (double b : sq_angles) sw(check_additivity(sq, a, b, h));
                     }
                     return combine({{"frft_5x5", fr.value, 1e-6}, {"squeeze_5x5", sw.value, 1e-5}});
                   }});

  crits.push_back({"AC3", "norm preservation", [&] {
                     const Grid out = make_grid(2048, 20.0);
                     const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                              gaussian(g, 0.0, 1.0), gaussian(g, 1.0, 0.0, 0.5)};
                     const std::vector<QuadPhaseKernel> ks = {make_frft(0.3),        make_frft(1.1),
                                                              make_frft(2.6),        make_lct(1, 1, 1),
                                                              make_lct(0.5, 2, 0.3), make_lct(2, 0.5, 1),
                                                              make_squeeze(0.3, 0.3), make_squeeze(0.8, -0.4)};
                     Worst q;
                     for (const auto& k : ks) {
                       for (const auto& f : sigs) q(check_parseval(k, f, out).relative_defect);
                     }
                     Worst c;
                     for (double phi : {0.3, 0.9, 1.4}) {
                       for (const auto& f : {hermite_function(0, g_wide), hermite(g_wide, {0, 1})}) {
                         const QuadPhaseKernel k = make_gtf_standard(phi);
                         c(check_parseval(k, f, default_output_grid(k, f)).relative_defect);
                       }
                     }
                     return combine({{"quadratic", q.value, 1e-7}, {"cubic_gtf", c.value, 1e-5}});
                   }});

  crits.push_back({"AC4", "dual-route variance", [&] {
                     const std::vector<SampledSignal> sigs = {hermite_function(0, g_wide), hermite(g_wide, {0, 1}),
                                                              gaussian(g_wide, 0.0, 1.0)};
                     const Grid out = make_grid(4096, 24.0);
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
                         w(rel(v_dom, covariance(o, o, f)));
                       }
                     }
                     return combine({{"relative_variance_gap", w.value, 1e-6}});
                   }});

  crits.push_back({"AC5", "closed-form bounds", [&] {
                     const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                              gaussian(g, 0.0, 1.0), gaussian(g, 1.0, 0.5, 0.3)};
                     Worst w;
                     for (const auto& f : sigs) {
                       const MomentSet m = moment_set(f);
                       for (double a : angles) {
                         for (double b : angles) {
                           if (a == b) continue;
                           w(rel(frft_bound(a, b, m), ur_quadratic(make_frft(a), make_frft(b), f).bound));
                         }
                       }
                       const LctParams lp[] = {{0, 1, 0}, {1, 1, 1}, {2, 1, 1}, {0.5, 2, 0.3}};
                       for (const auto& p1 : lp) {
                         for (const auto& p2 : lp) {
                           if (&p1 == &p2) continue;
                           w(rel(lct_bound(p1, p2, m),
                                 ur_quadratic(make_lct(p1.a, p1.b, p1.d), make_lct(p2.a, p2.b, p2.d), f).bound));
                         }
                       }
                       for (double theta : {0.0, 0.3, -0.7}) {
                         w(rel(squeeze_bound(0.5, 1.0, theta, m),
                               ur_quadratic(make_squeeze(0.5, theta), make_squeeze(1.0, theta), f).bound));
                       }
                     }
                     MomentSet m = moment_set(hermite_function(2, g));
                     m.r_xp = 0.0;
                     m.dxp = 0.0;
                     Worst s;
                     for (double a : angles) s(rel(frft_bound(a, 0.0, m), frft_bound_uncorrelated(a, m)));
                     return combine({{"vs_generic", w.value, 1e-7}, {"uncorrelated_special_case", s.value, 1e-12}});
                   }});

  crits.push_back({"AC6", "inequality and saturation", [&] {
                     const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                              hermite_function(2, g), gaussian(g, 0.0, 1.0),
                                                              gaussian(g, 1.0, 0.5, 0.3), sample({BumpSpec{}}, g)};
                     Worst viol;
                     auto check = [&](const UrReport& r) { viol(std::max(0.0, -r.margin) / std::max(1.0, r.lhs)); };
                     for (const auto& f : sigs) {
                       for (double a : angles) {
                         for (double b : angles) {
                           if (a != b) check(ur_quadratic(make_frft(a), make_frft(b), f));
                         }
                       }
                       check(ur_quadratic(make_lct(2, 1, 1), make_lct(0.5, 2, 0.3), f));
                       check(ur_quadratic(make_squeeze(0.5, 0.3), make_squeeze(1.0, 0.3), f));
                       check(ur_generic(position_observable(), momentum_observable(), f));
                       for (auto [p1, p2] : {std::pair{0.4, 1.2}, std::pair{0.3, 0.9}}) {
                         check(ur_generic(transformed_observable(make_gtf_standard(p1)),
                                          transformed_observable(make_gtf_standard(p2)), f));
                       }
                     }
                     const SampledSignal psi0 = hermite_function(0, g);
                     Worst sat;
                     for (double a : angles) {
                       for (double b : angles) {
                         if (a != b) sat(std::abs(ur_quadratic(make_frft(a), make_frft(b), psi0).saturation - 1.0));
                       }
                     }
                     sat(std::abs(ur_generic(position_observable(), momentum_observable(), psi0).saturation - 1.0));
                     return combine({{"relative_violation", viol.value, 1e-7}, {"gaussian_saturation_gap", sat.value, 1e-6}});
                   }});

  crits.push_back({"AC7", "real-signal <xp> = i/2", [&] {
                     const PolyObservable x = position_observable();
                     const PolyObservable p = momentum_observable();
                     const double h2 = std::abs(product_expectation(x, p, hermite_function(2, g)) - Complex(0.0, 0.5));
                     const double bump = std::abs(product_expectation(x, p, sample({BumpSpec{}}, g)) - Complex(0.0, 0.5));
                     return combine({{"psi2", h2, 1e-7}, {"bump", bump, 1e-7}});
                   }});

  crits.push_back({"AC8", "momentum-number relation", [&] {
                     const SampledSignal two = hermite(g, {0, 1});
                     const double var = number_moments(decompose(two, 16)).variance;
                     const UrReport r = pn_bound(two, 16);
                     const double comm = 0.25 * r.w_term * r.w_term;
                     const double xbar = expectation(position_observable(), two);
                     const double eig = std::abs(number_moments(decompose(hermite_function(3, g), 16)).variance);
                     Line l = combine({{"two_level_variance_gap", std::abs(var - 0.25), 1e-8},
                                       {"commutator_term_gap", std::abs(comm - 0.125), 1e-6},
                                       {"xbar2_over_4_gap", std::abs(0.25 * xbar * xbar - 0.125), 1e-6},
                                       {"psi3_variance", eig, 1e-10}});
                     l.passed = l.passed && r.lhs >= r.bound;
                     l.text += ", lhs-bound=" + format_double(r.lhs - r.bound);
                     return l;
                   }});

  crits.push_back({"AC9", "cubic-phase commutator", [&] {
                     const std::vector<SampledSignal> sigs = {hermite_function(0, g), hermite(g, {0, 1}),
                                                              gaussian(g, 0.5, 1.0)};
                     Worst w;
                     for (auto [p1, p2] : {std::pair{0.4, 1.2}, std::pair{0.3, 0.9}, std::pair{1.0, 2.0}}) {
                       const PolyObservable o1 = transformed_observable(make_gtf_standard(p1));
                       const PolyObservable o2 = transformed_observable(make_gtf_standard(p2));
                       for (const auto& f : sigs) w(std::abs(commutator_expectation(o1, o2, f) - std::sin(p2 - p1)));
                     }
                     return combine({{"commutator_gap", w.value, 1e-7}});
                   }});

  crits.push_back({"AC10", "self-test runtime", [&] {
                     const int saved = omp_get_max_threads();
                     omp_set_num_threads(1);
                     const auto t0 = Clock::now();
                     const auto results = cli::run_selftest({1024, 10.0});
                     const double secs = seconds_since(t0);
                     omp_set_num_threads(saved);
                     int failed = 0;
                     for (const auto& r : results) failed += r.passed ? 0 : 1;
                     Line l = combine({{"seconds", secs, 60.0}});
                     l.passed = l.passed && failed == 0;
                     l.text += ", invariants=" + std::to_string(results.size()) + ", failed=" + std::to_string(failed);
                     return l;
                   }});

  int failures = 0;
  for (const auto& c : crits) {
    Line l;
    try {
      l = c.body();
    } catch (const Error& e) {
      l = {false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
    if (!l.passed) ++failures;
    std::printf("%s %s %s: %s\n", l.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), l.text.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crits.size()) - failures, crits.size());
  return failures == 0 ? 0 : 1;
}
