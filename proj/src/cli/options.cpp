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

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "ktur/cli.hpp"
#include "ktur/error.hpp"
#include "ktur/serialize.hpp"

namespace ktur::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument, what + ": not a number: '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& what) {
  const double v = parse_number(s, what);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw Error(ErrorKind::invalid_argument, what + ": not an integer: '" + s + "'");
  return static_cast<int>(v);
}

void print_error(ErrorKind kind, const std::string& detail) {
  Json j;
  j["error_kind"] = std::string(to_string(kind));
  j["detail"] = detail;
  std::cerr << j.dump() << '\n';
}

}  // namespace

AnalyticSignalSpec parse_signal(const std::string& text, bool normalize) {
  AnalyticSignalSpec spec;
  spec.normalize = normalize;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (kind == "gaussian") {
    GaussianSpec g;
    if (!args.empty()) {
      const auto parts = split(args, ',');
      if (parts.size() > 4) throw Error(ErrorKind::invalid_argument, "gaussian takes at most mu,sigma,chirp,p0");
      double* fields[] = {&g.mu, &g.sigma, &g.chirp, &g.p0};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].empty()) *fields[i] = parse_number(parts[i], "gaussian");
      }
    }
    spec.kind = g;
  } else if (kind == "hermite") {
    if (args.empty()) throw Error(ErrorKind::invalid_argument, "hermite needs a level, e.g. hermite:2 or hermite:0+1");
    HermiteSpec h;
    h.levels.clear();
    for (const auto& part : split(args, '+')) h.levels.push_back(parse_int(part, "hermite"));
    spec.kind = h;
  } else if (kind == "bump") {
    BumpSpec b;
    if (!args.empty()) {
      const auto parts = split(args, ',');
      if (parts.size() > 2) throw Error(ErrorKind::invalid_argument, "bump takes at most mu,width");
      double* fields[] = {&b.mu, &b.width};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].empty()) *fields[i] = parse_number(parts[i], "bump");
      }
    }
    spec.kind = b;
  } else if (kind == "file") {
    if (args.empty()) throw Error(ErrorKind::invalid_argument, "file signal needs a path");
    spec.kind = TableSpec{args};
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown signal '" + text + "'");
  }
  return spec;
}

double SweepAxis::value(int i) const {
  if (count == 1) return start;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

SweepAxis parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorKind::invalid_argument, "sweep must be param=start:stop:count");
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw Error(ErrorKind::invalid_argument, "sweep must be param=start:stop:count");
  SweepAxis ax{text.substr(0, eq), parse_number(parts[0], "sweep start"), parse_number(parts[1], "sweep stop"),
               parse_int(parts[2], "sweep count")};
  if (ax.count < 2) throw Error(ErrorKind::invalid_argument, "sweep count must be at least 2");
  return ax;
}

QuadPhaseKernel build_kernel(const KernelSpec& spec) {
  const std::string& f = spec.family;
  if (f == "frft") return make_frft(spec.alpha);
  if (f == "lct") return make_lct(spec.a, spec.b, spec.d);
  if (f == "squeeze") return make_squeeze(spec.alpha, spec.theta);
  if (f == "gtf") return make_gtf_standard(spec.phi);
  if (f.rfind("file:", 0) == 0) {
    const std::string path = f.substr(5);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_error, "cannot open kernel file " + path);
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse_error, "kernel file " + path + ": " + e.what());
    }
    return kernel_from_json(j);
  }
  throw Error(ErrorKind::invalid_argument, "unknown kernel '" + f + "'");
}

void set_param(RunConfig& cfg, const std::string& name, double value) {
  if (name == "alpha") cfg.kernel1.alpha = value;
  else if (name == "beta") cfg.kernel2.alpha = value;
  else if (name == "theta") cfg.kernel1.theta = cfg.kernel2.theta = value;
  else if (name == "phi") cfg.kernel1.phi = value;
  else if (name == "phi2") cfg.kernel2.phi = value;
  else if (name == "a") cfg.kernel1.a = value;
  else if (name == "b") cfg.kernel1.b = value;
  else if (name == "d") cfg.kernel1.d = value;
  else if (name == "a2") cfg.kernel2.a = value;
  else if (name == "b2") cfg.kernel2.b = value;
  else if (name == "d2") cfg.kernel2.d = value;
  else throw Error(ErrorKind::invalid_argument, "unknown parameter '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Kernel transforms, moments and uncertainty bounds on sampled signals"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<double> theta;
  std::string kernel2;
  std::vector<std::string> sweeps;
  std::optional<std::size_t> out_n;
  std::optional<double> out_half_width;
  bool no_normalize = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--signal", cfg.signal, "gaussian[:mu,sigma,chirp,p0] | hermite:n[+m...] | bump[:mu,width] | file:path");
    sub->add_option("--n", cfg.n, "Grid points")->check(CLI::PositiveNumber);
    sub->add_option("--half-width", cfg.half_width, "Grid half-width L (grid is [-L, L))");
    sub->add_flag("--no-normalize", no_normalize, "Keep the sampled signal's norm");
    sub->add_option("--out", cfg.out, "Output file (default: standard output)");
    sub->add_option("--format", cfg.format, "json | csv (sweep defaults to csv)")->check(CLI::IsMember({"json", "csv"}));
  };
  std::vector<CLI::Option*> kernel_opts;
  auto add_kernels = [&](CLI::App* sub, bool pair) {
    kernel_opts.push_back(
        sub->add_option("--kernel", cfg.kernel1.family, "frft | lct | squeeze | gtf | file:kernel.json; x or p in ur"));
    sub->add_option("--alpha", cfg.kernel1.alpha, "FrFT / squeeze parameter");
    sub->add_option("--theta", theta, "Squeeze angle");
    sub->add_option("--a", cfg.kernel1.a, "LCT a");
    sub->add_option("--b", cfg.kernel1.b, "LCT b");
    sub->add_option("--d", cfg.kernel1.d, "LCT d");
    sub->add_option("--phi", cfg.kernel1.phi, "GTF angle");
    if (!pair) return kernel_opts.back();
    sub->add_option("--kernel2", kernel2, "Second kernel (default: same family as --kernel); x or p for plain observables");
    sub->add_option("--beta", cfg.kernel2.alpha, "Second FrFT / squeeze parameter");
    sub->add_option("--a2", cfg.kernel2.a, "Second LCT a");
    sub->add_option("--b2", cfg.kernel2.b, "Second LCT b");
    sub->add_option("--d2", cfg.kernel2.d, "Second LCT d");
    sub->add_option("--phi2", cfg.kernel2.phi, "Second GTF angle");
    return kernel_opts.back();
  };

  auto* transform = app.add_subcommand("transform", "Apply a kernel transform; CSV p,re,im plus a unitarity report");
  add_common(transform);
  add_kernels(transform, false)->required();
  transform->add_option("--out-n", out_n, "Output grid points");
  transform->add_option("--out-half-width", out_half_width, "Output grid half-width");

  auto* moments = app.add_subcommand("moments", "Signal moments, optionally in a transformed domain");
  add_common(moments);
  add_kernels(moments, false);
  moments->add_option("--out-n", out_n, "Output grid points");
  moments->add_option("--out-half-width", out_half_width, "Output grid half-width");

  auto* ur = app.add_subcommand("ur", "Uncertainty relation between two transformed momenta");
  add_common(ur);
  add_kernels(ur, true)->required();

  auto* sweep = app.add_subcommand("sweep", "Uncertainty relation over a parameter lattice");
  add_common(sweep);
  add_kernels(sweep, true)->required();
  sweep->add_option("--sweep", sweeps, "param=start:stop:count (one or two)")->required();

  auto* pn = app.add_subcommand("pn-ur", "Momentum / number uncertainty relation");
  add_common(pn);
  pn->add_option("--n-max", cfg.n_max, "Largest Hermite order")->check(CLI::Range(0, kMaxHermiteOrder));

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--n", cfg.n, "Grid points")->check(CLI::PositiveNumber);
  selftest->add_option("--half-width", cfg.half_width, "Grid half-width");
  selftest->add_flag("--json", cfg.json, "Machine-readable results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(ErrorKind::invalid_argument, e.what());
    return kConfigError;
  }

  try {
    cfg.normalize = !no_normalize;
    cfg.out_n = out_n;
    cfg.out_half_width = out_half_width;
    if (theta) cfg.kernel1.theta = cfg.kernel2.theta = *theta;
    cfg.kernel2_given = !kernel2.empty();
    for (const auto* o : kernel_opts) cfg.kernel1_given = cfg.kernel1_given || o->count() > 0;
    cfg.kernel2.family = cfg.kernel2_given ? kernel2 : cfg.kernel1.family;
    for (const auto& s : sweeps) cfg.sweeps.push_back(parse_sweep(s));
    if (cfg.sweeps.size() > 2) throw Error(ErrorKind::invalid_argument, "at most two sweep axes");

    if (transform->parsed()) return cmd_transform(cfg);
    if (moments->parsed()) return cmd_moments(cfg);
    if (ur->parsed()) return cmd_ur(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (pn->parsed()) return cmd_pn_ur(cfg);
    return cmd_selftest(cfg);
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return is_numerical(e.kind()) ? kNumericalError : kConfigError;
  } catch (const std::exception& e) {
    print_error(ErrorKind::invalid_argument, e.what());
    return kConfigError;
  }
}

}  // namespace ktur::cli
