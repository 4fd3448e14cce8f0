// Copyright 2026 The unruh-chsh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failures. Runtimes are wall clock for a single cold call.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "support/oracles.hpp"
#include "unruh/sweep.hpp"

using namespace unruh;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTsirelson = 2.0 * std::numbers::sqrt2;

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void check(const char* name, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("threw: ") + e.what()};
  }
  std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
  std::fflush(stdout);
  failures += !v.pass;
}

template <class F>
double millis(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ExperimentConfig make(Mode mode, double r, std::size_t n, double theta) {
  ExperimentConfig c;
  c.mode = mode;
  c.r = SqueezeParameter(r);
  c.trunc = TruncationSpec::fixed(n);
  c.theta = theta;
  return c;
}

Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

DensityOperator random_density(std::mt19937& rng, const FactorDims& dims) {
  const Matrix x = random_matrix(rng, dims.total());
  const Matrix rho = x * x.adjoint();
  return DensityOperator(rho / rho.trace().real(), dims, true);
}

Verdict inertial_maximal() {
  ChshResult res;
  const double ms = millis([&] { res = chsh(ExperimentConfig{}); });
  const double err = std::abs(res.S - kTsirelson);
  return {err <= 1e-9 && ms < 1.0, fmt("S=%.15f |S-2sqrt2|=%.1e (tol 1e-9), %.3f ms (limit 1)",
                                       res.S, err, ms)};
}

Verdict zero_acceleration() {
  ChshResult res;
  const double ms =
      millis([&] { res = chsh(make(Mode::accelerated_compat, 0.0, 3, kPi / 4)); });
  const double err = std::abs(res.S - kTsirelson);
  return {err <= 1e-9 && ms < 10.0,
          fmt("S=%.15f |S-2sqrt2|=%.1e (tol 1e-9), %.3f ms (limit 10)", res.S, err, ms)};
}

Verdict classicality_crossing() {
  std::vector<SweepRow> rows;
  const SweepSpec spec;
  const double ms = millis([&] { rows = run_sweep(spec, 1); });
  const auto all = find_crossings(rows, 2.0);
  if (all.size() != 1)
    return {false, fmt("%zu rows, %zu crossings (want 1), %.0f ms", rows.size(), all.size(), ms)};
  const double a = all[0].a_cross;
  const bool ok = rows.size() == 200 && std::abs(a - 5.3) <= 0.3 && ms < 5000.0;
  return {ok, fmt("%zu rows, unique crossing a/|k|c=%.6f r=%.6f (want 5.3+-0.3), "
                  "%.0f ms single-threaded (limit 5000)",
                  rows.size(), a, all[0].r_cross, ms)};
}

Verdict sixteen_term_density() {
  double worst_frob = 0.0, worst_s = 0.0;
  const struct {
    std::size_t n;
    double r, theta;
  } cases[] = {{3, 0.5, kPi / 4}, {3, 1.0, kPi / 4}, {4, 0.3, kPi / 3}};
  for (const auto& c : cases) {
    const ExperimentConfig config = make(Mode::accelerated_faithful, c.r, c.n, c.theta);
    const Ket psi = post_measurement_state(config);
    const DensityOperator generic = partial_trace(projector(psi), {3});
    const DensityOperator assembled = appendix_a_density(config);
    worst_frob = std::max(worst_frob, (assembled.matrix() - generic.matrix()).norm());
    const double s_terms = chsh_from_density(assembled, observables(config)).S;
    const double s_trace = chsh_from_density(generic, observables(config)).S;
    const double s_direct = chsh(config).S;
    worst_s = std::max({worst_s, std::abs(s_terms - s_trace), std::abs(s_terms - s_direct)});
  }
  return {worst_frob < 1e-12 && worst_s <= 1e-10,
          fmt("max Frobenius %.1e (tol 1e-12), max |dS| %.1e (tol 1e-10)", worst_frob, worst_s)};
}

Verdict mapping() {
  double worst = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 6.0}) {
    const double back = squeeze_from_acceleration(acceleration_from_squeeze(SqueezeParameter(r)))
                            .value();
    worst = std::max(worst, std::abs(back - r) / r);
  }
  const double unit =
      acceleration_from_squeeze(SqueezeParameter(std::atanh(std::exp(-kPi)))).value();
  return {worst <= 1e-10 && std::abs(unit - 1.0) <= 1e-10,
          fmt("max round-trip rel err %.1e (tol 1e-10), a(artanh e^-pi)=%.15f (tol 1e-10)", worst,
              unit)};
}

Verdict script_regression() {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 1.0, 1.5, 1.99}) {
    const double s = chsh(make(Mode::accelerated_compat, r, 3, kPi / 4)).S;
    worst = std::max(worst, std::abs(s - oracle::script_S(r)));
  }
  return {worst <= 1e-9, fmt("max |S - script| %.1e over 5 points (tol 1e-9)", worst)};
}

Verdict entanglement() {
  const double rs[] = {0.0, 0.25, 0.5, 1.0};
  double ln[4];
  for (int i = 0; i < 4; ++i)
    ln[i] = entanglement_curve(make(Mode::accelerated_faithful, rs[i], 10, kPi / 4));
  bool decreasing = true;
  for (int i = 1; i < 4; ++i) decreasing = decreasing && ln[i] < ln[i - 1];
  const double ref = oracle::two_qubit_log_negativity(oracle::initial_amplitudes(kPi / 4));
  const double err = std::abs(ln[0] - ref);
  return {decreasing && err <= 1e-9,
          fmt("E_N = %.6f %.6f %.6f %.6f (%s), |E_N(0) - oracle| %.1e (tol 1e-9)", ln[0], ln[1],
              ln[2], ln[3], decreasing ? "strictly decreasing" : "NOT decreasing", err)};
}

Verdict algebra() {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  double trace_err = 0.0, herm_err = 0.0, mixed_err = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FactorDims dims{dim(rng), dim(rng), dim(rng)};
    const DensityOperator rho = random_density(rng, dims);
    for (std::size_t f = 0; f < 3; ++f) {
      const DensityOperator red = partial_trace(rho, {f});
      trace_err = std::max(trace_err, std::abs(red.trace() - rho.trace()));
      herm_err = std::max(herm_err, hermiticity_defect(red.matrix()));
    }
    const std::size_t p = dim(rng), q = dim(rng);
    const DensityOperator a(random_matrix(rng, p), FactorDims{p});
    const DensityOperator b(random_matrix(rng, q), FactorDims{q});
    const DensityOperator c(random_matrix(rng, p), FactorDims{p});
    const DensityOperator d(random_matrix(rng, q), FactorDims{q});
    const Matrix lhs = (tensor_op({a, b}) * tensor_op({c, d})).matrix();
    const Matrix rhs = tensor_op({a * c, b * d}).matrix();
    mixed_err = std::max(mixed_err, (lhs - rhs).cwiseAbs().maxCoeff() / rhs.cwiseAbs().maxCoeff());
  }

  const SweepSpec spec;
  double worst_corr = 0.0;
  std::size_t points = 0;
  for (double r : spec.grid()) {
    for (double e : chsh(spec.config_at(r)).correlators)
      worst_corr = std::max(worst_corr, std::abs(e));
    ++points;
  }
  const bool ok =
      trace_err <= 1e-12 && herm_err <= 1e-12 && mixed_err <= 1e-12 && worst_corr <= 1 + 1e-9;
  return {ok, fmt("trace err %.1e, hermiticity defect %.1e, mixed-product rel err %.1e "
                  "(tol 1e-12 each); max |E| %.12f over %zu sweep points (limit 1+1e-9)",
                  trace_err, herm_err, mixed_err, worst_corr, points)};
}

}  // namespace

int main() {
  check("inertial maximal violation", inertial_maximal);
  check("zero-acceleration endpoint", zero_acceleration);
  check("classicality crossing", classicality_crossing);
  check("16-term density oracle", sixteen_term_density);
  check("acceleration/squeeze mapping", mapping);
  check("script regression", script_regression);
  check("entanglement cross-check", entanglement);
  check("algebra property suite", algebra);
  std::printf("%d failure(s)\n", failures);
  return failures;
}
