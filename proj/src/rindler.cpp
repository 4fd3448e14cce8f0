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

#include "unruh/rindler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace unruh {
namespace {

void require_levels(std::size_t n_levels, const char* what) {
  if (n_levels < 2)
    throw ArgumentError(std::string(what) + ": truncation N must be >= 2, got " +
                        std::to_string(n_levels));
}

}  // namespace

SqueezeParameter::SqueezeParameter(double r) : r_(r) {
  if (!std::isfinite(r) || r < 0.0)
    throw ArgumentError("SqueezeParameter: r must be finite and >= 0, got " +
                        std::to_string(r));
}

AccelerationRatio::AccelerationRatio(double a_over_kc) : a_(a_over_kc) {
  if (!std::isfinite(a_over_kc) || a_over_kc < 0.0)
    throw ArgumentError("AccelerationRatio: a/|k|c must be finite and >= 0, got " +
                        std::to_string(a_over_kc));
}

double AccelerationRatio::omega() const {
  return a_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / a_;
}

TruncationSpec TruncationSpec::fixed(std::size_t n) {
  require_levels(n, "TruncationSpec::fixed");
  return TruncationSpec(Kind::fixed, n, 0.0);
}

TruncationSpec TruncationSpec::from_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ArgumentError("TruncationSpec: epsilon must lie in (0, 1), got " +
                        std::to_string(epsilon));
  return TruncationSpec(Kind::epsilon, 0, epsilon);
}

std::size_t TruncationSpec::resolve(SqueezeParameter r) const {
  return kind_ == Kind::fixed ? n_ : truncation_level(r, epsilon_);
}

bool TruncationSpec::below_stability_floor() const {
  return kind_ == Kind::epsilon && epsilon_ < kEpsilonStabilityFloor;
}

AccelerationRatio acceleration_from_squeeze(SqueezeParameter r) {
  const double x = r.value();
  if (x == 0.0) return AccelerationRatio(0.0);
  // ln tanh r = log1p(-q) - log1p(q), q = e^{-2r}; stays accurate as tanh r -> 1.
  const double q = std::exp(-2.0 * x);
  const double log_tanh = std::log1p(-q) - std::log1p(q);
  return AccelerationRatio(-2.0 * std::numbers::pi / (2.0 * log_tanh));
}

SqueezeParameter squeeze_from_acceleration(AccelerationRatio a) {
  const double ratio = a.value();
  if (ratio == 0.0) return SqueezeParameter(0.0);
  // artanh q = ½ [log1p(q) - log(1 - q)], with 1 - q = -expm1(-π/ratio).
  const double x = -std::numbers::pi / ratio;
  const double q = std::exp(x);
  return SqueezeParameter(0.5 * (std::log1p(q) - std::log(-std::expm1(x))));
}

std::size_t truncation_level(SqueezeParameter r, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ArgumentError("truncation_level: epsilon must lie in (0, 1), got " +
                        std::to_string(epsilon));
  const double t = std::tanh(r.value());
  if (t == 0.0) return 2;
  // tanh^N r < ε  ⇔  N > ln ε / ln tanh r; start from the estimate and settle
  // on the exact integer with the same power evaluation used by callers.
  const double estimate = std::log(epsilon) / std::log(t);
  std::size_t n = estimate > 2.0 ? static_cast<std::size_t>(std::floor(estimate)) : 2;
  if (n < 2) n = 2;
  while (n > 2 && std::pow(t, static_cast<double>(n - 1)) < epsilon) --n;
  while (!(std::pow(t, static_cast<double>(n)) < epsilon)) ++n;
  return n;
}

Ket vacuum_two_mode(std::size_t n_levels, SqueezeParameter r) {
  require_levels(n_levels, "vacuum_two_mode");
  const double t = std::tanh(r.value());
  const double scale = 1.0 / std::cosh(r.value());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n_levels * n_levels));
  for (std::size_t n = 0; n < n_levels; ++n)
    v(static_cast<Eigen::Index>(n * n_levels + n)) = scale * std::pow(t, static_cast<double>(n));
  return Ket(std::move(v), FactorDims{n_levels, n_levels});
}

Ket particle_two_mode(std::size_t n_levels, SqueezeParameter r) {
  require_levels(n_levels, "particle_two_mode");
  const double t = std::tanh(r.value());
  const double c = std::cosh(r.value());
  const double scale = 1.0 / (c * c);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n_levels * n_levels));
  for (std::size_t n = 0; n + 1 < n_levels; ++n)
    v(static_cast<Eigen::Index>((n + 1) * n_levels + n)) =
        scale * std::pow(t, static_cast<double>(n)) * std::sqrt(static_cast<double>(n + 1));
  return Ket(std::move(v), FactorDims{n_levels, n_levels});
}

// The two script-compatible builders mirror the reference arithmetic: build
// the unscaled sum first, then multiply by the prefactor.
Ket vacuum_compat(std::size_t n_levels, SqueezeParameter r) {
  require_levels(n_levels, "vacuum_compat");
  const double t = std::tanh(r.value());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n_levels));
  v(0) = 1.0;
  for (std::size_t n = 1; n + 1 < n_levels; ++n)
    v(static_cast<Eigen::Index>(n)) += std::pow(t, static_cast<double>(n));
  v *= 1.0 / std::cosh(r.value());
  return Ket(std::move(v), FactorDims{n_levels});
}

Ket particle_compat(std::size_t n_levels, SqueezeParameter r) {
  require_levels(n_levels, "particle_compat");
  const double t = std::tanh(r.value());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n_levels));
  v(0) = 1.0;
  for (std::size_t n = 1; n + 1 < n_levels; ++n)
    v(static_cast<Eigen::Index>(n + 1)) +=
        std::pow(t, static_cast<double>(n)) * std::sqrt(static_cast<double>(n + 1));
  v *= 1.0 / std::pow(std::cosh(r.value()), 2);
  return Ket(std::move(v), FactorDims{n_levels});
}

}  // namespace unruh
