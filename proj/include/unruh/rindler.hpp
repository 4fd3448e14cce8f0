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

// Minkowski vacuum and single-particle states of one field mode, written in
// the Rindler basis of an observer with proper acceleration a.
//
// The squeeze parameter r and the ratio a/(|k|c) are tied by
//   tanh² r = exp(-2π |k|c / a),
// equivalently cosh r = (1 - e^{-2πΩ})^{-1/2} with Ω = |k|c/a.
//
// Two families of states are provided:
//   *_two_mode  two-factor vectors over (region I, region II), summed to N-1.
//   *_compat    single-factor vectors reproducing the reference plotting
//               script term for term (cutoff N-2, and a leading |0⟩ term in
//               the particle state).
// Truncated vectors are returned unnormalized; the norm deficit is the weight
// lost to truncation.

#ifndef UNRUH_RINDLER_HPP
#define UNRUH_RINDLER_HPP

#include <cstddef>

#include "unruh/fockspace.hpp"

namespace unruh {

class SqueezeParameter {
 public:
  SqueezeParameter() = default;
  explicit SqueezeParameter(double r);
  double value() const { return r_; }

 private:
  double r_ = 0.0;
};

/// Dimensionless a/(|k|c).
class AccelerationRatio {
 public:
  AccelerationRatio() = default;
  explicit AccelerationRatio(double a_over_kc);
  double value() const { return a_; }
  /// Ω = |k|c/a; infinite at zero acceleration.
  double omega() const;

 private:
  double a_ = 0.0;
};

/// How many Fock levels to keep per mode.
class TruncationSpec {
 public:
  enum class Kind { fixed, epsilon };

  /// Fixed dimension N >= 2.
  static TruncationSpec fixed(std::size_t n);
  /// Smallest N >= 2 with tanh^N r < epsilon, 0 < epsilon < 1.
  static TruncationSpec from_epsilon(double epsilon);

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  double epsilon() const { return epsilon_; }

  /// Levels at squeeze r.
  std::size_t resolve(SqueezeParameter r) const;
  /// Epsilon below 0.1 is known to produce unstable S(a) curves.
  bool below_stability_floor() const;

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;

 private:
  TruncationSpec(Kind kind, std::size_t n, double epsilon)
      : kind_(kind), n_(n), epsilon_(epsilon) {}

  Kind kind_;
  std::size_t n_;
  double epsilon_;
};

inline constexpr double kEpsilonStabilityFloor = 0.1;

/// 0 at r = 0, otherwise -2π / ln(tanh² r).
AccelerationRatio acceleration_from_squeeze(SqueezeParameter r);
/// artanh(exp(-π / (a/|k|c))), 0 at zero acceleration.
SqueezeParameter squeeze_from_acceleration(AccelerationRatio a);

std::size_t truncation_level(SqueezeParameter r, double epsilon);

/// (1/cosh r) Σ_{n<N} tanhⁿr |n⟩_I |n⟩_II on factors (N, N).
Ket vacuum_two_mode(std::size_t n_levels, SqueezeParameter r);
/// (1/cosh²r) Σ_{n<N-1} tanhⁿr √(n+1) |n+1⟩_I |n⟩_II on factors (N, N).
Ket particle_two_mode(std::size_t n_levels, SqueezeParameter r);

/// (1/cosh r) [|0⟩ + Σ_{n=1}^{N-2} tanhⁿr |n⟩] on one factor of size N.
Ket vacuum_compat(std::size_t n_levels, SqueezeParameter r);
/// (1/cosh²r) [|0⟩ + Σ_{n=1}^{N-2} tanhⁿr √(n+1) |n+1⟩] on one factor of size N.
Ket particle_compat(std::size_t n_levels, SqueezeParameter r);

}  // namespace unruh

#endif  // UNRUH_RINDLER_HPP
