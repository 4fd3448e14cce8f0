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
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "support/oracles.hpp"

using namespace unruh;

namespace {

// Reference values computed with mpmath at 40 digits.
constexpr double kArtanhExpMinusPi = 0.04324084828357017786;
constexpr double kAccelerationAtOne = 11.53549133057977149;
constexpr double kAccelerationAtSix = 255654.6285260238168;
constexpr double kSechOne = 0.6480542736638853996;
constexpr double kTanhOneSechOne = 0.4935543475645730753;
constexpr double kSech2One = 0.4199743416140260694;
constexpr double kCompatParticleTwo = 0.4523362138995383912;  // tanh1·√2/cosh²1
constexpr double kHalfParticleTwo = 0.5139690360230246278;    // tanh½·√2/cosh²½

SqueezeParameter sq(double r) { return SqueezeParameter(r); }

Complex at(const Ket& k, std::size_t i, std::size_t j) { return k[i * k.dims()[1] + j]; }

}  // namespace

TEST(SqueezeParameter, Validation) {
  EXPECT_NO_THROW(sq(0.0));
  EXPECT_THROW(sq(-0.1), ArgumentError);
  EXPECT_THROW(sq(INFINITY), ArgumentError);
  EXPECT_THROW(sq(NAN), ArgumentError);
  EXPECT_THROW(AccelerationRatio(-1.0), ArgumentError);
}

TEST(AccelerationFromSqueeze, ReferencePoints) {
  EXPECT_EQ(acceleration_from_squeeze(sq(0.0)).value(), 0.0);
  EXPECT_NEAR(acceleration_from_squeeze(sq(kArtanhExpMinusPi)).value(), 1.0, 1e-10);
  EXPECT_NEAR(acceleration_from_squeeze(sq(1.0)).value(), kAccelerationAtOne, 1e-12);
  EXPECT_NEAR(acceleration_from_squeeze(sq(6.0)).value() / kAccelerationAtSix, 1.0, 1e-12);
}

TEST(AccelerationFromSqueeze, AgreesWithScriptFormula) {
  for (double r = 0.01; r < 2.0; r += 0.07)
    EXPECT_NEAR(acceleration_from_squeeze(sq(r)).value() / oracle::script_acceleration(r), 1.0,
                1e-12);
}

TEST(AccelerationFromSqueeze, StrictlyIncreasing) {
  double previous = 0.0;
  for (double r = 0.005; r <= 6.0; r += 0.005) {
    const double a = acceleration_from_squeeze(sq(r)).value();
    EXPECT_GT(a, previous) << "r=" << r;
    previous = a;
  }
}

TEST(SqueezeFromAcceleration, ReferencePoints) {
  EXPECT_EQ(squeeze_from_acceleration(AccelerationRatio(0.0)).value(), 0.0);
  EXPECT_NEAR(squeeze_from_acceleration(AccelerationRatio(1.0)).value(), kArtanhExpMinusPi,
              1e-15);
  EXPECT_TRUE(std::isinf(AccelerationRatio(0.0).omega()));
  EXPECT_DOUBLE_EQ(AccelerationRatio(4.0).omega(), 0.25);
}

TEST(SqueezeFromAcceleration, RoundTrip) {
  for (double r : {0.1, 0.5, 1.0, 2.0, 6.0}) {
    const double back = squeeze_from_acceleration(acceleration_from_squeeze(sq(r))).value();
    EXPECT_LT(std::abs(back - r) / r, 1e-10) << "r=" << r;
  }
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(1e-3, 6.0);
  for (int i = 0; i < 500; ++i) {
    const double r = u(rng);
    const double back = squeeze_from_acceleration(acceleration_from_squeeze(sq(r))).value();
    EXPECT_LT(std::abs(back - r) / r, 1e-10) << "r=" << r;
  }
}

TEST(TruncationLevel, ReferenceValues) {
  EXPECT_EQ(truncation_level(sq(0.0), 0.1), 2u);
  EXPECT_EQ(truncation_level(sq(0.5), 0.1), 3u);
  EXPECT_EQ(truncation_level(sq(2.0), 0.1), 63u);
  EXPECT_THROW(truncation_level(sq(1.0), 0.0), ArgumentError);
  EXPECT_THROW(truncation_level(sq(1.0), 1.0), ArgumentError);
}

TEST(TruncationLevel, MatchesSearchOracleAndBrackets) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> ur(0.0, 4.0), ue(0.01, 0.9);
  for (int i = 0; i < 300; ++i) {
    const double r = ur(rng), eps = ue(rng);
    const std::size_t n = truncation_level(sq(r), eps);
    EXPECT_EQ(n, oracle::truncation_search(r, eps)) << "r=" << r << " eps=" << eps;
    const double t = std::tanh(r);
    EXPECT_LT(std::pow(t, n), eps);
    if (t > eps && n > 2) EXPECT_GE(std::pow(t, n - 1), eps);
  }
}

TEST(TruncationSpec, Modes) {
  const auto fixed = TruncationSpec::fixed(3);
  EXPECT_EQ(fixed.resolve(sq(1.9)), 3u);
  EXPECT_FALSE(fixed.below_stability_floor());
  EXPECT_THROW(TruncationSpec::fixed(1), ArgumentError);

  const auto eps = TruncationSpec::from_epsilon(0.1);
  EXPECT_EQ(eps.resolve(sq(2.0)), 63u);
  EXPECT_FALSE(eps.below_stability_floor());
  EXPECT_TRUE(TruncationSpec::from_epsilon(0.05).below_stability_floor());
  EXPECT_THROW(TruncationSpec::from_epsilon(1.5), ArgumentError);
}

TEST(VacuumTwoMode, ZeroSqueezeIsVacuum) {
  const Ket v = vacuum_two_mode(3, sq(0.0));
  EXPECT_EQ(v.dims(), (FactorDims{3, 3}));
  EXPECT_EQ(at(v, 0, 0), Complex(1));
  EXPECT_DOUBLE_EQ(v.squared_norm(), 1.0);
}

TEST(VacuumTwoMode, CoefficientsAtRadiusOne) {
  const Ket v = vacuum_two_mode(2, sq(1.0));
  EXPECT_NEAR(at(v, 0, 0).real(), kSechOne, 1e-15);
  EXPECT_NEAR(at(v, 1, 1).real(), kTanhOneSechOne, 1e-15);
  EXPECT_EQ(at(v, 0, 1), Complex(0));
  EXPECT_EQ(at(v, 1, 0), Complex(0));
}

TEST(VacuumTwoMode, NormApproachesOneGeometrically) {
  // ‖v‖² = (1/cosh²r) Σ_{n<N} tanh^{2n} r = 1 - tanh^{2N} r.
  const double t = std::tanh(1.0);
  const Ket v = vacuum_two_mode(200, sq(1.0));
  EXPECT_NEAR(v.squared_norm(), 1.0, 1e-15);
  EXPECT_LT(std::pow(t, 400), 1e-40);
  for (std::size_t n : {2u, 3u, 5u, 10u})
    EXPECT_NEAR(vacuum_two_mode(n, sq(1.0)).squared_norm(), 1.0 - std::pow(t, 2.0 * n), 1e-15);
}

TEST(ParticleTwoMode, Values) {
  const Ket p0 = particle_two_mode(3, sq(0.0));
  EXPECT_EQ(at(p0, 1, 0), Complex(1));
  EXPECT_DOUBLE_EQ(p0.squared_norm(), 1.0);

  const Ket p = particle_two_mode(2, sq(1.0));
  EXPECT_NEAR(at(p, 1, 0).real(), kSech2One, 1e-15);
  EXPECT_NEAR(p.squared_norm(), kSech2One * kSech2One, 1e-15);
}

TEST(TwoModeStates, Orthogonal) {
  for (double r : {0.0, 0.3, 1.0, 2.5})
    EXPECT_EQ(vacuum_two_mode(6, sq(r)).inner(particle_two_mode(6, sq(r))), Complex(0));
}

TEST(TwoModeStates, RejectSmallN) {
  EXPECT_THROW(vacuum_two_mode(1, sq(0.5)), ArgumentError);
  EXPECT_THROW(particle_two_mode(1, sq(0.5)), ArgumentError);
  EXPECT_THROW(vacuum_compat(1, sq(0.5)), ArgumentError);
  EXPECT_THROW(particle_compat(1, sq(0.5)), ArgumentError);
}

TEST(TwoModeStates, NormsBoundedByOne) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> ur(0.0, 5.0);
  std::uniform_int_distribution<std::size_t> un(2, 40);
  for (int i = 0; i < 200; ++i) {
    const double r = ur(rng);
    const std::size_t n = un(rng);
    EXPECT_LE(vacuum_two_mode(n, sq(r)).norm(), 1.0 + 1e-15);
    EXPECT_LE(particle_two_mode(n, sq(r)).norm(), 1.0 + 1e-15);
  }
}

TEST(TwoModeStates, CoefficientsFollowTermRatios) {
  // Consecutive vacuum terms differ by tanh r; particle terms by
  // tanh r·√((n+2)/(n+1)). Both are non-negative; past the first term the
  // particle ratio is below one only while tanh r < √(2/3), i.e. r < 1.146.
  for (double r : {0.1, 0.4, 0.8, 1.1, 1.2}) {
    const std::size_t n = 12;
    const double t = std::tanh(r);
    const Ket v = vacuum_two_mode(n, sq(r));
    const Ket p = particle_two_mode(n, sq(r));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      EXPECT_GE(at(v, k, k).real(), 0.0);
      EXPECT_NEAR(at(v, k + 1, k + 1).real(), at(v, k, k).real() * t, 1e-15);
      EXPECT_LT(at(v, k + 1, k + 1).real(), at(v, k, k).real());
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
      const double here = at(p, k + 1, k).real();
      const double next = at(p, k + 2, k + 1).real();
      EXPECT_GE(here, 0.0);
      EXPECT_NEAR(next, here * t * std::sqrt((k + 2.0) / (k + 1.0)), 1e-15);
      if (k >= 1 && t * std::sqrt(1.5) < 1.0) EXPECT_LT(next, here) << "r=" << r << " k=" << k;
    }
  }
}

TEST(VacuumCompat, ScriptValues) {
  const Ket v0 = vacuum_compat(3, sq(0.0));
  EXPECT_EQ(v0.dims(), FactorDims{3});
  EXPECT_EQ(v0[0], Complex(1));
  EXPECT_EQ(v0[1], Complex(0));

  const Ket v = vacuum_compat(3, sq(1.0));
  EXPECT_NEAR(v[0].real(), kSechOne, 1e-15);
  EXPECT_NEAR(v[1].real(), kTanhOneSechOne, 1e-15);
  // Cutoff at N-2: the top level stays empty.
  EXPECT_EQ(v[2], Complex(0));

  const auto ref = oracle::script_vacuum(5, 0.7);
  const Ket v5 = vacuum_compat(5, sq(0.7));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(v5[i].real(), ref[i], 1e-15);
}

TEST(ParticleCompat, ScriptValues) {
  // At r = 0 the script's particle state is |0⟩, not |1⟩.
  const Ket p0 = particle_compat(3, sq(0.0));
  EXPECT_EQ(p0[0], Complex(1));
  EXPECT_EQ(p0[1], Complex(0));
  EXPECT_EQ(p0[2], Complex(0));

  const Ket p = particle_compat(3, sq(1.0));
  EXPECT_NEAR(p[0].real(), kSech2One, 1e-15);
  EXPECT_EQ(p[1], Complex(0));
  EXPECT_NEAR(p[2].real(), kCompatParticleTwo, 1e-15);

  EXPECT_NEAR(particle_compat(4, sq(0.5))[2].real(), kHalfParticleTwo, 1e-15);

  const auto ref = oracle::script_particle(6, 1.3);
  const Ket p6 = particle_compat(6, sq(1.3));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(p6[i].real(), ref[i], 1e-15);
}
