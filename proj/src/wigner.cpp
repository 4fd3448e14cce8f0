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

#include "unruh/wigner.hpp"

#include <cmath>
#include <string>

namespace unruh {
namespace {

using Index = Eigen::Index;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Factor positions inside the faithful five-factor layout.
constexpr std::size_t kRegionTwoFactor = 3;
// Region II inside Bob's own (I, II, D) vectors.
constexpr std::size_t kBobRegionTwo = 1;

void require_faithful(const ExperimentConfig& config, const char* what) {
  if (config.mode != Mode::accelerated_faithful)
    throw ArgumentError(std::string(what) + ": requires accelerated_faithful mode");
}

// -sin(θ/2)(|gg⟩ - |ee⟩)/√2 + cos(θ/2)(|ge⟩ + |eg⟩)/√2
Ket bell_combination(double theta, const Ket& ag, const Ket& ae, const Ket& bg,
                     const Ket& be) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Ket phi_plus = kInvSqrt2 * (tensor({ag, bg}) - tensor({ae, be}));
  const Ket psi_minus = kInvSqrt2 * (tensor({ag, be}) + tensor({ae, bg}));
  return (-s) * phi_plus + c * psi_minus;
}

DensityOperator z_like(const Ket& g, const Ket& e) {
  return DensityOperator((projector(g) - projector(e)).matrix(), g.dims(), true);
}

DensityOperator x_like(const Ket& g, const Ket& e) {
  return DensityOperator((outer(g, e) + outer(e, g)).matrix(), g.dims(), true);
}

// Contract region II with Σ_n ⟨n|, then orthonormalize g first and e against it.
std::pair<Ket, Ket> reduced_bob_pair(const Ket& bob_g, const Ket& bob_e) {
  const std::size_t levels = bob_g.dims()[kBobRegionTwo];
  const Ket ones(Vector::Ones(static_cast<Index>(levels)), FactorDims{levels});
  const Ket g = normalize(contract(bob_g, kBobRegionTwo, ones));
  Ket e = contract(bob_e, kBobRegionTwo, ones);
  e -= g.inner(e) * g;
  return {g, normalize(e)};
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!std::isfinite(theta)) throw ArgumentError("ExperimentConfig: theta must be finite");
  if (mode != Mode::accelerated_faithful && bob_observables == BobObservables::global)
    throw ArgumentError(
        "ExperimentConfig: bob_observables=global applies to accelerated_faithful only");
}

std::size_t ExperimentConfig::levels() const {
  return mode == Mode::inertial ? 2 : trunc.resolve(r);
}

ChshResult make_chsh_result(const std::array<double, 4>& correlators) {
  ChshResult result;
  result.correlators = correlators;
  result.S = std::abs(correlators[0] + correlators[1] + correlators[2] - correlators[3]);
  return result;
}

// ---------------------------------------------------------------------------

Ket friend_composite_state() {
  return kInvSqrt2 * (tensor({basis_ket(2, 0), basis_ket(2, 0)}) +
                      tensor({basis_ket(2, 1), basis_ket(2, 1)}));
}

std::array<Ket, 4> bell_basis() {
  const Ket b0 = basis_ket(2, 0), b1 = basis_ket(2, 1);
  const Ket f0 = basis_ket(2, 0), f1 = basis_ket(2, 1);
  return {kInvSqrt2 * (tensor({b0, f0}) + tensor({b1, f1})),
          kInvSqrt2 * (tensor({b0, f0}) - tensor({b1, f1})),
          kInvSqrt2 * (tensor({b0, f1}) + tensor({b1, f0})),
          kInvSqrt2 * (tensor({b0, f1}) - tensor({b1, f0}))};
}

bool message_factorization_check(std::size_t message_dim) {
  if (message_dim < 1) throw ArgumentError("message_factorization_check: dimension >= 1");
  // Basis state 0 encodes "I have observed a definite outcome".
  const Ket state = tensor({friend_composite_state(), basis_ket(message_dim, 0)});
  return schmidt_rank(state, 2) == 1;
}

Ket initial_field_state(double theta) {
  if (!std::isfinite(theta)) throw ArgumentError("initial_field_state: theta must be finite");
  const Ket z = basis_ket(2, 0), o = basis_ket(2, 1);
  const Ket phi_minus = kInvSqrt2 * (tensor({z, z}) - tensor({o, o}));
  const Ket psi_plus = kInvSqrt2 * (tensor({z, o}) + tensor({o, z}));
  return (-std::sin(theta / 2.0)) * phi_minus + std::cos(theta / 2.0) * psi_plus;
}

OutcomeStates outcome_states(const ExperimentConfig& config) {
  config.validate();
  switch (config.mode) {
    case Mode::inertial: {
      const Ket z = basis_ket(2, 0), o = basis_ket(2, 1);
      return {tensor({z, z}), tensor({o, o}), tensor({z, z}), tensor({o, o})};
    }
    case Mode::accelerated_compat: {
      // Fields and labs all live in dimension-N factors, as in the script.
      const std::size_t n = config.levels();
      const Ket z = basis_ket(n, 0), o = basis_ket(n, 1);
      return {tensor({z, z}), tensor({o, o}),
              tensor({vacuum_compat(n, config.r), z}),
              tensor({particle_compat(n, config.r), o})};
    }
    case Mode::accelerated_faithful: {
      const std::size_t n = config.levels();
      const Ket lab0 = basis_ket(2, 0), lab1 = basis_ket(2, 1);
      return {tensor({basis_ket(n, 0), lab0}), tensor({basis_ket(n, 1), lab1}),
              tensor({vacuum_two_mode(n, config.r), lab0}),
              tensor({particle_two_mode(n, config.r), lab1})};
    }
  }
  throw ArgumentError("outcome_states: unknown mode");
}

Ket post_measurement_state(const ExperimentConfig& config) {
  const OutcomeStates st = outcome_states(config);
  return bell_combination(config.theta, st.alice_g, st.alice_e, st.bob_g, st.bob_e);
}

Observables observables(const ExperimentConfig& config) {
  const OutcomeStates st = outcome_states(config);
  if (config.mode == Mode::accelerated_faithful &&
      config.bob_observables == BobObservables::reduced) {
    const auto [g, e] = reduced_bob_pair(st.bob_g, st.bob_e);
    return {z_like(st.alice_g, st.alice_e), x_like(st.alice_g, st.alice_e), z_like(g, e),
            x_like(g, e)};
  }
  return {z_like(st.alice_g, st.alice_e), x_like(st.alice_g, st.alice_e),
          z_like(st.bob_g, st.bob_e), x_like(st.bob_g, st.bob_e)};
}

ChshResult chsh_from_density(const DensityOperator& rho, const Observables& obs) {
  if (obs.a1.side() * obs.b1.side() != rho.side())
    throw ArgumentError("chsh_from_density: observables do not cover the state");
  const DensityOperator state = rho.normalized();
  const DensityOperator* alice[] = {&obs.a1, &obs.a2};
  const DensityOperator* bob[] = {&obs.b1, &obs.b2};
  std::array<double, 4> e{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      e[2 * i + j] = expectation(state, tensor_op({*alice[i], *bob[j]}));
  return make_chsh_result(e);
}

ChshResult chsh(const ExperimentConfig& config) {
  const Ket psi = post_measurement_state(config);
  const Observables obs = observables(config);

  if (config.mode == Mode::accelerated_faithful &&
      config.bob_observables == BobObservables::reduced) {
    return chsh_from_density(partial_trace(psi, {kRegionTwoFactor}), obs);
  }

  // Inertial and compat states are used as built (compat keeps the script's
  // unnormalized vector); faithful global normalizes the full state.
  const Ket state = config.mode == Mode::accelerated_faithful ? normalize(psi) : psi;
  const DensityOperator* alice[] = {&obs.a1, &obs.a2};
  const DensityOperator* bob[] = {&obs.b1, &obs.b2};
  std::array<double, 4> e{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) e[2 * i + j] = expectation(state, *alice[i], *bob[j]);
  return make_chsh_result(e);
}

DensityOperator appendix_a_density(const ExperimentConfig& config) {
  require_faithful(config, "appendix_a_density");
  const OutcomeStates st = outcome_states(config);
  const double s = std::sin(config.theta / 2.0);
  const double c = std::cos(config.theta / 2.0);
  const double ss = s * s / 2.0, sc = s * c / 2.0, cc = c * c / 2.0;

  enum Outcome { g, e };
  struct Term {
    Outcome a, b, a_bra, b_bra;
    double weight;
  };
  // |A B⟩⟨A' B'| weights of |Ψ̃⟩⟨Ψ̃|.
  const Term terms[16] = {
      {g, g, g, g, +ss}, {g, g, e, e, -ss}, {g, g, g, e, -sc}, {g, g, e, g, -sc},
      {e, e, g, g, -ss}, {e, e, e, e, +ss}, {e, e, g, e, +sc}, {e, e, e, g, +sc},
      {g, e, g, g, -sc}, {g, e, e, e, +sc}, {g, e, g, e, +cc}, {g, e, e, g, +cc},
      {e, g, g, g, -sc}, {e, g, e, e, +sc}, {e, g, g, e, +cc}, {e, g, e, g, +cc},
  };

  const Ket* alice[] = {&st.alice_g, &st.alice_e};
  const Ket* bob[] = {&st.bob_g, &st.bob_e};

  // Bob vectors are laid out (I, II, D); tr_II |B⟩⟨B'| sums the middle index.
  const std::size_t n1 = st.bob_g.dims()[0];
  const std::size_t n2 = st.bob_g.dims()[1];
  const std::size_t nd = st.bob_g.dims()[2];
  const std::size_t bob_side = n1 * nd;
  const std::size_t alice_side = st.alice_g.size();

  auto bob_reduced = [&](const Ket& ket, const Ket& bra) {
    Matrix m = Matrix::Zero(static_cast<Index>(bob_side), static_cast<Index>(bob_side));
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t d = 0; d < nd; ++d)
        for (std::size_t ip = 0; ip < n1; ++ip)
          for (std::size_t dp = 0; dp < nd; ++dp) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n2; ++k)
              sum += ket[(i * n2 + k) * nd + d] * std::conj(bra[(ip * n2 + k) * nd + dp]);
            m(static_cast<Index>(i * nd + d), static_cast<Index>(ip * nd + dp)) = sum;
          }
    return m;
  };

  Matrix rho = Matrix::Zero(static_cast<Index>(alice_side * bob_side),
                            static_cast<Index>(alice_side * bob_side));
  for (const Term& t : terms) {
    const Ket& a = *alice[t.a];
    const Ket& a_bra = *alice[t.a_bra];
    const Matrix bob_block = bob_reduced(*bob[t.b], *bob[t.b_bra]);
    for (std::size_t x = 0; x < alice_side; ++x)
      for (std::size_t y = 0; y < alice_side; ++y) {
        const Complex w = t.weight * a[x] * std::conj(a_bra[y]);
        if (w == Complex(0.0)) continue;
        rho.block(static_cast<Index>(x * bob_side), static_cast<Index>(y * bob_side),
                  static_cast<Index>(bob_side), static_cast<Index>(bob_side)) += w * bob_block;
      }
  }

  FactorDims dims = st.alice_g.dims().concat(FactorDims{n1, nd});
  return DensityOperator(std::move(rho), std::move(dims));
}

Ket accelerated_field_state(const ExperimentConfig& config) {
  require_faithful(config, "accelerated_field_state");
  config.validate();
  const std::size_t n = config.levels();
  const Ket zero = basis_ket(n, 0), one = basis_ket(n, 1);
  const Ket vac = vacuum_two_mode(n, config.r);
  const Ket par = particle_two_mode(n, config.r);
  // -sin(θ/2)|φ⁻⟩ + cos(θ/2)|ψ⁺⟩ with mode k's |0⟩, |1⟩ replaced.
  return bell_combination(config.theta, zero, one, vac, par);
}

double entanglement_curve(const ExperimentConfig& config) {
  const Ket field = accelerated_field_state(config);
  const DensityOperator rho = partial_trace(field, {2}).normalized();
  return log_negativity(rho, {0});
}

}  // namespace unruh
