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

// Two entangled Wigner's-friend laboratories and the CHSH test run on them
// by the super-observers Alice and Bob.
//
// Charlie (lab C) measures field mode j, Debbie (lab D) measures mode k. After
// both measurements the joint state is
//
//   |Ψ̃⟩ = -sin(θ/2)|Φ⁺⟩ + cos(θ/2)|Ψ⁻⟩,
//   |Φ⁺⟩ = (|A_g B_g⟩ - |A_e B_e⟩)/√2,   |Ψ⁻⟩ = (|A_g B_e⟩ + |A_e B_g⟩)/√2,
//
// with |A_g⟩ = |0⟩_j|C₀⟩, |A_e⟩ = |1⟩_j|C₁⟩ and likewise for Bob. Each side
// measures a z-like projector difference or an x-like coherence between its
// g and e outcome states.
//
// Factor layouts per mode:
//   inertial              (Alice field 2, C 2, Bob field 2, D 2)
//   accelerated_compat    (Alice field N, C N, Bob field N, D N)
//   accelerated_faithful  (Alice field N, C 2, region I N, region II N, D 2)
// The reduced faithful state ρ^I (region II traced out) has layout
//   (Alice field N, C 2, region I N, D 2).

#ifndef UNRUH_WIGNER_HPP
#define UNRUH_WIGNER_HPP

#include <array>
#include <cstddef>
#include <numbers>

#include "unruh/fockspace.hpp"
#include "unruh/rindler.hpp"

namespace unruh {

enum class Mode { inertial, accelerated_compat, accelerated_faithful };

/// Where Bob's operators act in faithful mode: on (I, II, D) built from the
/// raw two-mode vectors, or on (I, D) after contracting region II and
/// orthonormalizing (g first, then e).
enum class BobObservables { global, reduced };

struct ExperimentConfig {
  double theta = std::numbers::pi / 4.0;
  TruncationSpec trunc = TruncationSpec::fixed(3);
  SqueezeParameter r{};
  Mode mode = Mode::inertial;
  BobObservables bob_observables = BobObservables::reduced;

  /// Throws ArgumentError on a non-finite θ.
  void validate() const;
  /// Fock levels kept for Bob's mode (2 in inertial mode).
  std::size_t levels() const;
};

struct ChshResult {
  /// ⟨A₁B₁⟩, ⟨A₁B₂⟩, ⟨A₂B₁⟩, ⟨A₂B₂⟩
  std::array<double, 4> correlators{};
  double S = 0.0;
};

/// S = |E₁₁ + E₁₂ + E₂₁ - E₂₂|.
ChshResult make_chsh_result(const std::array<double, 4>& correlators);

struct OutcomeStates {
  Ket alice_g;
  Ket alice_e;
  Ket bob_g;
  Ket bob_e;
};

struct Observables {
  DensityOperator a1;
  DensityOperator a2;
  DensityOperator b1;
  DensityOperator b2;
};

// -- Single Wigner's-friend laboratory ---------------------------------------

/// (|0⟩_B|F₀⟩ + |1⟩_B|F₁⟩)/√2 on factors (B 2, F 2).
Ket friend_composite_state();

/// |Φ⁺⟩, |Φ⁻⟩, |Ψ⁺⟩, |Ψ⁻⟩ over (B, F).
std::array<Ket, 4> bell_basis();

/// Builds |Φ⁺⟩_BF ⊗ |message⟩ with a message space of the given dimension and
/// reports whether the message factors out (Schmidt rank 1 across BF | msg).
bool message_factorization_check(std::size_t message_dim);

// -- Two-laboratory Bell test ---------------------------------------------

/// -sin(θ/2)|φ⁻⟩ + cos(θ/2)|ψ⁺⟩ on (mode j 2, mode k 2).
Ket initial_field_state(double theta);

/// |A_g⟩, |A_e⟩, |B_g⟩, |B_e⟩ for the configured mode. Faithful-mode Bob
/// states are the raw truncated vectors on (I, II, D).
OutcomeStates outcome_states(const ExperimentConfig& config);

/// |Ψ̃⟩ for the configured mode, not normalized.
Ket post_measurement_state(const ExperimentConfig& config);

Observables observables(const ExperimentConfig& config);

ChshResult chsh(const ExperimentConfig& config);

/// Correlators tr(ρ AᵢBⱼ) for a state on Alice's factors followed by Bob's,
/// with ρ normalized by its trace first.
ChshResult chsh_from_density(const DensityOperator& rho, const Observables& obs);

/// Faithful mode: ρ^I assembled term by term from the sixteen outer products
/// |A B⟩⟨A' B'| with region II contracted explicitly. Same trace as
/// ⟨Ψ̃|Ψ̃⟩; no normalization.
DensityOperator appendix_a_density(const ExperimentConfig& config);

/// Faithful mode: the pre-measurement field state of mode j and Bob's
/// Unruh-transformed mode k on (j N, region I N, region II N).
Ket accelerated_field_state(const ExperimentConfig& config);

/// Faithful mode: log-negativity between mode j and region I of mode k once
/// region II is traced out.
double entanglement_curve(const ExperimentConfig& config);

}  // namespace unruh

#endif  // UNRUH_WIGNER_HPP
