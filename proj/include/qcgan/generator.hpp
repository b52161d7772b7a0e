// Copyright 2026 The QCGAN Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcgan/bas.hpp"
#include "qcgan/circuit.hpp"
#include "qcgan/discriminator.hpp"
#include "qcgan/quantum_state.hpp"
#include "qcgan/rng.hpp"

namespace qcgan {

enum class GradientMode { Exact, Shot };
/// What the discriminator sees of the generator: measured bits, or the
/// per-label expectation of each data qubit.
enum class DiscriminatorInputMode { Sampled, Expectation };

/// Parameterized generator acting on |0>^n_d (x) |y>.
class GeneratorModel {
 public:
  GeneratorModel(ParamCircuit circuit, std::vector<double> theta, ParamCircuit condition_encoder,
                 int n_d);

  /// Generator from build_generator plus an encoder built for `condition`.
  static GeneratorModel create(int n_d, const ConditionSpec& condition, int layers,
                               Topology topology, std::vector<double> theta);

  const ParamCircuit& circuit() const { return circuit_; }
  const ParamCircuit& condition_encoder() const { return encoder_; }
  const std::vector<double>& theta() const { return theta_; }
  std::vector<double>& mutable_theta() { return theta_; }
  void set_theta(std::vector<double> theta);

  int n_d() const { return n_d_; }
  int n_c() const { return n_c_; }
  int n_qubits() const { return n_d_ + n_c_; }
  int n_params() const { return circuit_.n_params(); }

  /// Same generator with its condition register re-encoded.
  GeneratorModel with_condition(const ConditionSpec& condition) const;

  /// |0>^n_d (x) |y>, before the generator runs.
  const QuantumState& input_state() const { return input_; }

  QuantumState output_state() const;
  QuantumState output_state(std::span<const double> theta) const;

 private:
  ParamCircuit circuit_;
  std::vector<double> theta_;
  ParamCircuit encoder_;
  int n_d_;
  int n_c_;
  QuantumState input_;
};

/// Probability vector over all 2^(n_d + n_c) joint outcomes.
std::vector<double> generator_output_distribution(const GeneratorModel& model);

/// Splits a joint outcome into (data bits, condition bits).
Sample outcome_sample(std::uint64_t outcome, int n_d, int n_c);

/// Probability of each one-hot condition label, indexed by category j - 1
/// (bit j counting from the right).
std::vector<double> condition_marginal(std::span<const double> joint, int n_d, int n_c);

struct ObjectiveOptions {
  GradientMode mode = GradientMode::Exact;
  int shots = 1000;
  DiscriminatorInputMode input = DiscriminatorInputMode::Sampled;
  std::uint64_t seed = 0;
};

/// E_{x ~ p_theta}[log D(x|y)] with log clamped at 1e-12.
double generator_objective(const GeneratorModel& model, const DiscriminatorParams& disc,
                           const ObjectiveOptions& opts = {});

/// The objective as a function of an explicit joint distribution.
double objective_of_distribution(std::span<const double> joint, int n_d, int n_c,
                                 const DiscriminatorParams& disc, DiscriminatorInputMode input);

/// One shifted evaluation point of a shift rule.
struct ShiftTerm {
  double shift;
  double coeff;
};

/// Two terms at +-pi/2 for single-qubit rotations; four terms at +-pi/2 and
/// +-3pi/2 for controlled rotations, whose generator has eigenvalues {0, +-1}.
std::vector<ShiftTerm> shift_rule(GateKind kind);

/// dV/dtheta_i by the parameter-shift rule.
double parameter_shift_gradient(const GeneratorModel& model, const DiscriminatorParams& disc,
                                int index, const ObjectiveOptions& opts = {});

/// Full gradient vector. Shifted circuits resume from cached prefix states
/// and run in parallel; the result does not depend on the thread count.
std::vector<double> generator_gradient(const GeneratorModel& model, const DiscriminatorParams& disc,
                                       const ObjectiveOptions& opts = {});

/// Generator-side discriminator inputs for a batch of `count` draws.
Batch generator_batch(std::span<const double> joint, int n_d, int n_c, std::size_t count,
                      DiscriminatorInputMode input, Rng& rng);

}  // namespace qcgan
