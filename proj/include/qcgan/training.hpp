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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcgan/bas.hpp"
#include "qcgan/circuit.hpp"
#include "qcgan/error.hpp"
#include "qcgan/discriminator.hpp"
#include "qcgan/generator.hpp"
#include "qcgan/metrics.hpp"

namespace qcgan {

enum class ThetaInit { Uniform, Normal };

struct TrainingConfig {
  int epochs = 100;
  int iterations_per_epoch = 150;
  int batch_size = 40;
  double lr_initial = 0.001;
  int lr_decay_every = 10;
  double lr_decay_factor = 0.1;
  double early_stop_threshold = 0.95;
  int layers = 3;
  Topology topology = Topology::AllToAll;
  GradientMode gradient_mode = GradientMode::Exact;
  int gradient_shots = 1000;
  DiscriminatorInputMode discriminator_input = DiscriminatorInputMode::Sampled;
  int eval_shots = 10000;
  ThetaInit theta_init = ThetaInit::Uniform;
  double theta_init_scale = 3.141592653589793;
  std::vector<double> condition_probs = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::uint64_t seed = 2024;

  /// Throws ValidationError on non-positive counts or a threshold outside (0, 1].
  void validate() const;
  ObjectiveOptions objective_options(std::uint64_t seed) const;
};

/// Learning rate for `epoch`: lr_initial * decay_factor^floor(epoch / decay_every).
double lr_schedule(int epoch, const TrainingConfig& config);

struct IterationRecord {
  int epoch = 0;
  int iteration = 0;
  double d_loss = 0.0;
  double g_loss = 0.0;
  double lr = 0.0;
};

struct EpochRecord {
  int epoch = 0;
  EvalReport report;
};

struct TrainingHistory {
  std::vector<IterationRecord> iterations;
  std::vector<EpochRecord> epochs;

  /// `epoch,iteration,d_loss,g_loss,lr` with a header line.
  std::string history_csv() const;
  /// `epoch,validity,condition_match,uniformity,composite` with a header line.
  std::string metrics_csv() const;
};

/// Everything that evolves during training.
struct TrainingState {
  GeneratorModel model;
  DiscriminatorParams disc;
  AdamState adam_g;
  AdamState adam_d;
  TrainingHistory history;
  int epochs_completed = 0;
  bool early_stopped = false;
};

/// Generator angles drawn per config.theta_init from the init seed stream.
std::vector<double> init_theta(int n_params, const TrainingConfig& config);

/// Fresh models for a run.
TrainingState initial_state(const TrainingConfig& config);

/// Thrown when a loss turns non-finite; carries the state for a diagnostic checkpoint.
class TrainingAborted : public NumericError {
 public:
  TrainingAborted(const std::string& what, TrainingState state)
      : NumericError(what), state_(std::move(state)) {}
  const TrainingState& state() const { return state_; }

 private:
  TrainingState state_;
};


/// One Adam step on the discriminator against `batch_size` generator draws.
/// Returns the loss after the step on the same real and fake batches.
double train_discriminator_step(const GeneratorModel& model, DiscriminatorParams& disc,
                                AdamState& adam, const std::vector<Sample>& real_batch, double lr,
                                const TrainingConfig& config, Rng& rng);

/// One Adam step raising E[log D] for the generator. Returns -E[log D] after the step.
double train_generator_step(GeneratorModel& model, const DiscriminatorParams& disc, AdamState& adam,
                            double lr, const TrainingConfig& config, std::uint64_t seed);

/// Called after each epoch's evaluation.
using EpochObserver = std::function<void(const TrainingState&)>;

TrainingState train(const TrainingConfig& config, const std::vector<Sample>& dataset,
                    const EpochObserver& observer = {});

}  // namespace qcgan
