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

#include "qcgan/training.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qcgan/error.hpp"

namespace qcgan {

namespace {

// Seed streams derived from config.seed.
enum Stream : std::uint64_t {
  kThetaStream = 1,
  kDiscStream = 2,
  kShuffleStream = 3,
  kFakeStream = 4,
  kGradStream = 5,
  kEvalStream = 6,
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void TrainingConfig::validate() const {
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  if (iterations_per_epoch < 1) throw ValidationError("iterations_per_epoch must be positive");
  if (batch_size < 1) throw ValidationError("batch_size must be positive");
  if (!(lr_initial >= 0.0)) throw ValidationError("lr_initial must be >= 0");
  if (lr_decay_every < 1) throw ValidationError("lr_decay_every must be positive");
  if (!(lr_decay_factor > 0.0)) throw ValidationError("lr_decay_factor must be positive");
  if (!(early_stop_threshold > 0.0 && early_stop_threshold <= 1.0)) {
    throw ValidationError("early_stop_threshold must lie in (0, 1]");
  }
  if (layers < 1) throw ValidationError("layers must be positive");
  if (gradient_shots < 1) throw ValidationError("gradient_shots must be positive");
  if (eval_shots < 1) throw ValidationError("eval_shots must be positive");
  if (!(theta_init_scale >= 0.0)) throw ValidationError("theta_init_scale must be >= 0");
  ConditionSpec{condition_probs}.validate();
  if (condition_probs.size() != static_cast<std::size_t>(kConditionQubits)) {
    throw ValidationError("BAS(2,2) training uses three condition categories");
  }
}

ObjectiveOptions TrainingConfig::objective_options(std::uint64_t s) const {
  return {gradient_mode, gradient_shots, discriminator_input, s};
}

double lr_schedule(int epoch, const TrainingConfig& config) {
  if (epoch < 0) throw ValidationError("epoch must be >= 0");
  return config.lr_initial * std::pow(config.lr_decay_factor, epoch / config.lr_decay_every);
}

std::string TrainingHistory::history_csv() const {
  std::ostringstream os;
  os << "epoch,iteration,d_loss,g_loss,lr\n";
  for (const auto& r : iterations) {
    os << r.epoch << ',' << r.iteration << ',' << fmt_double(r.d_loss) << ',' << fmt_double(r.g_loss)
       << ',' << fmt_double(r.lr) << '\n';
  }
  return os.str();
}

std::string TrainingHistory::metrics_csv() const {
  std::ostringstream os;
  os << "epoch,validity,condition_match,uniformity,composite\n";
  for (const auto& r : epochs) os << r.epoch << ',' << r.report.csv_row() << '\n';
  return os.str();
}

std::vector<double> init_theta(int n_params, const TrainingConfig& config) {
  Rng rng(derive_seed(config.seed, kThetaStream));
  std::vector<double> theta(static_cast<std::size_t>(n_params));
  for (auto& t : theta) {
    if (config.theta_init == ThetaInit::Uniform) {
      t = uniform(rng, -config.theta_init_scale, config.theta_init_scale);
    } else {
      // Box-Muller, one value per pair of uniforms
      const double u1 = 1.0 - uniform01(rng);
      const double u2 = uniform01(rng);
      t = config.theta_init_scale * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
  }
  return theta;
}

TrainingState initial_state(const TrainingConfig& config) {
  config.validate();
  const ConditionSpec condition{config.condition_probs};
  auto circuit = build_generator(kDataQubits, condition.m(), config.layers, config.topology);
  auto theta = init_theta(circuit.n_params(), config);
  GeneratorModel model(std::move(circuit), std::move(theta), build_condition_encoder(condition),
                       kDataQubits);
  auto disc = init_discriminator(derive_seed(config.seed, kDiscStream), model.n_qubits());
  const auto np = static_cast<std::size_t>(model.n_params());
  const auto nd = disc.size();
  return TrainingState{std::move(model), std::move(disc), AdamState::zeros(np), AdamState::zeros(nd),
                       {}, 0, false};
}

double train_discriminator_step(const GeneratorModel& model, DiscriminatorParams& disc,
                                AdamState& adam, const std::vector<Sample>& real_batch, double lr,
                                const TrainingConfig& config, Rng& rng) {
  if (real_batch.empty()) throw ValidationError("real batch is empty");
  Batch real;
  real.reserve(real_batch.size());
  for (const auto& s : real_batch) real.push_back(s.as_input());
  const auto joint = generator_output_distribution(model);
  const Batch fake = generator_batch(joint, model.n_d(), model.n_c(),
                                     static_cast<std::size_t>(config.batch_size),
                                     config.discriminator_input, rng);
  const auto grad = discriminator_grad(disc, real, fake);
  adam_step(disc, grad, adam, lr);
  return discriminator_loss(disc, real, fake);
}

double train_generator_step(GeneratorModel& model, const DiscriminatorParams& disc, AdamState& adam,
                            double lr, const TrainingConfig& config, std::uint64_t seed) {
  const auto opts = config.objective_options(seed);
  auto grad = generator_gradient(model, disc, opts);
  // ascent on V == descent on -V
  for (auto& g : grad) g = -g;
  adam_step(model.mutable_theta(), grad, adam, lr);
  for (double t : model.theta()) {
    if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
  }
  return -generator_objective(model, disc, config.objective_options(derive_seed(seed, 0xE7A1)));
}

TrainingState train(const TrainingConfig& config, const std::vector<Sample>& dataset,
                    const EpochObserver& observer) {
  if (dataset.empty()) throw ValidationError("training set is empty");
  TrainingState st = initial_state(config);
  Rng fake_rng(derive_seed(config.seed, kFakeStream));

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const double lr = lr_schedule(epoch, config);
    const auto chunks = batches(dataset, config.batch_size,
                                derive_seed(derive_seed(config.seed, kShuffleStream), static_cast<std::uint64_t>(epoch)));
    for (int it = 0; it < config.iterations_per_epoch; ++it) {
      const auto& real = chunks[static_cast<std::size_t>(it) % chunks.size()];
      const auto abort = [&](const char* which) {
        throw TrainingAborted(std::string("non-finite ") + which + " loss at epoch " +
                                  std::to_string(epoch) + " iteration " + std::to_string(it),
                              st);
      };
      const double d_loss = train_discriminator_step(st.model, st.disc, st.adam_d, real, lr, config, fake_rng);
      if (!std::isfinite(d_loss)) {
        st.history.iterations.push_back({epoch, it, d_loss, std::numeric_limits<double>::quiet_NaN(), lr});
        abort("discriminator");
      }
      const std::uint64_t step = static_cast<std::uint64_t>(epoch) * 1000003ULL + static_cast<std::uint64_t>(it);
      const double g_loss = train_generator_step(st.model, st.disc, st.adam_g, lr, config,
                                                 derive_seed(derive_seed(config.seed, kGradStream), step));
      st.history.iterations.push_back({epoch, it, d_loss, g_loss, lr});
      if (!std::isfinite(g_loss)) abort("generator");
    }
    const auto samples = sample_generator(st.model, config.eval_shots,
                                          derive_seed(derive_seed(config.seed, kEvalStream), static_cast<std::uint64_t>(epoch)));
    st.history.epochs.push_back({epoch, evaluate_samples(samples)});
    st.epochs_completed = epoch + 1;
    if (st.history.epochs.back().report.composite >= config.early_stop_threshold) st.early_stopped = true;
    if (observer) observer(st);
    if (st.early_stopped) break;
  }
  return st;
}

}  // namespace qcgan
