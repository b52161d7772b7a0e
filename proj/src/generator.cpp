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

#include "qcgan/generator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qcgan/error.hpp"

namespace qcgan {

namespace {

QuantumState prepare_input(const ParamCircuit& encoder, int n_d) {
  QuantumState s(n_d + encoder.n_qubits());
  s.apply(qcgan::bind(encoder.embedded(n_d, n_d + encoder.n_qubits()), {}));
  return s;
}

}  // namespace

GeneratorModel::GeneratorModel(ParamCircuit circuit, std::vector<double> theta,
                               ParamCircuit condition_encoder, int n_d)
    : circuit_(std::move(circuit)),
      encoder_(std::move(condition_encoder)),
      n_d_(n_d),
      n_c_(encoder_.n_qubits()),
      input_(prepare_input(encoder_, n_d)) {
  if (circuit_.n_qubits() != n_d_ + n_c_) {
    throw ValidationError("generator width does not match data + condition qubits");
  }
  if (encoder_.n_params() != 0) throw ValidationError("condition encoder must be fully fixed");
  set_theta(std::move(theta));
}

GeneratorModel GeneratorModel::create(int n_d, const ConditionSpec& condition, int layers,
                                      Topology topology, std::vector<double> theta) {
  auto circuit = build_generator(n_d, condition.m(), layers, topology);
  if (theta.empty()) theta.assign(static_cast<std::size_t>(circuit.n_params()), 0.0);
  return GeneratorModel(std::move(circuit), std::move(theta), build_condition_encoder(condition), n_d);
}

void GeneratorModel::set_theta(std::vector<double> theta) {
  if (static_cast<int>(theta.size()) != circuit_.n_params()) {
    throw ValidationError("theta has " + std::to_string(theta.size()) + " entries, circuit needs " +
                          std::to_string(circuit_.n_params()));
  }
  for (double t : theta) {
    if (!std::isfinite(t)) throw ValidationError("theta must be finite");
  }
  theta_ = std::move(theta);
}

GeneratorModel GeneratorModel::with_condition(const ConditionSpec& condition) const {
  if (condition.m() != n_c_) throw ValidationError("condition width mismatch");
  return GeneratorModel(circuit_, theta_, build_condition_encoder(condition), n_d_);
}

QuantumState GeneratorModel::output_state() const { return output_state(theta_); }

QuantumState GeneratorModel::output_state(std::span<const double> theta) const {
  QuantumState s = input_;
  s.apply(qcgan::bind(circuit_, theta));
  return s;
}

std::vector<double> generator_output_distribution(const GeneratorModel& model) {
  return probabilities(model.output_state());
}

Sample outcome_sample(std::uint64_t outcome, int n_d, int n_c) {
  Sample s;
  s.data_bits.resize(static_cast<std::size_t>(n_d));
  s.label.resize(static_cast<std::size_t>(n_c));
  for (int q = 0; q < n_d; ++q) {
    s.data_bits[static_cast<std::size_t>(q)] = (outcome >> (n_d + n_c - 1 - q)) & 1u;
  }
  for (int q = 0; q < n_c; ++q) {
    s.label[static_cast<std::size_t>(q)] = (outcome >> (n_c - 1 - q)) & 1u;
  }
  return s;
}

std::vector<double> condition_marginal(std::span<const double> joint, int n_d, int n_c) {
  std::vector<double> out(static_cast<std::size_t>(n_c), 0.0);
  const std::uint64_t cond_mask = (std::uint64_t{1} << n_c) - 1;
  (void)n_d;
  for (std::uint64_t k = 0; k < joint.size(); ++k) {
    const std::uint64_t cond = k & cond_mask;
    if (cond != 0 && (cond & (cond - 1)) == 0) {
      out[static_cast<std::size_t>(std::countr_zero(cond))] += joint[k];
    }
  }
  return out;
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double clamped_log(double d) { return std::log(std::max(d, kLogClamp)); }

std::vector<double> outcome_input(std::uint64_t outcome, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) x[static_cast<std::size_t>(q)] = (outcome >> (n - 1 - q)) & 1u;
  return x;
}

// Per-label expectation inputs for the expectation mode: entry j holds
// (E[data | onehot_j], onehot_j) and the label probability.
struct LabelExpectations {
  std::vector<std::vector<double>> inputs;
  std::vector<double> weight;
};

LabelExpectations label_expectations(std::span<const double> joint, int n_d, int n_c) {
  LabelExpectations le;
  le.inputs.assign(static_cast<std::size_t>(n_c), std::vector<double>(static_cast<std::size_t>(n_d + n_c), 0.0));
  le.weight.assign(static_cast<std::size_t>(n_c), 0.0);
  const std::uint64_t cond_mask = (std::uint64_t{1} << n_c) - 1;
  for (std::uint64_t k = 0; k < joint.size(); ++k) {
    const std::uint64_t cond = k & cond_mask;
    if (cond == 0 || (cond & (cond - 1)) != 0) continue;
    const auto j = static_cast<std::size_t>(std::countr_zero(cond));
    le.weight[j] += joint[k];
    for (int q = 0; q < n_d; ++q) {
      if ((k >> (n_d + n_c - 1 - q)) & 1u) le.inputs[j][static_cast<std::size_t>(q)] += joint[k];
    }
  }
  for (std::size_t j = 0; j < le.inputs.size(); ++j) {
    auto& in = le.inputs[j];
    for (int q = 0; q < n_d; ++q) {
      auto& e = in[static_cast<std::size_t>(q)];
      e = le.weight[j] > 0.0 ? e / le.weight[j] : 0.0;
    }
    in[static_cast<std::size_t>(n_d + n_c - 1) - j] = 1.0;
  }
  return le;
}

// dF/dp_k for the exact objective at distribution `joint`.
std::vector<double> objective_weights(std::span<const double> joint, int n_d, int n_c,
                                      const DiscriminatorParams& disc, DiscriminatorInputMode input) {
  const int n = n_d + n_c;
  std::vector<double> w(joint.size(), 0.0);
  if (input == DiscriminatorInputMode::Sampled) {
    for (std::uint64_t k = 0; k < joint.size(); ++k) {
      w[k] = clamped_log(forward(disc, outcome_input(k, n)));
    }
    return w;
  }
  const auto le = label_expectations(joint, n_d, n_c);
  const std::uint64_t cond_mask = (std::uint64_t{1} << n_c) - 1;
  std::vector<double> logd(static_cast<std::size_t>(n_c));
  std::vector<std::vector<double>> grad(static_cast<std::size_t>(n_c));
  for (std::size_t j = 0; j < logd.size(); ++j) {
    logd[j] = clamped_log(forward(disc, le.inputs[j]));
    grad[j] = log_output_input_gradient(disc, le.inputs[j]);
  }
  for (std::uint64_t k = 0; k < joint.size(); ++k) {
    const std::uint64_t cond = k & cond_mask;
    if (cond == 0 || (cond & (cond - 1)) != 0) continue;
    const auto j = static_cast<std::size_t>(std::countr_zero(cond));
    double v = logd[j];
    for (int q = 0; q < n_d; ++q) {
      const double bit = (k >> (n - 1 - q)) & 1u;
      v += grad[j][static_cast<std::size_t>(q)] * (bit - le.inputs[j][static_cast<std::size_t>(q)]);
    }
    w[k] = v;
  }
  return w;
}

std::vector<double> empirical(std::span<const double> joint, int shots, Rng& rng) {
  std::vector<double> freq(joint.size(), 0.0);
  for (auto k : sample_outcomes(joint, static_cast<std::size_t>(shots), rng)) freq[k] += 1.0;
  for (auto& f : freq) f /= shots;
  return freq;
}

double evaluate(std::span<const double> joint, const GeneratorModel& model,
                const DiscriminatorParams& disc, const ObjectiveOptions& opts, std::uint64_t seed) {
  if (opts.mode == GradientMode::Exact) {
    return objective_of_distribution(joint, model.n_d(), model.n_c(), disc, opts.input);
  }
  if (opts.shots < 1) throw ValidationError("shot mode needs shots >= 1");
  Rng rng(seed);
  const auto freq = empirical(joint, opts.shots, rng);
  return objective_of_distribution(freq, model.n_d(), model.n_c(), disc, opts.input);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_disc(const GeneratorModel& model, const DiscriminatorParams& disc) {
  if (disc.input_dim() != model.n_qubits()) {
    throw ValidationError("discriminator input width does not match generator register");
  }
}

}  // namespace

double objective_of_distribution(std::span<const double> joint, int n_d, int n_c,
                                 const DiscriminatorParams& disc, DiscriminatorInputMode input) {
  if (input == DiscriminatorInputMode::Sampled) {
    const int n = n_d + n_c;
    double v = 0.0;
    for (std::uint64_t k = 0; k < joint.size(); ++k) {
      if (joint[k] == 0.0) continue;
      v += joint[k] * clamped_log(forward(disc, outcome_input(k, n)));
    }
    return v;
  }
  const auto le = label_expectations(joint, n_d, n_c);
  double v = 0.0;
  for (std::size_t j = 0; j < le.weight.size(); ++j) {
    if (le.weight[j] == 0.0) continue;
    v += le.weight[j] * clamped_log(forward(disc, le.inputs[j]));
  }
  return v;
}

double generator_objective(const GeneratorModel& model, const DiscriminatorParams& disc,
                           const ObjectiveOptions& opts) {
  check_disc(model, disc);
  return evaluate(generator_output_distribution(model), model, disc, opts, opts.seed);
}

std::vector<ShiftTerm> shift_rule(GateKind kind) {
  if (is_controlled_rotation(kind)) {
    const double cp = (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2);
    const double cm = (std::numbers::sqrt2 - 1.0) / (4.0 * std::numbers::sqrt2);
    return {{kHalfPi, cp}, {-kHalfPi, -cp}, {3 * kHalfPi, -cm}, {-3 * kHalfPi, cm}};
  }
  if (is_rotation(kind)) return {{kHalfPi, 0.5}, {-kHalfPi, -0.5}};
  throw ValidationError(std::string("no shift rule for ") + gate_name(kind));
}

double parameter_shift_gradient(const GeneratorModel& model, const DiscriminatorParams& disc,
                                int index, const ObjectiveOptions& opts) {
  check_disc(model, disc);
  if (index < 0 || index >= model.n_params()) throw ValidationError("parameter index out of range");
  const auto& slot = model.circuit().slots()[model.circuit().slot_of_param(index)];
  std::vector<double> weights;
  if (opts.mode == GradientMode::Exact) {
    weights = objective_weights(generator_output_distribution(model), model.n_d(), model.n_c(), disc,
                                opts.input);
  }
  double g = 0.0;
  std::uint64_t term = 0;
  for (const auto& [shift, coeff] : shift_rule(slot.kind)) {
    auto theta = model.theta();
    theta[static_cast<std::size_t>(index)] += shift;
    const auto joint = probabilities(model.output_state(theta));
    if (opts.mode == GradientMode::Exact) {
      g += coeff * dot(weights, joint);
    } else {
      g += coeff * evaluate(joint, model, disc, opts,
                            derive_seed(opts.seed, static_cast<std::uint64_t>(index) * 4 + term));
    }
    ++term;
  }
  return g;
}

std::vector<double> generator_gradient(const GeneratorModel& model, const DiscriminatorParams& disc,
                                       const ObjectiveOptions& opts) {
  check_disc(model, disc);
  const auto ops = qcgan::bind(model.circuit(), model.theta());
  const int n_params = model.n_params();

  std::vector<QuantumState> prefix;
  prefix.reserve(static_cast<std::size_t>(n_params));
  QuantumState state = model.input_state();
  for (std::size_t s = 0; s < ops.size(); ++s) {
    if (model.circuit().slots()[s].param) prefix.push_back(state);
    state.apply(ops[s]);
  }

  std::vector<double> weights;
  if (opts.mode == GradientMode::Exact) {
    weights = objective_weights(probabilities(state), model.n_d(), model.n_c(), disc, opts.input);
  }

  std::vector<double> grad(static_cast<std::size_t>(n_params), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_params; ++i) {
    const std::size_t s0 = model.circuit().slot_of_param(i);
    double g = 0.0;
    std::uint64_t term = 0;
    for (const auto& [shift, coeff] : shift_rule(ops[s0].kind)) {
      QuantumState st = prefix[static_cast<std::size_t>(i)];
      GateOp shifted = ops[s0];
      shifted.angle += shift;
      st.apply(shifted);
      for (std::size_t s = s0 + 1; s < ops.size(); ++s) st.apply(ops[s]);
      const auto joint = probabilities(st);
      if (opts.mode == GradientMode::Exact) {
        g += coeff * dot(weights, joint);
      } else {
        g += coeff * evaluate(joint, model, disc, opts,
                              derive_seed(opts.seed, static_cast<std::uint64_t>(i) * 4 + term));
      }
      ++term;
    }
    grad[static_cast<std::size_t>(i)] = g;
  }
  return grad;
}

Batch generator_batch(std::span<const double> joint, int n_d, int n_c, std::size_t count,
                      DiscriminatorInputMode input, Rng& rng) {
  Batch out;
  out.reserve(count);
  if (input == DiscriminatorInputMode::Sampled) {
    for (auto k : sample_outcomes(joint, count, rng)) out.push_back(outcome_input(k, n_d + n_c));
    return out;
  }
  const auto le = label_expectations(joint, n_d, n_c);
  for (auto j : sample_outcomes(le.weight, count, rng)) out.push_back(le.inputs[j]);
  return out;
}

}  // namespace qcgan
