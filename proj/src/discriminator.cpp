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

#include "qcgan/discriminator.hpp"

#include <algorithm>
#include <cmath>

#include "qcgan/error.hpp"
#include "qcgan/rng.hpp"

namespace qcgan {

std::size_t DiscriminatorParams::size() const {
  return static_cast<std::size_t>(w1.size() + b1.size() + w2.size() + 1);
}

DiscriminatorParams DiscriminatorParams::zeros(int input_dim, int hidden) {
  DiscriminatorParams p;
  p.w1 = Eigen::MatrixXd::Zero(hidden, input_dim);
  p.b1 = Eigen::VectorXd::Zero(hidden);
  p.w2 = Eigen::VectorXd::Zero(hidden);
  p.b2 = 0.0;
  return p;
}

std::vector<double> DiscriminatorParams::flatten() const {
  std::vector<double> out;
  out.reserve(size());
  for (Eigen::Index r = 0; r < w1.rows(); ++r) {
    for (Eigen::Index c = 0; c < w1.cols(); ++c) out.push_back(w1(r, c));
  }
  for (Eigen::Index i = 0; i < b1.size(); ++i) out.push_back(b1(i));
  for (Eigen::Index i = 0; i < w2.size(); ++i) out.push_back(w2(i));
  out.push_back(b2);
  return out;
}

void DiscriminatorParams::assign(std::span<const double> flat) {
  if (flat.size() != size()) throw ValidationError("discriminator parameter size mismatch");
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < w1.rows(); ++r) {
    for (Eigen::Index c = 0; c < w1.cols(); ++c) w1(r, c) = flat[k++];
  }
  for (Eigen::Index i = 0; i < b1.size(); ++i) b1(i) = flat[k++];
  for (Eigen::Index i = 0; i < w2.size(); ++i) w2(i) = flat[k++];
  b2 = flat[k];
}

DiscriminatorParams init_discriminator(std::uint64_t rng_seed, int input_dim, int hidden) {
  if (input_dim < 1 || hidden < 1) throw ValidationError("discriminator dimensions must be positive");
  auto p = DiscriminatorParams::zeros(input_dim, hidden);
  Rng rng(rng_seed);
  const double a1 = std::sqrt(6.0 / (input_dim + hidden));
  for (Eigen::Index r = 0; r < p.w1.rows(); ++r) {
    for (Eigen::Index c = 0; c < p.w1.cols(); ++c) p.w1(r, c) = uniform(rng, -a1, a1);
  }
  const double a2 = std::sqrt(6.0 / (hidden + 1));
  for (Eigen::Index i = 0; i < p.w2.size(); ++i) p.w2(i) = uniform(rng, -a2, a2);
  return p;
}

namespace {

struct Activations {
  Eigen::VectorXd pre;     // w1 x + b1
  Eigen::VectorXd hidden;  // relu(pre)
  double out = 0.5;        // clamped sigmoid
};

Eigen::Map<const Eigen::VectorXd> as_vector(std::span<const double> x) {
  return {x.data(), static_cast<Eigen::Index>(x.size())};
}

Activations run(const DiscriminatorParams& p, std::span<const double> input) {
  if (static_cast<int>(input.size()) != p.input_dim()) {
    throw ValidationError("discriminator input has " + std::to_string(input.size()) +
                          " entries, expected " + std::to_string(p.input_dim()));
  }
  Activations a;
  a.pre = p.w1 * as_vector(input) + p.b1;
  a.hidden = a.pre.cwiseMax(0.0);
  const double logit = p.w2.dot(a.hidden) + p.b2;
  const double s = 1.0 / (1.0 + std::exp(-logit));
  a.out = std::clamp(s, kLogClamp, 1.0 - kLogClamp);
  return a;
}

void check_batches(const Batch& real, const Batch& fake) {
  if (real.empty() || fake.empty()) throw ValidationError("discriminator batches must be nonempty");
}

}  // namespace

double forward(const DiscriminatorParams& params, std::span<const double> input) {
  return run(params, input).out;
}

std::vector<double> log_output_input_gradient(const DiscriminatorParams& params,
                                              std::span<const double> input) {
  const auto a = run(params, input);
  // d log sigmoid(z) / dz = 1 - D
  Eigen::VectorXd dpre = (1.0 - a.out) * params.w2;
  for (Eigen::Index i = 0; i < dpre.size(); ++i) {
    if (a.pre(i) <= 0.0) dpre(i) = 0.0;
  }
  const Eigen::VectorXd dx = params.w1.transpose() * dpre;
  return {dx.data(), dx.data() + dx.size()};
}

double discriminator_loss(const DiscriminatorParams& params, const Batch& real, const Batch& fake) {
  check_batches(real, fake);
  double lr = 0.0;
  for (const auto& x : real) lr += std::log(std::max(forward(params, x), kLogClamp));
  double lf = 0.0;
  for (const auto& x : fake) lf += std::log(std::max(1.0 - forward(params, x), kLogClamp));
  return -(lr / static_cast<double>(real.size()) + lf / static_cast<double>(fake.size()));
}

DiscriminatorGrad discriminator_grad(const DiscriminatorParams& params, const Batch& real,
                                     const Batch& fake) {
  check_batches(real, fake);
  auto g = DiscriminatorParams::zeros(params.input_dim(), params.hidden());
  auto accumulate = [&](std::span<const double> x, double dlogit) {
    const auto a = run(params, x);
    g.w2 += dlogit * a.hidden;
    g.b2 += dlogit;
    Eigen::VectorXd dpre = dlogit * params.w2;
    for (Eigen::Index i = 0; i < dpre.size(); ++i) {
      if (a.pre(i) <= 0.0) dpre(i) = 0.0;
    }
    g.w1 += dpre * as_vector(x).transpose();
    g.b1 += dpre;
  };
  const double nr = static_cast<double>(real.size());
  const double nf = static_cast<double>(fake.size());
  // d/dz of -log sigmoid(z) is -(1 - D); of -log(1 - sigmoid(z)) is D.
  for (const auto& x : real) accumulate(x, -(1.0 - forward(params, x)) / nr);
  for (const auto& x : fake) accumulate(x, forward(params, x) / nf);
  return g;
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state, double lr,
               const AdamHyper& hyper) {
  if (grads.size() != params.size() || state.m.size() != params.size() ||
      state.v.size() != params.size()) {
    throw ValidationError("adam_step: shape mismatch");
  }
  ++state.t;
  const double bc1 = 1.0 - std::pow(hyper.beta1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(hyper.beta2, static_cast<double>(state.t));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = hyper.beta1 * state.m[i] + (1.0 - hyper.beta1) * grads[i];
    state.v[i] = hyper.beta2 * state.v[i] + (1.0 - hyper.beta2) * grads[i] * grads[i];
    const double mhat = state.m[i] / bc1;
    const double vhat = state.v[i] / bc2;
    params[i] -= lr * mhat / (std::sqrt(vhat) + hyper.eps);
  }
}

void adam_step(DiscriminatorParams& params, const DiscriminatorGrad& grads, AdamState& state,
               double lr, const AdamHyper& hyper) {
  if (grads.w1.rows() != params.w1.rows() || grads.w1.cols() != params.w1.cols()) {
    throw ValidationError("adam_step: gradient shape mismatch");
  }
  auto flat = params.flatten();
  const auto g = grads.flatten();
  adam_step(flat, g, state, lr, hyper);
  params.assign(flat);
}

}  // namespace qcgan
