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

#include <Eigen/Dense>

namespace qcgan {

/// input_dim -> hidden (ReLU) -> 1 (sigmoid) classifier weights.
struct DiscriminatorParams {
  Eigen::MatrixXd w1;  // hidden x input_dim
  Eigen::VectorXd b1;  // hidden
  Eigen::VectorXd w2;  // hidden (the single output row)
  double b2 = 0.0;

  int input_dim() const { return static_cast<int>(w1.cols()); }
  int hidden() const { return static_cast<int>(w1.rows()); }
  std::size_t size() const;

  static DiscriminatorParams zeros(int input_dim, int hidden = 4);

  /// Flattened as w1 (row-major), b1, w2, b2.
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
};

/// Same layout as DiscriminatorParams, holding dLoss/dParam.
using DiscriminatorGrad = DiscriminatorParams;

using Batch = std::vector<std::vector<double>>;

inline constexpr double kLogClamp = 1e-12;

/// Glorot-uniform weights, zero biases.
DiscriminatorParams init_discriminator(std::uint64_t rng_seed, int input_dim = 7, int hidden = 4);

/// sigmoid(w2 . relu(w1 x + b1) + b2), clamped into [1e-12, 1 - 1e-12].
double forward(const DiscriminatorParams& params, std::span<const double> input);

/// d log D(x) / dx, used when the generator feeds expectations.
std::vector<double> log_output_input_gradient(const DiscriminatorParams& params,
                                              std::span<const double> input);

/// -[mean log D(real) + mean log(1 - D(fake))].
double discriminator_loss(const DiscriminatorParams& params, const Batch& real, const Batch& fake);

DiscriminatorGrad discriminator_grad(const DiscriminatorParams& params, const Batch& real,
                                     const Batch& fake);

/// First/second moment accumulators for a flat parameter vector.
struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t t = 0;

  static AdamState zeros(std::size_t n) { return {std::vector<double>(n), std::vector<double>(n), 0}; }
};

struct AdamHyper {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// One bias-corrected Adam update of `params` in place. Shapes must agree.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state, double lr,
               const AdamHyper& hyper = {});

void adam_step(DiscriminatorParams& params, const DiscriminatorGrad& grads, AdamState& state,
               double lr, const AdamHyper& hyper = {});

}  // namespace qcgan
