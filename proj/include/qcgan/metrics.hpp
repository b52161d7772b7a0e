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
#include <map>
#include <string>
#include <vector>

#include "qcgan/bas.hpp"
#include "qcgan/generator.hpp"

namespace qcgan {

/// Quality of a generated sample set against BAS(2,2).
struct EvalReport {
  double validity = 0.0;
  double condition_match = 0.0;
  double uniformity = 0.0;
  double composite = 0.0;
  std::size_t shots = 0;
  /// label bits -> counts over all 2^n_d data patterns (index = pattern value)
  std::map<std::string, std::vector<std::size_t>> histogram;

  /// `validity,condition_match,uniformity,composite`
  std::string csv_row() const;
  std::string text() const;
};

/// Fraction of samples whose data bits form a valid BAS(2,2) image.
double validity_rate(const std::vector<Sample>& samples);

/// Fraction of samples that are valid and whose category matches the label.
double condition_match_rate(const std::vector<Sample>& samples);

/// 1 - TV(renormalized distribution over the six valid images, uniform).
/// Zero when no sample is valid.
double uniformity_score(const std::vector<Sample>& samples);

double composite_accuracy(double validity, double condition_match, double uniformity);

EvalReport evaluate_samples(const std::vector<Sample>& samples);

/// Draws `shots` joint samples from the generator.
std::vector<Sample> sample_generator(const GeneratorModel& model, int shots, std::uint64_t rng_seed);

/// Data-pattern counts with the condition register fixed to `label`.
std::vector<std::size_t> conditional_histogram(const GeneratorModel& model, const Bits& label,
                                               int shots, std::uint64_t rng_seed);

/// Samples drawn with the condition register fixed to `label`.
std::vector<Sample> conditional_samples(const GeneratorModel& model, const Bits& label, int shots,
                                        std::uint64_t rng_seed);

/// Degenerate condition spec putting all weight on `label`.
ConditionSpec label_condition(const Bits& label);

struct EntropyCheck {
  /// Minimum over the three balanced 2|2 cuts of the uniform BAS(2,2) state.
  double min_entropy = 0.0;
  /// Largest 2|2 entropy attainable by a four-qubit state, measured on the
  /// Higuchi-Sudbery state, whose three 2|2 cuts all reach it.
  double max_entropy = 0.0;
  /// Largest bipartition entropy of the BAS state itself.
  double bas_max_bipartition = 0.0;
  /// Entropy for each of the seven bipartitions A|complement, A containing qubit 0.
  std::vector<std::pair<std::vector<int>, double>> bipartitions;
};

QuantumState uniform_bas_state();
/// (|0011>+|1100> + w(|1010>+|0101>) + w^2(|1001>+|0110>))/sqrt(6), w = e^{2 pi i/3}.
QuantumState higuchi_sudbery_state();

EntropyCheck bas_state_entropy_check();

}  // namespace qcgan
