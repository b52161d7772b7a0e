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

#include <string>
#include <vector>

#include "qcgan/bas.hpp"
#include "qcgan/config.hpp"
#include "qcgan/discriminator.hpp"
#include "qcgan/training.hpp"

namespace qcgan {

/// One sample per line: `<data_bits> <label_bits>`.
std::string format_samples(const std::vector<Sample>& samples);
/// Throws FormatError carrying the 1-based line number of a malformed line.
std::vector<Sample> parse_samples(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

void write_samples(const std::string& path, const std::vector<Sample>& samples);
std::vector<Sample> read_samples(const std::string& path);

/// Saved models, optimizer moments and the config that produced them.
struct Checkpoint {
  RunConfig config;
  int epochs_completed = 0;
  std::vector<double> theta;
  DiscriminatorParams disc;
  AdamState adam_g;
  AdamState adam_d;
};

Checkpoint make_checkpoint(const RunConfig& config, const TrainingState& state);

/// Named arrays of full-precision decimals, one per line.
std::string format_checkpoint(const Checkpoint& ckpt);
Checkpoint parse_checkpoint(const std::string& text);

void write_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint read_checkpoint(const std::string& path);

/// Rebuilds the trained generator described by a checkpoint.
GeneratorModel model_from_checkpoint(const Checkpoint& ckpt);

}  // namespace qcgan
