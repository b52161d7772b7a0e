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

#include "qcgan/error.hpp"
#include "qcgan/training.hpp"

namespace qcgan {

/// A bad key or value in a run config file.
class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : ValidationError(key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Training settings plus the run's file locations.
struct RunConfig {
  TrainingConfig training;
  std::string dataset;
  std::string output_dir = "run";
};

/// `key = value` lines; `#` starts a comment. Unknown keys and unparsable
/// values raise ConfigError. Missing keys keep their defaults.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Applies one `key`/`value` pair.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// Every key with its effective value, parseable by parse_run_config.
std::string echo_run_config(const RunConfig& config);

}  // namespace qcgan
