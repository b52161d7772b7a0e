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

#include "qcgan/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcgan {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "cannot parse '" + value + "'");
  return out;
}

// from_chars for double is missing from older libstdc++.
double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key, "cannot parse '" + value + "'");
  }
  if (pos != value.size()) throw ConfigError(key, "cannot parse '" + value + "'");
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
  auto& t = config.training;
  if (key == "epochs") t.epochs = parse_number<int>(key, value);
  else if (key == "iterations_per_epoch") t.iterations_per_epoch = parse_number<int>(key, value);
  else if (key == "batch_size") t.batch_size = parse_number<int>(key, value);
  else if (key == "lr_initial") t.lr_initial = parse_double(key, value);
  else if (key == "lr_decay_every") t.lr_decay_every = parse_number<int>(key, value);
  else if (key == "lr_decay_factor") t.lr_decay_factor = parse_double(key, value);
  else if (key == "early_stop_threshold") t.early_stop_threshold = parse_double(key, value);
  else if (key == "layers") t.layers = parse_number<int>(key, value);
  else if (key == "topology") {
    try {
      t.topology = parse_topology(value);
    } catch (const ValidationError& e) {
      throw ConfigError(key, e.what());
    }
  } else if (key == "gradient_mode") {
    if (value == "exact") t.gradient_mode = GradientMode::Exact;
    else if (value == "shot") t.gradient_mode = GradientMode::Shot;
    else throw ConfigError(key, "expected exact or shot");
  } else if (key == "gradient_shots") t.gradient_shots = parse_number<int>(key, value);
  else if (key == "discriminator_input") {
    if (value == "sampled") t.discriminator_input = DiscriminatorInputMode::Sampled;
    else if (value == "expectation") t.discriminator_input = DiscriminatorInputMode::Expectation;
    else throw ConfigError(key, "expected sampled or expectation");
  } else if (key == "eval_shots") t.eval_shots = parse_number<int>(key, value);
  else if (key == "theta_init") {
    if (value == "uniform") t.theta_init = ThetaInit::Uniform;
    else if (value == "normal") t.theta_init = ThetaInit::Normal;
    else throw ConfigError(key, "expected uniform or normal");
  } else if (key == "theta_init_scale") t.theta_init_scale = parse_double(key, value);
  else if (key == "condition_probs") {
    t.condition_probs.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) t.condition_probs.push_back(parse_double(key, trim(item)));
  } else if (key == "seed") t.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "dataset") config.dataset = value;
  else if (key == "output_dir") config.output_dir = value;
  else throw ConfigError(key, "unknown key");
}

RunConfig parse_run_config(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    set_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  try {
    config.training.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ConfigError("config", e.what());
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string echo_run_config(const RunConfig& config) {
  const auto& t = config.training;
  std::ostringstream os;
  os << "epochs = " << t.epochs << '\n'
     << "iterations_per_epoch = " << t.iterations_per_epoch << '\n'
     << "batch_size = " << t.batch_size << '\n'
     << "lr_initial = " << fmt(t.lr_initial) << '\n'
     << "lr_decay_every = " << t.lr_decay_every << '\n'
     << "lr_decay_factor = " << fmt(t.lr_decay_factor) << '\n'
     << "early_stop_threshold = " << fmt(t.early_stop_threshold) << '\n'
     << "layers = " << t.layers << '\n'
     << "topology = " << topology_name(t.topology) << '\n'
     << "gradient_mode = " << (t.gradient_mode == GradientMode::Exact ? "exact" : "shot") << '\n'
     << "gradient_shots = " << t.gradient_shots << '\n'
     << "discriminator_input = "
     << (t.discriminator_input == DiscriminatorInputMode::Sampled ? "sampled" : "expectation") << '\n'
     << "eval_shots = " << t.eval_shots << '\n'
     << "theta_init = " << (t.theta_init == ThetaInit::Uniform ? "uniform" : "normal") << '\n'
     << "theta_init_scale = " << fmt(t.theta_init_scale) << '\n'
     << "condition_probs = ";
  for (std::size_t i = 0; i < t.condition_probs.size(); ++i) {
    os << (i ? "," : "") << fmt(t.condition_probs[i]);
  }
  os << '\n'
     << "seed = " << t.seed << '\n'
     << "dataset = " << config.dataset << '\n'
     << "output_dir = " << config.output_dir << '\n';
  return os.str();
}

}  // namespace qcgan
