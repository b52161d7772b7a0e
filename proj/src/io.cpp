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

#include "qcgan/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qcgan/error.hpp"

namespace qcgan {

namespace {

constexpr const char* kCheckpointMagic = "qcgan-checkpoint 1";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void put_array(std::ostream& os, const std::string& name, const std::vector<double>& values) {
  os << name << ' ' << values.size();
  for (double v : values) os << ' ' << fmt(v);
  os << '\n';
}

}  // namespace

std::string format_samples(const std::vector<Sample>& samples) {
  std::string out;
  out.reserve(samples.size() * 9);
  for (const auto& s : samples) {
    out += bits_str(s.data_bits);
    out += ' ';
    out += bits_str(s.label);
    out += '\n';
  }
  return out;
}

std::vector<Sample> parse_samples(const std::string& text) {
  std::vector<Sample> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string data, label, extra;
    if (!(ls >> data >> label) || (ls >> extra)) {
      throw FormatError("line " + std::to_string(lineno) + ": expected '<data_bits> <label_bits>'", lineno);
    }
    try {
      Sample s{parse_bits(data), parse_bits(label)};
      if (std::count(s.label.begin(), s.label.end(), 1) != 1) {
        throw FormatError("label is not one-hot");
      }
      out.push_back(std::move(s));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw FormatError("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_samples(const std::string& path, const std::vector<Sample>& samples) {
  write_text_file(path, format_samples(samples));
}

std::vector<Sample> read_samples(const std::string& path) { return parse_samples(read_text_file(path)); }

Checkpoint make_checkpoint(const RunConfig& config, const TrainingState& state) {
  return {config, state.epochs_completed, state.model.theta(), state.disc, state.adam_g, state.adam_d};
}

std::string format_checkpoint(const Checkpoint& ckpt) {
  std::ostringstream os;
  os << kCheckpointMagic << '\n';
  std::istringstream echo(echo_run_config(ckpt.config));
  std::string line;
  while (std::getline(echo, line)) os << "config " << line << '\n';
  os << "epochs_completed " << ckpt.epochs_completed << '\n';
  os << "hidden " << ckpt.disc.hidden() << '\n';
  os << "input_dim " << ckpt.disc.input_dim() << '\n';
  put_array(os, "theta", ckpt.theta);
  const auto flat = ckpt.disc.flatten();
  const auto w1n = static_cast<std::size_t>(ckpt.disc.w1.size());
  const auto h = static_cast<std::size_t>(ckpt.disc.hidden());
  put_array(os, "W1", {flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(w1n)});
  put_array(os, "b1", {flat.begin() + static_cast<std::ptrdiff_t>(w1n), flat.begin() + static_cast<std::ptrdiff_t>(w1n + h)});
  put_array(os, "W2", {flat.begin() + static_cast<std::ptrdiff_t>(w1n + h), flat.begin() + static_cast<std::ptrdiff_t>(w1n + 2 * h)});
  put_array(os, "b2", {ckpt.disc.b2});
  os << "adam_g.t " << ckpt.adam_g.t << '\n';
  put_array(os, "adam_g.m", ckpt.adam_g.m);
  put_array(os, "adam_g.v", ckpt.adam_g.v);
  os << "adam_d.t " << ckpt.adam_d.t << '\n';
  put_array(os, "adam_d.m", ckpt.adam_d.m);
  put_array(os, "adam_d.v", ckpt.adam_d.v);
  return os.str();
}

Checkpoint parse_checkpoint(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line) || line != kCheckpointMagic) {
    throw FormatError("not a qcgan checkpoint", 1);
  }
  Checkpoint ckpt;
  std::string config_text;
  std::map<std::string, std::vector<double>> arrays;
  std::map<std::string, long long> scalars;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    if (name == "config") {
      std::string rest;
      std::getline(ls, rest);
      config_text += rest + '\n';
      continue;
    }
    if (name == "epochs_completed" || name == "hidden" || name == "input_dim" || name == "adam_g.t" ||
        name == "adam_d.t") {
      long long v = 0;
      if (!(ls >> v)) throw FormatError("line " + std::to_string(lineno) + ": bad integer", lineno);
      scalars[name] = v;
      continue;
    }
    std::size_t count = 0;
    if (!(ls >> count)) throw FormatError("line " + std::to_string(lineno) + ": bad array header", lineno);
    std::vector<double> values;
    values.reserve(count);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t pos = 0;
        values.push_back(std::stod(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(lineno) + ": bad number '" + tok + "'", lineno);
      }
    }
    if (values.size() != count) {
      throw FormatError("line " + std::to_string(lineno) + ": array '" + name + "' has wrong length", lineno);
    }
    arrays[name] = std::move(values);
  }
  auto need_array = [&](const char* name) -> std::vector<double>& {
    auto it = arrays.find(name);
    if (it == arrays.end()) throw FormatError(std::string("checkpoint missing ") + name);
    return it->second;
  };
  auto need_scalar = [&](const char* name) {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw FormatError(std::string("checkpoint missing ") + name);
    return it->second;
  };
  try {
    ckpt.config = parse_run_config(config_text);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("checkpoint config: ") + e.what());
  }
  ckpt.epochs_completed = static_cast<int>(need_scalar("epochs_completed"));
  ckpt.theta = need_array("theta");
  const auto hidden = static_cast<int>(need_scalar("hidden"));
  const auto input_dim = static_cast<int>(need_scalar("input_dim"));
  if (hidden < 1 || input_dim < 1) throw FormatError("checkpoint has invalid discriminator shape");
  ckpt.disc = DiscriminatorParams::zeros(input_dim, hidden);
  std::vector<double> flat;
  for (const char* name : {"W1", "b1", "W2", "b2"}) {
    const auto& a = need_array(name);
    flat.insert(flat.end(), a.begin(), a.end());
  }
  if (flat.size() != ckpt.disc.size()) throw FormatError("checkpoint discriminator arrays have wrong sizes");
  ckpt.disc.assign(flat);
  ckpt.adam_g = {need_array("adam_g.m"), need_array("adam_g.v"), need_scalar("adam_g.t")};
  ckpt.adam_d = {need_array("adam_d.m"), need_array("adam_d.v"), need_scalar("adam_d.t")};
  if (ckpt.adam_g.m.size() != ckpt.theta.size() || ckpt.adam_g.v.size() != ckpt.theta.size() ||
      ckpt.adam_d.m.size() != flat.size() || ckpt.adam_d.v.size() != flat.size()) {
    throw FormatError("checkpoint optimizer moments have wrong sizes");
  }
  return ckpt;
}

void write_checkpoint(const std::string& path, const Checkpoint& ckpt) {
  write_text_file(path, format_checkpoint(ckpt));
}

Checkpoint read_checkpoint(const std::string& path) { return parse_checkpoint(read_text_file(path)); }

GeneratorModel model_from_checkpoint(const Checkpoint& ckpt) {
  const auto& t = ckpt.config.training;
  const ConditionSpec condition{t.condition_probs};
  auto circuit = build_generator(kDataQubits, condition.m(), t.layers, t.topology);
  if (static_cast<int>(ckpt.theta.size()) != circuit.n_params()) {
    throw FormatError("checkpoint theta does not match the configured generator");
  }
  return GeneratorModel(std::move(circuit), ckpt.theta, build_condition_encoder(condition), kDataQubits);
}

}  // namespace qcgan
