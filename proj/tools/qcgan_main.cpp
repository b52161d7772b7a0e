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

// qcgan: command-line driver for the conditional quantum GAN simulator.
//
//   qcgan gen-data --count 6000 --seed 7 --out train.txt
//   qcgan train --config run.cfg
//   qcgan sample --checkpoint run/checkpoint.txt --shots 10000 --label 001 --out s.txt
//   qcgan eval --samples s.txt
//   qcgan prep-w --probs 0.3333333333333333,0.3333333333333333,0.3333333333333334
//
// Exit codes: 0 success, 1 config error, 2 I/O or format error, 3 numeric failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qcgan/bas.hpp"
#include "qcgan/circuit.hpp"
#include "qcgan/config.hpp"
#include "qcgan/error.hpp"
#include "qcgan/io.hpp"
#include "qcgan/metrics.hpp"
#include "qcgan/training.hpp"

namespace {

using namespace qcgan;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;

int fail(int code, const std::string& msg) {
  std::cerr << "qcgan: " << msg << '\n';
  return code;
}

std::string histogram_text(const std::vector<std::size_t>& counts, int n_bits) {
  std::ostringstream os;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] == 0) continue;
    os << basis_label(v, n_bits) << ' ' << counts[v] << '\n';
  }
  return os.str();
}

int cmd_gen_data(int count, std::uint64_t seed, bool stratified, const std::string& out) {
  std::vector<Sample> samples;
  try {
    samples = synthesize_training_set(count, seed, stratified);
  } catch (const ValidationError& e) {
    return fail(kExitConfig, e.what());
  }
  try {
    write_samples(out, samples);
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : samples) ++counts[static_cast<int>(category_from_label(s.label))];
  std::cout << "wrote " << samples.size() << " samples to " << out << '\n';
  for (auto c : {Category::Horizontal, Category::Vertical, Category::Uniform}) {
    std::cout << "  " << bits_str(category_label(c)) << ' ' << category_name(c) << ' '
              << counts[static_cast<int>(c)] << '\n';
  }
  return kExitOk;
}

int cmd_train(const std::string& config_path, const std::vector<std::string>& overrides,
              const std::string& dump_path) {
  RunConfig cfg;
  std::string text;
  try {
    text = read_text_file(config_path);
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }
  try {
    for (const auto& kv : overrides) text += "\n" + kv + "\n";
    cfg = parse_run_config(text);
  } catch (const ConfigError& e) {
    return fail(kExitConfig, std::string("config error: ") + e.what());
  } catch (const FormatError& e) {
    return fail(kExitConfig, e.what());
  }
  if (cfg.dataset.empty()) return fail(kExitConfig, "config error: dataset: missing dataset path");

  std::vector<Sample> dataset;
  try {
    dataset = read_samples(cfg.dataset);
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }
  if (dataset.empty()) return fail(kExitIo, "dataset " + cfg.dataset + " is empty");

  namespace fs = std::filesystem;
  const fs::path out = cfg.output_dir;
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) return fail(kExitIo, "cannot create " + out.string() + ": " + ec.message());

  try {
    write_text_file((out / "config.txt").string(), echo_run_config(cfg));
    if (!dump_path.empty()) {
      const auto& t = cfg.training;
      write_text_file(dump_path, dump_circuit(build_generator(kDataQubits, kConditionQubits,
                                                              t.layers, t.topology)));
    }
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }

  auto persist = [&](const TrainingState& st) {
    write_text_file((out / "history.csv").string(), st.history.history_csv());
    write_text_file((out / "metrics.csv").string(), st.history.metrics_csv());
    write_checkpoint((out / "checkpoint.txt").string(), make_checkpoint(cfg, st));
  };

  std::optional<TrainingState> trained;
  try {
    if (cfg.training.epochs == 0) {
      trained.emplace(initial_state(cfg.training));
    } else {
      trained.emplace(train(cfg.training, dataset, [&](const TrainingState& st) {
        const auto& r = st.history.epochs.back().report;
        std::printf("epoch %3d  d_loss %.4f  g_loss %.4f  composite %.4f\n", st.epochs_completed - 1,
                    st.history.iterations.back().d_loss, st.history.iterations.back().g_loss,
                    r.composite);
        std::fflush(stdout);
      }));
    }
  } catch (const TrainingAborted& e) {
    const auto& st = e.state();
    write_text_file((out / "history.csv").string(), st.history.history_csv());
    write_checkpoint((out / "checkpoint.diag.txt").string(), make_checkpoint(cfg, st));
    return fail(kExitNumeric, std::string(e.what()) + "; diagnostic checkpoint written to " +
                                  (out / "checkpoint.diag.txt").string());
  }
  const TrainingState& final_state = *trained;
  persist(final_state);

  const double composite =
      final_state.history.epochs.empty() ? 0.0 : final_state.history.epochs.back().report.composite;
  std::printf("epochs completed: %d\nfinal composite accuracy: %.4f\nthreshold %.2f reached: %s\n",
              final_state.epochs_completed, composite, cfg.training.early_stop_threshold,
              final_state.early_stopped ? "yes" : "no");
  return kExitOk;
}

int cmd_sample(const std::string& ckpt_path, int shots, const std::string& label,
               std::uint64_t seed, const std::string& out, const std::string& hist_out) {
  if (shots < 0) return fail(kExitConfig, "shots must be >= 0");
  Checkpoint ckpt;
  GeneratorModel* model_ptr = nullptr;
  std::optional<GeneratorModel> model;
  try {
    ckpt = read_checkpoint(ckpt_path);
    model.emplace(model_from_checkpoint(ckpt));
    model_ptr = &*model;
  } catch (const Error& e) {
    return fail(kExitIo, std::string("malformed checkpoint: ") + e.what());
  }
  std::vector<Sample> samples;
  try {
    if (label.empty()) {
      samples = sample_generator(*model_ptr, shots, seed);
    } else {
      samples = conditional_samples(*model_ptr, parse_bits(label), shots, seed);
    }
  } catch (const ValidationError& e) {
    return fail(kExitConfig, e.what());
  } catch (const FormatError& e) {
    return fail(kExitConfig, e.what());
  }
  std::vector<std::size_t> counts(std::size_t{1} << model_ptr->n_d(), 0);
  for (const auto& s : samples) {
    std::size_t v = 0;
    for (auto b : s.data_bits) v = (v << 1) | b;
    ++counts[v];
  }
  const auto hist = histogram_text(counts, model_ptr->n_d());
  try {
    write_samples(out, samples);
    if (!hist_out.empty()) write_text_file(hist_out, hist);
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }
  std::cout << "wrote " << samples.size() << " samples to " << out << '\n' << hist;
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& csv_out) {
  std::vector<Sample> samples;
  try {
    samples = read_samples(path);
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  }
  if (samples.empty()) return fail(kExitIo, "sample file " + path + " is empty");
  const auto report = evaluate_samples(samples);
  std::cout << report.text();
  const std::string csv = "validity,condition_match,uniformity,composite\n" + report.csv_row() + "\n";
  std::cout << csv;
  if (!csv_out.empty()) {
    try {
      write_text_file(csv_out, csv);
    } catch (const FormatError& e) {
      return fail(kExitIo, e.what());
    }
  }
  return kExitOk;
}

int cmd_prep_w(int m, const std::vector<double>& probs_in, const std::string& dump_path) {
  ConditionSpec spec;
  spec.probs = probs_in;
  if (spec.probs.empty()) spec.probs.assign(static_cast<std::size_t>(m), 1.0 / m);
  if (m != 0 && m != spec.m()) return fail(kExitConfig, "--m does not match the number of probabilities");
  try {
    spec.validate();
  } catch (const ValidationError& e) {
    return fail(kExitConfig, e.what());
  }
  ParamCircuit pc(1);
  try {
    pc = build_condition_encoder(spec);
  } catch (const NumericError& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (residual %.3e)", e.residual());
    return fail(kExitNumeric, e.what() + std::string(buf));
  }
  QuantumState s(pc.n_qubits());
  s.apply(qcgan::bind(pc, {}));
  double max_dev = 0.0;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    double want = 0.0;
    if (i != 0 && (i & (i - 1)) == 0) want = std::sqrt(spec.probs[static_cast<std::size_t>(std::countr_zero(i))]);
    max_dev = std::max(max_dev, std::abs(s.amplitude(i) - Amplitude{want, 0.0}));
  }
  std::cout << "condition encoder: " << spec.m() << " qubits, " << pc.slots().size() << " gates\n";
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    const double p = std::norm(s.amplitude(i));
    if (p > 1e-12) std::printf("  |%s>  p=%.10f\n", basis_label(i, s.n_qubits()).c_str(), p);
  }
  std::printf("max amplitude deviation: %.3e\n", max_dev);
  if (!dump_path.empty()) {
    try {
      write_text_file(dump_path, dump_circuit(pc));
    } catch (const FormatError& e) {
      return fail(kExitIo, e.what());
    }
  }
  return max_dev < 1e-6 ? kExitOk : fail(kExitNumeric, "encoder deviates from target");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional quantum GAN simulator for BAS(2,2)"};
  app.require_subcommand(1);

  int count = 6000;
  std::uint64_t seed = 7;
  bool stratified = false;
  std::string out_path;
  auto* gen = app.add_subcommand("gen-data", "synthesize a labelled BAS(2,2) training set");
  gen->add_option("--count", count, "number of samples")->capture_default_str();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_flag("--stratified", stratified, "deal images round-robin before shuffling");
  gen->add_option("--out", out_path, "output file")->required();

  std::string config_path, dump_path;
  std::vector<std::string> overrides;
  auto* tr = app.add_subcommand("train", "run adversarial training");
  tr->add_option("--config", config_path, "run config file")->required();
  tr->add_option("--set", overrides, "extra key=value config lines");
  tr->add_option("--dump-circuit", dump_path, "write the generator circuit text");

  std::string ckpt_path, label, hist_path;
  int shots = 10000;
  std::uint64_t sample_seed = 11;
  auto* sm = app.add_subcommand("sample", "sample a trained generator");
  sm->add_option("--checkpoint", ckpt_path, "checkpoint file")->required();
  sm->add_option("--shots", shots, "number of samples")->capture_default_str();
  sm->add_option("--label", label, "one-hot condition, e.g. 001");
  sm->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();
  sm->add_option("--out", out_path, "sample file")->required();
  sm->add_option("--histogram", hist_path, "pattern count file");

  std::string samples_path, csv_path;
  auto* ev = app.add_subcommand("eval", "score a sample file");
  ev->add_option("--samples", samples_path, "sample file")->required();
  ev->add_option("--csv", csv_path, "write the report as CSV");

  int m = 0;
  std::vector<double> probs;
  std::string prep_dump;
  auto* pw = app.add_subcommand("prep-w", "build and verify a condition-state encoder");
  pw->add_option("--m", m, "number of categories");
  pw->add_option("--probs", probs, "category probabilities")->delimiter(',');
  pw->add_option("--dump-circuit", prep_dump, "write the encoder circuit text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) return cmd_gen_data(count, seed, stratified, out_path);
    if (*tr) return cmd_train(config_path, overrides, dump_path);
    if (*sm) return cmd_sample(ckpt_path, shots, label, sample_seed, out_path, hist_path);
    if (*ev) return cmd_eval(samples_path, csv_path);
    if (*pw) {
      if (m == 0 && probs.empty()) m = 3;
      return cmd_prep_w(m, probs, prep_dump);
    }
  } catch (const TrainingAborted& e) {
    return fail(kExitNumeric, e.what());
  } catch (const NumericError& e) {
    return fail(kExitNumeric, e.what());
  } catch (const FormatError& e) {
    return fail(kExitIo, e.what());
  } catch (const ValidationError& e) {
    return fail(kExitConfig, e.what());
  }
  return kExitOk;
}
