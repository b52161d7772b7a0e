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

#include "qcgan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "qcgan/error.hpp"

namespace qcgan {

namespace {

void require_nonempty(const std::vector<Sample>& samples) {
  if (samples.empty()) throw ValidationError("sample set is empty");
}

bool valid_data(const Sample& s) {
  return static_cast<int>(s.data_bits.size()) == kDataQubits && is_valid_bas(bas_image(s.data_bits));
}

}  // namespace

double validity_rate(const std::vector<Sample>& samples) {
  require_nonempty(samples);
  const auto n = std::count_if(samples.begin(), samples.end(), valid_data);
  return static_cast<double>(n) / static_cast<double>(samples.size());
}

double condition_match_rate(const std::vector<Sample>& samples) {
  require_nonempty(samples);
  std::size_t n = 0;
  for (const auto& s : samples) {
    if (valid_data(s) && category_label(categorize(bas_image(s.data_bits))) == s.label) ++n;
  }
  return static_cast<double>(n) / static_cast<double>(samples.size());
}

double uniformity_score(const std::vector<Sample>& samples) {
  require_nonempty(samples);
  const auto valid = enumerate_valid(kBasRows, kBasCols);
  std::vector<double> counts(valid.size(), 0.0);
  double total = 0.0;
  for (const auto& s : samples) {
    if (!valid_data(s)) continue;
    const auto v = bas_image(s.data_bits).value();
    for (std::size_t i = 0; i < valid.size(); ++i) {
      if (valid[i].value() == v) counts[i] += 1.0;
    }
    total += 1.0;
  }
  if (total == 0.0) return 0.0;
  const double u = 1.0 / static_cast<double>(valid.size());
  double tv = 0.0;
  for (double c : counts) tv += std::abs(c / total - u);
  return 1.0 - 0.5 * tv;
}

double composite_accuracy(double validity, double condition_match, double uniformity) {
  return std::min({validity, condition_match, uniformity});
}

EvalReport evaluate_samples(const std::vector<Sample>& samples) {
  EvalReport r;
  r.validity = validity_rate(samples);
  r.condition_match = condition_match_rate(samples);
  r.uniformity = uniformity_score(samples);
  r.composite = composite_accuracy(r.validity, r.condition_match, r.uniformity);
  r.shots = samples.size();
  for (const auto& s : samples) {
    auto& h = r.histogram[bits_str(s.label)];
    if (h.empty()) h.assign(std::size_t{1} << s.data_bits.size(), 0);
    std::size_t v = 0;
    for (auto b : s.data_bits) v = (v << 1) | b;
    ++h[v];
  }
  return r;
}

std::string EvalReport::csv_row() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f", validity, condition_match, uniformity,
                composite);
  return buf;
}

std::string EvalReport::text() const {
  std::ostringstream os;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "samples          %zu\nvalidity         %.4f\ncondition_match  %.4f\n"
                "uniformity       %.4f\ncomposite        %.4f\n",
                shots, validity, condition_match, uniformity, composite);
  os << buf;
  return os.str();
}

std::vector<Sample> sample_generator(const GeneratorModel& model, int shots, std::uint64_t rng_seed) {
  if (shots < 0) throw ValidationError("shots must be >= 0");
  const auto joint = generator_output_distribution(model);
  Rng rng(rng_seed);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (auto k : sample_outcomes(joint, static_cast<std::size_t>(shots), rng)) {
    out.push_back(outcome_sample(k, model.n_d(), model.n_c()));
  }
  return out;
}

ConditionSpec label_condition(const Bits& label) {
  if (label.size() < 2 || std::count(label.begin(), label.end(), 1) != 1) {
    throw ValidationError("label must be one-hot: " + bits_str(label));
  }
  ConditionSpec spec;
  spec.probs.assign(label.size(), 0.0);
  // category j sets bit j from the right
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i]) spec.probs[label.size() - 1 - i] = 1.0;
  }
  return spec;
}

std::vector<Sample> conditional_samples(const GeneratorModel& model, const Bits& label, int shots,
                                        std::uint64_t rng_seed) {
  if (static_cast<int>(label.size()) != model.n_c()) throw ValidationError("label width mismatch");
  return sample_generator(model.with_condition(label_condition(label)), shots, rng_seed);
}

std::vector<std::size_t> conditional_histogram(const GeneratorModel& model, const Bits& label,
                                               int shots, std::uint64_t rng_seed) {
  std::vector<std::size_t> counts(std::size_t{1} << model.n_d(), 0);
  for (const auto& s : conditional_samples(model, label, shots, rng_seed)) {
    std::size_t v = 0;
    for (auto b : s.data_bits) v = (v << 1) | b;
    ++counts[v];
  }
  return counts;
}

QuantumState uniform_bas_state() {
  const auto valid = enumerate_valid(kBasRows, kBasCols);
  std::vector<Amplitude> amps(std::size_t{1} << kDataQubits, 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(valid.size()));
  for (const auto& img : valid) amps[img.value()] = a;
  return QuantumState::from_amplitudes(std::move(amps));
}

QuantumState higuchi_sudbery_state() {
  const Amplitude w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const double a = 1.0 / std::sqrt(6.0);
  std::vector<Amplitude> amps(16, 0.0);
  amps[0b0011] = amps[0b1100] = a;
  amps[0b1010] = amps[0b0101] = a * w;
  amps[0b1001] = amps[0b0110] = a * w * w;
  return QuantumState::from_amplitudes(std::move(amps));
}

EntropyCheck bas_state_entropy_check() {
  EntropyCheck out;
  const auto bas = uniform_bas_state();
  out.min_entropy = std::numeric_limits<double>::infinity();
  // subsets containing qubit 0 cover every cut once
  for (unsigned mask = 1; mask < 16; ++mask) {
    if (!(mask & 0b1000) || mask == 0b1111) continue;
    std::vector<int> part;
    for (int q = 0; q < 4; ++q) {
      if (mask & (0b1000u >> q)) part.push_back(q);
    }
    const double s = entanglement_entropy(bas, part);
    out.bipartitions.emplace_back(part, s);
    out.bas_max_bipartition = std::max(out.bas_max_bipartition, s);
    if (part.size() == 2) out.min_entropy = std::min(out.min_entropy, s);
  }
  const auto hs = higuchi_sudbery_state();
  out.max_entropy = std::numeric_limits<double>::infinity();
  for (const auto& part : {std::vector<int>{0, 1}, std::vector<int>{0, 2}, std::vector<int>{0, 3}}) {
    out.max_entropy = std::min(out.max_entropy, entanglement_entropy(hs, part));
  }
  return out;
}

}  // namespace qcgan
