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

#include "qcgan/quantum_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qcgan/error.hpp"
#include "qcgan/kernels.hpp"
#include "qcgan/rng.hpp"

namespace qcgan {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::RY: return "RY";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::CRX: return "CRX";
    case GateKind::CRY: return "CRY";
    case GateKind::CRZ: return "CRZ";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ:
      return true;
    default:
      return false;
  }
}

bool is_controlled_rotation(GateKind kind) {
  return kind == GateKind::CRX || kind == GateKind::CRY || kind == GateKind::CRZ;
}

namespace {

std::size_t expected_controls(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
      return 0;
    case GateKind::TOFFOLI:
      return 2;  // minimum
    default:
      return 1;
  }
}

}  // namespace

void validate_gate(const GateOp& op, int n_qubits) {
  const std::string name = gate_name(op.kind);
  if (op.targets.size() != 1) throw ValidationError(name + ": expected exactly one target");
  const std::size_t want = expected_controls(op.kind);
  if (op.kind == GateKind::TOFFOLI ? op.controls.size() < want : op.controls.size() != want) {
    throw ValidationError(name + ": wrong number of controls");
  }
  auto in_range = [&](int q) { return q >= 0 && q < n_qubits; };
  if (!in_range(op.targets[0])) throw ValidationError(name + ": target index out of range");
  for (std::size_t i = 0; i < op.controls.size(); ++i) {
    const int c = op.controls[i];
    if (!in_range(c)) throw ValidationError(name + ": control index out of range");
    if (c == op.targets[0]) throw ValidationError(name + ": control collides with target");
    for (std::size_t j = 0; j < i; ++j) {
      if (op.controls[j] == c) throw ValidationError(name + ": duplicate control");
    }
  }
  if (!std::isfinite(op.angle)) throw ValidationError(name + ": non-finite angle");
}

QuantumState::QuantumState(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                        "], got " + std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amps) {
  const std::size_t dim = amps.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("amplitude vector length must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) throw CapacityError("too many qubits");
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) throw ValidationError("amplitudes are not normalized");
  QuantumState s(1);
  s.n_qubits_ = n;
  s.amps_ = std::move(amps);
  return s;
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void QuantumState::apply(const GateOp& op) {
  validate_gate(op, n_qubits_);
  const std::uint64_t target = qubit_bit(op.targets[0]);
  std::uint64_t controls = 0;
  for (int c : op.controls) controls |= qubit_bit(c);

  const double half = 0.5 * op.angle;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Amplitude mis{0.0, -s};
  switch (op.kind) {
    case GateKind::RX:
    case GateKind::CRX:
      kernels::apply_controlled_1q(amps_, target, controls, {c, mis, mis, c});
      break;
    case GateKind::RY:
    case GateKind::CRY:
      kernels::apply_controlled_1q(amps_, target, controls, {c, -s, s, c});
      break;
    case GateKind::RZ:
    case GateKind::CRZ:
      kernels::apply_controlled_diag(amps_, target, controls, {c, -s}, {c, s});
      break;
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::TOFFOLI:
      kernels::apply_controlled_1q(amps_, target, controls, {0.0, 1.0, 1.0, 0.0});
      break;
  }
}

void QuantumState::apply(std::span<const GateOp> ops) {
  for (const auto& op : ops) apply(op);
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(entries.rows()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::max(0.0, solver.eigenvalues()(static_cast<Eigen::Index>(i)));
  }
  return out;
}

QuantumState new_state(int n_qubits) { return QuantumState(n_qubits); }

QuantumState apply_gate(QuantumState state, const GateOp& op) {
  state.apply(op);
  return state;
}

std::vector<double> probabilities(const QuantumState& state) {
  std::vector<double> out(state.dim());
  kernels::probabilities(state.amplitudes(), out);
  return out;
}

std::string basis_label(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (index & (std::uint64_t{1} << (n_qubits - 1 - q))) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

std::vector<std::uint64_t> sample_outcomes(std::span<const double> probs, std::size_t count,
                                           Rng& rng) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= probs.size()) idx = probs.size() - 1;
    // upper_bound can land on a zero-probability entry only through round-off
    // at the top of the cdf; walk back to the last entry with mass.
    while (idx > 0 && probs[idx] <= 0.0) --idx;
    out.push_back(idx);
  }
  return out;
}

std::vector<std::string> sample(const QuantumState& state, int shots, std::uint64_t rng_seed) {
  if (shots < 1) throw ValidationError("sample: shots must be >= 1");
  Rng rng(rng_seed);
  const auto probs = probabilities(state);
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (auto idx : sample_outcomes(probs, static_cast<std::size_t>(shots), rng)) {
    out.push_back(basis_label(idx, state.n_qubits()));
  }
  return out;
}

namespace {

std::vector<int> checked_subsystem(const QuantumState& state, std::span<const int> keep) {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw ValidationError("subsystem must be nonempty");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("subsystem has duplicate qubits");
  }
  if (sorted.front() < 0 || sorted.back() >= state.n_qubits()) {
    throw ValidationError("subsystem qubit out of range");
  }
  if (static_cast<int>(sorted.size()) == state.n_qubits()) {
    throw ValidationError("subsystem must be a proper subset");
  }
  return sorted;
}

}  // namespace

DensityMatrix partial_trace(const QuantumState& state, std::span<const int> keep) {
  const auto kept = checked_subsystem(state, keep);
  const int n = state.n_qubits();
  std::vector<int> env;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) env.push_back(q);
  }
  const Eigen::Index rows = Eigen::Index{1} << kept.size();
  const Eigen::Index cols = Eigen::Index{1} << env.size();

  // psi reshaped to (kept, env); rho = M M^dagger.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
  const auto amps = state.amplitudes();
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    Eigen::Index r = 0;
    for (int q : kept) r = (r << 1) | ((idx & state.qubit_bit(q)) ? 1 : 0);
    Eigen::Index c = 0;
    for (int q : env) c = (c << 1) | ((idx & state.qubit_bit(q)) ? 1 : 0);
    m(r, c) = amps[idx];
  }
  DensityMatrix rho;
  rho.n_qubits = static_cast<int>(kept.size());
  rho.entries = m * m.adjoint();
  return rho;
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < 1e-12) continue;
    s -= l * std::log2(l);
  }
  return s;
}

double entanglement_entropy(const QuantumState& state, std::span<const int> subsystem) {
  const auto ev = partial_trace(state, subsystem).eigenvalues();
  return spectrum_entropy(ev);
}

double expectation_one(const QuantumState& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw ValidationError("expectation_one: qubit out of range");
  }
  const std::uint64_t bit = state.qubit_bit(qubit);
  const auto amps = state.amplitudes();
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) p += std::norm(amps[i]);
  }
  return p;
}

}  // namespace qcgan
