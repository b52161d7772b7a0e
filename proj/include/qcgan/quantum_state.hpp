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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcgan {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class GateKind { RX, RZ, RY, X, CNOT, TOFFOLI, CRX, CRY, CRZ };

const char* gate_name(GateKind kind);
bool is_rotation(GateKind kind);
bool is_controlled_rotation(GateKind kind);

/// One concrete gate. TOFFOLI accepts two or more controls (multi-controlled X).
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<int> controls;
  double angle = 0.0;

  static GateOp rx(int q, double theta) { return {GateKind::RX, {q}, {}, theta}; }
  static GateOp ry(int q, double theta) { return {GateKind::RY, {q}, {}, theta}; }
  static GateOp rz(int q, double theta) { return {GateKind::RZ, {q}, {}, theta}; }
  static GateOp x(int q) { return {GateKind::X, {q}, {}, 0.0}; }
  static GateOp cnot(int c, int t) { return {GateKind::CNOT, {t}, {c}, 0.0}; }
  static GateOp toffoli(std::vector<int> cs, int t) {
    return {GateKind::TOFFOLI, {t}, std::move(cs), 0.0};
  }
  static GateOp crx(int c, int t, double theta) { return {GateKind::CRX, {t}, {c}, theta}; }
  static GateOp cry(int c, int t, double theta) { return {GateKind::CRY, {t}, {c}, theta}; }
  static GateOp crz(int c, int t, double theta) { return {GateKind::CRZ, {t}, {c}, theta}; }
};

/// Throws ValidationError unless the op's arity, index range and
/// target/control disjointness are valid on an n-qubit register.
void validate_gate(const GateOp& op, int n_qubits);

/// Dense statevector. Qubit 0 is the most significant bit of the basis index.
class QuantumState {
 public:
  /// |0...0> on n qubits; throws CapacityError outside [1, kMaxQubits].
  explicit QuantumState(int n_qubits);

  /// Takes ownership of explicit amplitudes; the length must be a power of two
  /// and the norm 1 within 1e-10.
  static QuantumState from_amplitudes(std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm_squared() const;

  void apply(const GateOp& op);
  void apply(std::span<const GateOp> ops);

  /// Bit of qubit q inside a basis index.
  std::uint64_t qubit_bit(int q) const { return std::uint64_t{1} << (n_qubits_ - 1 - q); }

 private:
  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Reduced density matrix over a subset of qubits; the first kept qubit is
/// the most significant bit of the row index.
struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd entries;

  double trace() const { return entries.trace().real(); }
  /// Eigenvalues in ascending order, negatives from round-off clamped to 0.
  std::vector<double> eigenvalues() const;
};

QuantumState new_state(int n_qubits);
QuantumState apply_gate(QuantumState state, const GateOp& op);
std::vector<double> probabilities(const QuantumState& state);

/// Bitstring of a basis index, qubit 0 leftmost.
std::string basis_label(std::uint64_t index, int n_qubits);

/// i.i.d. measurement outcomes in the computational basis.
std::vector<std::string> sample(const QuantumState& state, int shots, std::uint64_t rng_seed);

DensityMatrix partial_trace(const QuantumState& state, std::span<const int> keep);

/// Von Neumann entropy in bits of the reduced state on `subsystem`.
double entanglement_entropy(const QuantumState& state, std::span<const int> subsystem);

/// Entropy in bits of a probability spectrum; entries below 1e-12 contribute 0.
double spectrum_entropy(std::span<const double> eigenvalues);

/// Probability that `qubit` measures 1.
double expectation_one(const QuantumState& state, int qubit);

}  // namespace qcgan
