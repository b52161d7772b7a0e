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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcgan/quantum_state.hpp"

namespace qcgan {

enum class Topology { Circle, Star, AllToAll };

const char* topology_name(Topology t);
/// Parses "circle", "star" or "all-to-all"; throws ValidationError otherwise.
Topology parse_topology(const std::string& name);

/// A gate whose angle is either fixed or read from a parameter vector.
struct GateSlot {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<int> controls;
  double angle = 0.0;
  std::optional<int> param;
};

/// Ordered gate program with symbolic rotation angles.
///
/// Parameter indices are handed out in order of insertion, so they always
/// form the contiguous range [0, n_params) with each index used once.
class ParamCircuit {
 public:
  explicit ParamCircuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int n_params() const { return n_params_; }
  const std::vector<GateSlot>& slots() const { return slots_; }

  void add_fixed(const GateOp& op);
  /// Appends a rotation whose angle is a fresh parameter; returns its index.
  int add_param(GateKind kind, std::vector<int> targets, std::vector<int> controls = {});

  /// Slot position holding parameter `index`.
  std::size_t slot_of_param(int index) const { return param_slot_[static_cast<std::size_t>(index)]; }

  /// Same program on a wider register with every qubit index moved by `offset`.
  ParamCircuit embedded(int offset, int total_qubits) const;

 private:
  int n_qubits_;
  int n_params_ = 0;
  std::vector<GateSlot> slots_;
  std::vector<std::size_t> param_slot_;
};

/// Replaces symbolic slots by concrete angles. Throws on length mismatch.
std::vector<GateOp> bind(const ParamCircuit& pc, std::span<const double> params);

/// One gate per line: `KIND targets=.. controls=.. angle=..` or `param=k`.
std::string dump_circuit(const ParamCircuit& pc);

/// Class-probability weights of the condition register.
struct ConditionSpec {
  std::vector<double> probs;

  int m() const { return static_cast<int>(probs.size()); }
  /// Throws ValidationError unless 2 <= m <= 8, probs >= 0 and sum to 1.
  void validate() const;
};

inline constexpr int kMaxCategories = 8;

/// Stage-one template on k qubits: RY on qubit 0, then for each neighbour
/// pair a CRY handing the excitation forward followed by a CNOT clearing it
/// behind. Reaches every nonnegative state supported on |0..0> and the
/// weight-one basis states.
ParamCircuit stage1_template(int k);

struct AngleSolution {
  std::vector<double> angles;
  double residual = 0.0;
};

/// Numerically solves the stage-one template for nonnegative real target
/// amplitudes supported on |0..0> and weight-one basis states. Throws
/// NumericError if the least-squares residual stays above 1e-8.
AngleSolution solve_stage1_angles(std::span<const double> target_amps);

/// Residual ||template(angles)|0..0> - target|| for a given angle vector.
double stage1_residual(std::span<const double> angles, std::span<const double> target_amps);

/// Fixed m-qubit circuit mapping |0..0> to sum_j sqrt(p_j) |onehot_j>, where
/// category j (1-based) sets the j-th bit from the right.
ParamCircuit build_condition_encoder(const ConditionSpec& spec);

/// Three-qubit W-state preparation (uniform condition encoder for m = 3).
ParamCircuit build_w3_prep();

/// Generator template. Data qubits are 0..n_d-1, condition qubits follow.
/// Each layer: RZ RX RZ on every data qubit, then CRX over the topology's
/// data pairs (lower index controls), then CRX from every condition qubit to
/// every data qubit.
ParamCircuit build_generator(int n_d, int n_c, int layers, Topology topology);

/// Data-data pairs of one entanglement sublayer.
std::vector<std::pair<int, int>> topology_pairs(int n_d, Topology topology);

}  // namespace qcgan
