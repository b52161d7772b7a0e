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

#include "qcgan/circuit.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "qcgan/error.hpp"
#include "qcgan/rng.hpp"

namespace qcgan {

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::Circle: return "circle";
    case Topology::Star: return "star";
    case Topology::AllToAll: return "all-to-all";
  }
  return "?";
}

Topology parse_topology(const std::string& name) {
  if (name == "circle") return Topology::Circle;
  if (name == "star") return Topology::Star;
  if (name == "all-to-all" || name == "all_to_all") return Topology::AllToAll;
  throw ValidationError("unknown topology '" + name + "'");
}

ParamCircuit::ParamCircuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw CapacityError("circuit qubit count out of range");
}

void ParamCircuit::add_fixed(const GateOp& op) {
  validate_gate(op, n_qubits_);
  slots_.push_back({op.kind, op.targets, op.controls, op.angle, std::nullopt});
}

int ParamCircuit::add_param(GateKind kind, std::vector<int> targets, std::vector<int> controls) {
  if (!is_rotation(kind)) throw ValidationError("only rotation gates take parameters");
  GateOp probe{kind, targets, controls, 0.0};
  validate_gate(probe, n_qubits_);
  const int index = n_params_++;
  param_slot_.push_back(slots_.size());
  slots_.push_back({kind, std::move(targets), std::move(controls), 0.0, index});
  return index;
}

ParamCircuit ParamCircuit::embedded(int offset, int total_qubits) const {
  if (offset < 0 || offset + n_qubits_ > total_qubits) {
    throw ValidationError("embedding does not fit the register");
  }
  ParamCircuit out(total_qubits);
  out.n_params_ = n_params_;
  out.param_slot_ = param_slot_;
  out.slots_ = slots_;
  for (auto& s : out.slots_) {
    for (auto& q : s.targets) q += offset;
    for (auto& q : s.controls) q += offset;
  }
  return out;
}

std::vector<GateOp> bind(const ParamCircuit& pc, std::span<const double> params) {
  if (static_cast<int>(params.size()) != pc.n_params()) {
    throw ValidationError("bind: expected " + std::to_string(pc.n_params()) + " parameters, got " +
                          std::to_string(params.size()));
  }
  std::vector<GateOp> ops;
  ops.reserve(pc.slots().size());
  for (const auto& s : pc.slots()) {
    const double angle = s.param ? params[static_cast<std::size_t>(*s.param)] : s.angle;
    ops.push_back({s.kind, s.targets, s.controls, angle});
  }
  return ops;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string dump_circuit(const ParamCircuit& pc) {
  std::ostringstream os;
  for (const auto& s : pc.slots()) {
    os << gate_name(s.kind) << " targets=" << join(s.targets) << " controls=" << join(s.controls);
    if (s.param) {
      os << " param=" << *s.param;
    } else if (is_rotation(s.kind)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12f", s.angle);
      os << " angle=" << buf;
    }
    os << '\n';
  }
  return os.str();
}

void ConditionSpec::validate() const {
  if (m() < 2 || m() > kMaxCategories) {
    throw ValidationError("condition category count must be in [2, 8]");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("condition probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("condition probabilities must sum to 1");
}

ParamCircuit stage1_template(int k) {
  ParamCircuit pc(k);
  pc.add_param(GateKind::RY, {0});
  for (int i = 0; i + 1 < k; ++i) {
    pc.add_param(GateKind::CRY, {i + 1}, {i});
    pc.add_fixed(GateOp::cnot(i + 1, i));
  }
  return pc;
}

namespace {

bool weight_at_most_one(std::size_t index) { return (index & (index - 1)) == 0; }

void check_stage1_target(std::span<const double> target) {
  const std::size_t dim = target.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("stage-one target length must be a power of two >= 2");
  }
  double norm = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(target[i] >= 0.0)) throw ValidationError("stage-one target amplitudes must be >= 0");
    if (target[i] != 0.0 && !weight_at_most_one(i)) {
      throw ValidationError("stage-one target must be supported on weight <= 1 basis states");
    }
    norm += target[i] * target[i];
  }
  if (std::abs(norm - 1.0) > 1e-9) throw ValidationError("stage-one target must have unit norm");
}

Eigen::VectorXd stage1_residual_vector(const ParamCircuit& tmpl, std::span<const double> angles,
                                       std::span<const double> target) {
  QuantumState s(tmpl.n_qubits());
  s.apply(qcgan::bind(tmpl, angles));
  const auto amps = s.amplitudes();
  const auto dim = static_cast<Eigen::Index>(amps.size());
  Eigen::VectorXd r(2 * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    r(i) = amps[static_cast<std::size_t>(i)].real() - target[static_cast<std::size_t>(i)];
    r(dim + i) = amps[static_cast<std::size_t>(i)].imag();
  }
  return r;
}

// Levenberg-Marquardt on the amplitude residual with a central-difference
// Jacobian. Returns the best residual norm reached; `angles` is updated.
double levenberg_marquardt(const ParamCircuit& tmpl, std::vector<double>& angles,
                           std::span<const double> target) {
  const auto n = static_cast<Eigen::Index>(angles.size());
  Eigen::VectorXd r = stage1_residual_vector(tmpl, angles, target);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  constexpr double kStep = 1e-7;
  for (int iter = 0; iter < 200 && cost > 1e-26; ++iter) {
    Eigen::MatrixXd jac(r.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
      auto plus = angles;
      auto minus = angles;
      plus[static_cast<std::size_t>(j)] += kStep;
      minus[static_cast<std::size_t>(j)] -= kStep;
      jac.col(j) = (stage1_residual_vector(tmpl, plus, target) -
                    stage1_residual_vector(tmpl, minus, target)) / (2 * kStep);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20; ++tries) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      std::vector<double> trial = angles;
      for (Eigen::Index j = 0; j < n; ++j) trial[static_cast<std::size_t>(j)] += step(j);
      const Eigen::VectorXd rt = stage1_residual_vector(tmpl, trial, target);
      if (rt.squaredNorm() < cost) {
        angles = std::move(trial);
        r = rt;
        cost = rt.squaredNorm();
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }
  return std::sqrt(cost);
}

}  // namespace

double stage1_residual(std::span<const double> angles, std::span<const double> target_amps) {
  const int k = std::countr_zero(target_amps.size());
  const auto tmpl = stage1_template(k);
  return stage1_residual_vector(tmpl, angles, target_amps).norm();
}

AngleSolution solve_stage1_angles(std::span<const double> target_amps) {
  check_stage1_target(target_amps);
  const int k = std::countr_zero(target_amps.size());
  const auto tmpl = stage1_template(k);
  constexpr double kTolerance = 1e-8;

  AngleSolution best;
  best.residual = std::numeric_limits<double>::infinity();
  Rng rng(0x5EED5EEDULL + static_cast<std::uint64_t>(k));
  for (int restart = 0; restart < 64; ++restart) {
    std::vector<double> angles(static_cast<std::size_t>(tmpl.n_params()), 0.0);
    if (restart > 0) {
      for (auto& a : angles) a = uniform(rng, -M_PI, M_PI);
    }
    const double res = levenberg_marquardt(tmpl, angles, target_amps);
    if (res < best.residual) {
      best.residual = res;
      best.angles = angles;
    }
    if (best.residual < 1e-12) break;
  }
  if (!(best.residual < kTolerance)) {
    throw NumericError("stage-one angle solver stalled", best.residual);
  }
  return best;
}

ParamCircuit build_condition_encoder(const ConditionSpec& spec) {
  spec.validate();
  const int m = spec.m();
  const int k = m - 1;

  // Register state |0..0> feeds category m through the flag qubit; the
  // register state with only bit (j-1) set becomes category j.
  std::vector<double> target(std::size_t{1} << k, 0.0);
  target[0] = std::sqrt(spec.probs[static_cast<std::size_t>(m - 1)]);
  for (int j = 1; j < m; ++j) {
    target[std::size_t{1} << (j - 1)] = std::sqrt(spec.probs[static_cast<std::size_t>(j - 1)]);
  }
  double norm = 0.0;
  for (double t : target) norm += t * t;
  for (double& t : target) t /= std::sqrt(norm);

  const auto solution = solve_stage1_angles(target);
  const auto stage1 = qcgan::bind(stage1_template(k).embedded(1, m), solution.angles);

  ParamCircuit pc(m);
  for (const auto& op : stage1) pc.add_fixed(op);
  std::vector<int> reg(static_cast<std::size_t>(k));
  std::iota(reg.begin(), reg.end(), 1);
  for (int q : reg) pc.add_fixed(GateOp::x(q));
  pc.add_fixed(k == 1 ? GateOp::cnot(1, 0) : GateOp::toffoli(reg, 0));
  for (int q : reg) pc.add_fixed(GateOp::x(q));
  return pc;
}

ParamCircuit build_w3_prep() { return build_condition_encoder({{1.0 / 3, 1.0 / 3, 1.0 / 3}}); }

std::vector<std::pair<int, int>> topology_pairs(int n_d, Topology topology) {
  std::vector<std::pair<int, int>> pairs;
  if (n_d < 2) return pairs;
  switch (topology) {
    case Topology::AllToAll:
      for (int a = 0; a < n_d; ++a) {
        for (int b = a + 1; b < n_d; ++b) pairs.emplace_back(a, b);
      }
      break;
    case Topology::Circle:
      for (int a = 0; a < n_d; ++a) {
        const int b = (a + 1) % n_d;
        pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
      break;
    case Topology::Star:
      for (int b = 1; b < n_d; ++b) pairs.emplace_back(0, b);
      break;
  }
  return pairs;
}

ParamCircuit build_generator(int n_d, int n_c, int layers, Topology topology) {
  if (n_d < 1 || n_c < 0 || layers < 1) {
    throw ValidationError("generator needs n_d >= 1, n_c >= 0, layers >= 1");
  }
  if (n_d + n_c > kMaxQubits) throw CapacityError("generator register too large");
  ParamCircuit pc(n_d + n_c);
  const auto pairs = topology_pairs(n_d, topology);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_d; ++q) {
      pc.add_param(GateKind::RZ, {q});
      pc.add_param(GateKind::RX, {q});
      pc.add_param(GateKind::RZ, {q});
    }
    for (const auto& [c, t] : pairs) pc.add_param(GateKind::CRX, {t}, {c});
    for (int c = n_d; c < n_d + n_c; ++c) {
      for (int t = 0; t < n_d; ++t) pc.add_param(GateKind::CRX, {t}, {c});
    }
  }
  return pc;
}

}  // namespace qcgan
