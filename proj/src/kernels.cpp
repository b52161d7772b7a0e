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

#include "qcgan/kernels.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcgan::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

inline void rotate_pair(Amplitude& a0, Amplitude& a1, const Matrix2& u) {
  const Amplitude v0 = a0;
  const Amplitude v1 = a1;
  a0 = u[0] * v0 + u[1] * v1;
  a1 = u[2] * v0 + u[3] * v1;
}

// Index of the k-th basis state whose `target_bit` is clear.
inline std::uint64_t insert_zero(std::uint64_t k, std::uint64_t target_bit) {
  const std::uint64_t low = k & (target_bit - 1);
  return ((k & ~(target_bit - 1)) << 1) | low;
}

}  // namespace

namespace serial {

void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u) {
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & target_bit) != 0 || (i & control_mask) != control_mask) continue;
    rotate_pair(amps[i], amps[i | target_bit], u);
  }
}

void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1) {
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & control_mask) != control_mask) continue;
    amps[i] *= (i & target_bit) ? d1 : d0;
  }
}

void probabilities(std::span<const Amplitude> amps, std::span<double> out) {
  for (std::size_t i = 0; i < amps.size(); ++i) out[i] = std::norm(amps[i]);
}

}  // namespace serial

namespace omp {

void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u) {
  const std::int64_t pairs = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), target_bit);
    if ((i & control_mask) != control_mask) continue;
    rotate_pair(amps[i], amps[i | target_bit], u);
  }
}

void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1) {
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < dim; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if ((i & control_mask) != control_mask) continue;
    amps[i] *= (i & target_bit) ? d1 : d0;
  }
}

void probabilities(std::span<const Amplitude> amps, std::span<double> out) {
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

}  // namespace omp

void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u) {
  if (amps.size() >= kParallelThreshold) {
    omp::apply_controlled_1q(amps, target_bit, control_mask, u);
  } else {
    serial::apply_controlled_1q(amps, target_bit, control_mask, u);
  }
}

void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1) {
  if (amps.size() >= kParallelThreshold) {
    omp::apply_controlled_diag(amps, target_bit, control_mask, d0, d1);
  } else {
    serial::apply_controlled_diag(amps, target_bit, control_mask, d0, d1);
  }
}

void probabilities(std::span<const Amplitude> amps, std::span<double> out) {
  if (amps.size() >= kParallelThreshold) {
    omp::probabilities(amps, out);
  } else {
    serial::probabilities(amps, out);
  }
}

}  // namespace qcgan::kernels
