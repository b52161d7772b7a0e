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

// Statevector kernels. Every kernel has a serial reference version and an
// OpenMP version; the two must agree bit for bit on any input. The default
// entry points pick the OpenMP path only for states large enough to amortize
// thread start-up.

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace qcgan::kernels {

using Amplitude = std::complex<double>;

/// Row-major 2x2 complex matrix {u00, u01, u10, u11}.
using Matrix2 = std::array<Amplitude, 4>;

/// States with at least this many amplitudes use the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// True when the library was built with OpenMP support.
bool openmp_enabled();

namespace serial {

/// Applies `u` to the qubit selected by `target_bit` on every basis index
/// whose bits in `control_mask` are all set.
void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u);

/// Diagonal fast path: multiplies by d0/d1 depending on the target bit.
void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1);

void probabilities(std::span<const Amplitude> amps, std::span<double> out);

}  // namespace serial

namespace omp {

void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u);

void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1);

void probabilities(std::span<const Amplitude> amps, std::span<double> out);

}  // namespace omp

void apply_controlled_1q(std::span<Amplitude> amps, std::uint64_t target_bit,
                         std::uint64_t control_mask, const Matrix2& u);
void apply_controlled_diag(std::span<Amplitude> amps, std::uint64_t target_bit,
                           std::uint64_t control_mask, Amplitude d0, Amplitude d1);
void probabilities(std::span<const Amplitude> amps, std::span<double> out);

}  // namespace qcgan::kernels
