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

#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qcgan/kernels.hpp"
#include "qcgan/rng.hpp"

using namespace qcgan;
using kernels::Amplitude;
using kernels::Matrix2;

namespace {

std::vector<Amplitude> random_amps(int n, Rng& rng) {
  std::vector<Amplitude> a(std::size_t{1} << n);
  for (auto& x : a) x = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return a;
}

Matrix2 random_matrix(Rng& rng) {
  Matrix2 u;
  for (auto& x : u) x = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return u;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree exactly") {
  Rng rng(123);
  for (int n : {1, 2, 5, 9, 15, 16}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_amps(n, rng);
      auto b = a;
      const int t = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
      std::uint64_t mask = 0;
      for (int q = 0; q < n; ++q) {
        if (q != t && uniform01(rng) < 0.3) mask |= std::uint64_t{1} << q;
      }
      const std::uint64_t tb = std::uint64_t{1} << t;
      const auto u = random_matrix(rng);
      kernels::serial::apply_controlled_1q(a, tb, mask, u);
      kernels::omp::apply_controlled_1q(b, tb, mask, u);
      CHECK(a == b);

      const Amplitude d0{0.3, -0.2}, d1{-0.9, 0.1};
      kernels::serial::apply_controlled_diag(a, tb, mask, d0, d1);
      kernels::omp::apply_controlled_diag(b, tb, mask, d0, d1);
      CHECK(a == b);

      std::vector<double> pa(a.size()), pb(b.size());
      kernels::serial::probabilities(a, pa);
      kernels::omp::probabilities(b, pb);
      CHECK(pa == pb);
    }
  }
}

TEST_CASE("serial kernel against a dense matrix product") {
  // 3 qubits, target bit 0 (qubit 2 in MSB order), control bit 2.
  Rng rng(4);
  auto a = random_amps(3, rng);
  const auto u = random_matrix(rng);
  std::vector<Amplitude> expect = a;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!(i & 4) || (i & 1)) continue;
    expect[i] = u[0] * a[i] + u[1] * a[i | 1];
    expect[i | 1] = u[2] * a[i] + u[3] * a[i | 1];
  }
  kernels::serial::apply_controlled_1q(a, 1, 4, u);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(a[i] - expect[i]) < 1e-15);
}

TEST_CASE("dispatcher matches the serial reference above the threshold") {
  Rng rng(9);
  auto a = random_amps(15, rng);
  auto b = a;
  const auto u = random_matrix(rng);
  kernels::apply_controlled_1q(a, 1 << 7, 1 << 3, u);
  kernels::serial::apply_controlled_1q(b, 1 << 7, 1 << 3, u);
  CHECK(a == b);
}
