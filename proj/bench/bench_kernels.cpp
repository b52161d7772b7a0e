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

// Compares the serial reference kernels with the OpenMP kernels, and times
// one full parameter-shift gradient of the BAS(2,2) generator.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qcgan/discriminator.hpp"
#include "qcgan/generator.hpp"
#include "qcgan/kernels.hpp"
#include "qcgan/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qcgan;
using Clock = std::chrono::steady_clock;

template <typename F>
double seconds_per_call(F&& f, int reps) {
  const auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

std::vector<kernels::Amplitude> random_amps(int n, Rng& rng) {
  std::vector<kernels::Amplitude> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("openmp: %s, threads: %d\n", kernels::openmp_enabled() ? "on" : "off", threads);
  std::printf("%6s %14s %14s %8s\n", "qubits", "serial [ms]", "omp [ms]", "speedup");

  Rng rng(1);
  const double c = std::cos(0.3), s = std::sin(0.3);
  const kernels::Matrix2 u{c, {0, -s}, {0, -s}, c};
  for (int n : {8, 12, 16, 18, 20, 22}) {
    auto a = random_amps(n, rng);
    auto b = a;
    const int reps = n <= 16 ? 200 : 10;
    const std::uint64_t target = std::uint64_t{1} << (n / 2);
    const std::uint64_t ctrl = std::uint64_t{1} << (n - 1);
    const double ts = seconds_per_call([&] { kernels::serial::apply_controlled_1q(a, target, ctrl, u); }, reps);
    const double tp = seconds_per_call([&] { kernels::omp::apply_controlled_1q(b, target, ctrl, u); }, reps);
    std::printf("%6d %14.4f %14.4f %8.2f\n", n, ts * 1e3, tp * 1e3, ts / tp);
  }

  auto model = GeneratorModel::create(4, {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 3, Topology::AllToAll, {});
  std::vector<double> theta(static_cast<std::size_t>(model.n_params()));
  for (auto& t : theta) t = uniform(rng, -3, 3);
  model.set_theta(theta);
  const auto disc = init_discriminator(3, model.n_qubits());
  const double tg = seconds_per_call([&] { (void)generator_gradient(model, disc); }, 20);
  std::printf("generator gradient (%d params, %d qubits): %.3f ms\n", model.n_params(),
              model.n_qubits(), tg * 1e3);
  return 0;
}
