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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qcgan/discriminator.hpp"
#include "qcgan/error.hpp"
#include "qcgan/rng.hpp"

using namespace qcgan;

namespace {

Batch random_batch(std::size_t n, Rng& rng, bool binary) {
  Batch b(n, std::vector<double>(7));
  for (auto& row : b) {
    for (auto& x : row) x = binary ? static_cast<double>(uniform_index(rng, 2)) : uniform01(rng);
  }
  return b;
}

}  // namespace

TEST_CASE("initialization") {
  const auto p = init_discriminator(5);
  CHECK(p.input_dim() == 7);
  CHECK(p.hidden() == 4);
  CHECK(p.size() == 7 * 4 + 4 + 4 + 1);
  CHECK(p.b1.isZero());
  CHECK(p.b2 == 0.0);
  const double bound1 = std::sqrt(6.0 / 11.0);
  CHECK(p.w1.cwiseAbs().maxCoeff() <= bound1);
  CHECK(p.w2.cwiseAbs().maxCoeff() <= std::sqrt(6.0 / 5.0));
  CHECK(init_discriminator(5).flatten() == p.flatten());
  CHECK(init_discriminator(6).flatten() != p.flatten());
}

TEST_CASE("flatten and assign round-trip") {
  auto p = init_discriminator(1);
  auto flat = p.flatten();
  CHECK(flat.size() == p.size());
  CHECK(flat[1] == p.w1(0, 1));
  auto q = DiscriminatorParams::zeros(7);
  q.assign(flat);
  CHECK(q.flatten() == flat);
  flat.pop_back();
  CHECK_THROWS_AS(q.assign(flat), ValidationError);
}

TEST_CASE("forward") {
  const auto z = DiscriminatorParams::zeros(7);
  const std::vector<double> x(7, 1.0);
  CHECK(forward(z, x) == doctest::Approx(0.5));

  auto p = DiscriminatorParams::zeros(2, 1);
  p.w1(0, 0) = 1.0;
  p.w1(0, 1) = -2.0;
  p.w2(0) = 3.0;
  p.b2 = -1.0;
  // relu(1*2 - 2*0.5) = 1 -> sigmoid(3 - 1)
  const std::vector<double> in = {2.0, 0.5};
  CHECK(forward(p, in) == doctest::Approx(1.0 / (1.0 + std::exp(-2.0))).epsilon(1e-14));
  const std::vector<double> neg = {0.0, 1.0};
  CHECK(forward(p, neg) == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-14));

  p.b2 = 1000.0;
  CHECK(forward(p, in) == 1.0 - kLogClamp);
  p.b2 = -1000.0;
  CHECK(forward(p, in) == kLogClamp);
  const std::vector<double> short_in = {1.0};
  CHECK_THROWS_AS(forward(p, short_in), ValidationError);
}

TEST_CASE("loss at an uninformed discriminator is 2 ln 2") {
  Rng rng(1);
  const auto z = DiscriminatorParams::zeros(7);
  CHECK(discriminator_loss(z, random_batch(10, rng, true), random_batch(7, rng, true)) ==
        doctest::Approx(2 * std::numbers::ln2).epsilon(1e-14));
}

TEST_CASE("analytic gradient matches central differences") {
  Rng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = init_discriminator(static_cast<std::uint64_t>(trial) + 10);
    auto flat = p.flatten();
    for (auto& v : flat) v += uniform(rng, -0.3, 0.3);
    p.assign(flat);
    const auto real = random_batch(12, rng, false);
    const auto fake = random_batch(9, rng, false);
    const auto g = discriminator_grad(p, real, fake).flatten();
    const double h = 1e-6;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      auto up = flat, dn = flat;
      up[i] += h;
      dn[i] -= h;
      auto pu = p, pd = p;
      pu.assign(up);
      pd.assign(dn);
      const double fd = (discriminator_loss(pu, real, fake) - discriminator_loss(pd, real, fake)) / (2 * h);
      CHECK(std::abs(fd - g[i]) < 1e-6);
    }
  }
}

TEST_CASE("input gradient of log D matches central differences") {
  Rng rng(3);
  const auto p = init_discriminator(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(7);
    for (auto& v : x) v = uniform01(rng);
    const auto g = log_output_input_gradient(p, x);
    for (std::size_t i = 0; i < 7; ++i) {
      auto up = x, dn = x;
      up[i] += 1e-6;
      dn[i] -= 1e-6;
      const double fd = (std::log(forward(p, up)) - std::log(forward(p, dn))) / 2e-6;
      CHECK(std::abs(fd - g[i]) < 1e-6);
    }
  }
}

TEST_CASE("loss and gradient ignore batch order") {
  Rng rng(8);
  const auto p = init_discriminator(2);
  auto real = random_batch(15, rng, true);
  auto fake = random_batch(15, rng, false);
  const double l0 = discriminator_loss(p, real, fake);
  const auto g0 = discriminator_grad(p, real, fake).flatten();
  shuffle(real, rng);
  shuffle(fake, rng);
  CHECK(discriminator_loss(p, real, fake) == doctest::Approx(l0).epsilon(1e-13));
  const auto g1 = discriminator_grad(p, real, fake).flatten();
  for (std::size_t i = 0; i < g0.size(); ++i) CHECK(g1[i] == doctest::Approx(g0[i]).epsilon(1e-12));
  CHECK_THROWS_AS(discriminator_loss(p, {}, fake), ValidationError);
}

TEST_CASE("Adam") {
  SUBCASE("first step moves each coordinate by lr against the gradient sign") {
    std::vector<double> x = {1.0, -2.0, 0.5};
    const std::vector<double> g = {0.3, -7.0, 1e-3};
    auto st = AdamState::zeros(3);
    adam_step(x, g, st, 0.01);
    CHECK(st.t == 1);
    CHECK(x[0] == doctest::Approx(0.99).epsilon(1e-7));
    CHECK(x[1] == doctest::Approx(-1.99).epsilon(1e-7));
    CHECK(x[2] == doctest::Approx(0.49).epsilon(1e-4));
  }
  SUBCASE("second step against a hand-computed trace") {
    std::vector<double> x = {0.0};
    auto st = AdamState::zeros(1);
    const double g1[] = {1.0}, g2[] = {-0.5};
    adam_step(x, g1, st, 0.1);
    adam_step(x, g2, st, 0.1);
    const double m = 0.9 * 0.1 * 1.0 + 0.1 * -0.5;
    const double v = 0.999 * 0.001 * 1.0 + 0.001 * 0.25;
    const double mh = m / (1 - 0.81), vh = v / (1 - 0.999 * 0.999);
    CHECK(x[0] == doctest::Approx(-0.1 - 0.1 * mh / (std::sqrt(vh) + 1e-8)).epsilon(1e-7));
  }
  SUBCASE("minimizes a quadratic") {
    std::vector<double> x = {3.0, -4.0};
    auto st = AdamState::zeros(2);
    for (int i = 0; i < 3000; ++i) {
      const std::vector<double> g = {2 * (x[0] - 1), 2 * (x[1] + 2)};
      adam_step(x, g, st, 0.01);
    }
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(x[1] == doctest::Approx(-2.0).epsilon(1e-3));
  }
  SUBCASE("shape mismatch") {
    std::vector<double> x = {1.0};
    const std::vector<double> g = {1.0, 2.0};
    auto st = AdamState::zeros(1);
    CHECK_THROWS_AS(adam_step(x, g, st, 0.1), ValidationError);
  }
}

TEST_CASE("training the discriminator separates real from fake") {
  Rng rng(4);
  auto p = init_discriminator(9);
  Batch real(20, std::vector<double>{1, 1, 0, 0, 0, 0, 1});
  Batch fake(20, std::vector<double>{1, 0, 1, 0, 0, 0, 1});
  auto st = AdamState::zeros(p.size());
  const double before = discriminator_loss(p, real, fake);
  for (int i = 0; i < 300; ++i) adam_step(p, discriminator_grad(p, real, fake), st, 0.05);
  CHECK(discriminator_loss(p, real, fake) < before * 0.1);
  CHECK(forward(p, real[0]) > 0.9);
  CHECK(forward(p, fake[0]) < 0.1);
}
