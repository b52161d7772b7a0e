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
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "qcgan/bas.hpp"
#include "qcgan/error.hpp"

using namespace qcgan;

namespace {

// Brute-force oracle: every pixel pattern, kept when all rows or all columns are constant.
std::vector<std::uint64_t> brute_force(int m, int n) {
  std::vector<std::uint64_t> out;
  const int px = m * n;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << px); ++v) {
    auto bit = [&](int r, int c) { return (v >> (px - 1 - (r * n + c))) & 1; };
    bool rows = true, cols = true;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        rows = rows && bit(r, c) == bit(r, 0);
        cols = cols && bit(r, c) == bit(0, c);
      }
    if (rows || cols) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_valid for BAS(2,2)") {
  const auto imgs = enumerate_valid(2, 2);
  std::vector<std::string> s;
  for (const auto& i : imgs) s.push_back(i.str());
  CHECK(s == std::vector<std::string>{"0000", "0011", "0101", "1010", "1100", "1111"});
}

TEST_CASE("enumerate_valid agrees with brute force") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n * m <= 12; ++n) {
      const auto imgs = enumerate_valid(m, n);
      std::vector<std::uint64_t> got;
      for (const auto& i : imgs) got.push_back(i.value());
      CHECK(got == brute_force(m, n));
      if (m > 1 && n > 1) CHECK(imgs.size() == static_cast<std::size_t>((1 << m) + (1 << n) - 2));
    }
  }
  CHECK(enumerate_valid(4, 5).size() == 16 + 32 - 2);
  CHECK_THROWS_AS(enumerate_valid(0, 2), CapacityError);
  CHECK_THROWS_AS(enumerate_valid(3, 7), CapacityError);
}

TEST_CASE("validity and categories") {
  CHECK(categorize(bas_image(parse_bits("1100"))) == Category::Horizontal);
  CHECK(categorize(bas_image(parse_bits("0011"))) == Category::Horizontal);
  CHECK(categorize(bas_image(parse_bits("1010"))) == Category::Vertical);
  CHECK(categorize(bas_image(parse_bits("0101"))) == Category::Vertical);
  CHECK(categorize(bas_image(parse_bits("0000"))) == Category::Uniform);
  CHECK(categorize(bas_image(parse_bits("1111"))) == Category::Uniform);
  CHECK_FALSE(is_valid_bas(bas_image(parse_bits("1000"))));
  CHECK_FALSE(is_valid_bas(bas_image(parse_bits("0110"))));
  CHECK_THROWS_AS(categorize(bas_image(parse_bits("1001"))), ValidationError);

  CHECK(bits_str(category_label(Category::Horizontal)) == "001");
  CHECK(bits_str(category_label(Category::Vertical)) == "010");
  CHECK(bits_str(category_label(Category::Uniform)) == "100");
  for (auto c : {Category::Horizontal, Category::Vertical, Category::Uniform})
    CHECK(category_from_label(category_label(c)) == c);
  CHECK_THROWS_AS(category_from_label(parse_bits("011")), ValidationError);
  CHECK_THROWS_AS(category_from_label(parse_bits("000")), ValidationError);
}

TEST_CASE("parse_bits") {
  CHECK(parse_bits("0110") == Bits{0, 1, 1, 0});
  CHECK_THROWS_AS(parse_bits("01a0"), FormatError);
  CHECK_THROWS_AS(parse_bits(""), FormatError);
}

TEST_CASE("synthesize_training_set") {
  const auto ds = synthesize_training_set(6000, 11);
  REQUIRE(ds.size() == 6000);
  std::map<std::string, int> per_image;
  std::map<Category, int> per_cat;
  for (const auto& s : ds) {
    const auto img = bas_image(s.data_bits);
    REQUIRE(is_valid_bas(img));
    CHECK(category_from_label(s.label) == categorize(img));
    ++per_image[img.str()];
    ++per_cat[categorize(img)];
  }
  CHECK(per_image.size() == 6);
  for (const auto& [k, v] : per_image) CHECK(std::abs(v - 1000) <= 100);
  for (const auto& [k, v] : per_cat) CHECK(std::abs(v - 2000) <= 140);

  CHECK(synthesize_training_set(50, 3) == synthesize_training_set(50, 3));
  CHECK(synthesize_training_set(50, 3) != synthesize_training_set(50, 4));
  CHECK_THROWS_AS(synthesize_training_set(-1, 1), ValidationError);

  const auto strat = synthesize_training_set(6000, 5, true);
  std::map<std::string, int> sc;
  for (const auto& s : strat) ++sc[bits_str(s.data_bits)];
  for (const auto& [k, v] : sc) CHECK(v == 1000);
}

TEST_CASE("batches") {
  const auto ds = synthesize_training_set(6000, 1);
  const auto bs = batches(ds, 40, 2);
  CHECK(bs.size() == 150);
  std::multiset<std::string> a, b;
  for (const auto& batch : bs) {
    CHECK(batch.size() == 40);
    for (const auto& s : batch) a.insert(bits_str(s.data_bits) + bits_str(s.label));
  }
  for (const auto& s : ds) b.insert(bits_str(s.data_bits) + bits_str(s.label));
  CHECK(a == b);
  const auto odd = batches(ds, 7, 2);
  CHECK(odd.size() == 858);
  CHECK(odd.back().size() == 6000 - 857 * 7);
  CHECK(batches(ds, 40, 2) == bs);
  CHECK_THROWS_AS(batches(ds, 0, 2), ValidationError);
}

TEST_CASE("sample input vector") {
  const Sample s{parse_bits("1010"), parse_bits("010")};
  CHECK(s.as_input() == std::vector<double>{1, 0, 1, 0, 0, 1, 0});
}
