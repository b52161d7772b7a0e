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

#include "qcgan/bas.hpp"

#include <algorithm>
#include <set>

#include "qcgan/error.hpp"
#include "qcgan/rng.hpp"

namespace qcgan {

std::string BasImage::str() const { return bits_str(pixels); }

std::uint64_t BasImage::value() const {
  std::uint64_t v = 0;
  for (auto p : pixels) v = (v << 1) | p;
  return v;
}

Bits category_label(Category c) {
  switch (c) {
    case Category::Horizontal: return {0, 0, 1};
    case Category::Vertical: return {0, 1, 0};
    case Category::Uniform: return {1, 0, 0};
  }
  return {};
}

const char* category_name(Category c) {
  switch (c) {
    case Category::Horizontal: return "horizontal";
    case Category::Vertical: return "vertical";
    case Category::Uniform: return "uniform";
  }
  return "?";
}

Category category_from_label(const Bits& label) {
  for (auto c : {Category::Horizontal, Category::Vertical, Category::Uniform}) {
    if (label == category_label(c)) return c;
  }
  throw ValidationError("not a category label: " + bits_str(label));
}

std::vector<double> Sample::as_input() const {
  std::vector<double> x;
  x.reserve(data_bits.size() + label.size());
  for (auto b : data_bits) x.push_back(b);
  for (auto b : label) x.push_back(b);
  return x;
}

bool rows_constant(const BasImage& img) {
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 1; c < img.cols; ++c) {
      if (img.pixels[static_cast<std::size_t>(r * img.cols + c)] != img.pixels[static_cast<std::size_t>(r * img.cols)]) return false;
    }
  }
  return true;
}

bool cols_constant(const BasImage& img) {
  for (int c = 0; c < img.cols; ++c) {
    for (int r = 1; r < img.rows; ++r) {
      if (img.pixels[static_cast<std::size_t>(r * img.cols + c)] != img.pixels[static_cast<std::size_t>(c)]) return false;
    }
  }
  return true;
}

bool is_valid_bas(const BasImage& img) { return rows_constant(img) || cols_constant(img); }

BasImage bas_image(const Bits& pixels, int rows, int cols) {
  if (static_cast<int>(pixels.size()) != rows * cols) {
    throw ValidationError("pixel count does not match image shape");
  }
  return {rows, cols, pixels};
}

std::vector<BasImage> enumerate_valid(int m, int n) {
  if (m < 1 || n < 1 || m * n > 20) throw CapacityError("BAS size must satisfy m, n >= 1 and m*n <= 20");
  std::set<std::uint64_t> seen;
  std::vector<BasImage> out;
  auto add = [&](BasImage img) {
    if (seen.insert(img.value()).second) out.push_back(std::move(img));
  };
  // bars: one bit per row
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    BasImage img{m, n, Bits(static_cast<std::size_t>(m * n))};
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) img.pixels[static_cast<std::size_t>(r * n + c)] = (mask >> (m - 1 - r)) & 1u;
    }
    add(std::move(img));
  }
  // stripes: one bit per column
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BasImage img{m, n, Bits(static_cast<std::size_t>(m * n))};
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) img.pixels[static_cast<std::size_t>(r * n + c)] = (mask >> (n - 1 - c)) & 1u;
    }
    add(std::move(img));
  }
  std::sort(out.begin(), out.end(),
            [](const BasImage& a, const BasImage& b) { return a.value() < b.value(); });
  return out;
}

Category categorize(const BasImage& img) {
  const bool rc = rows_constant(img);
  const bool cc = cols_constant(img);
  if (!rc && !cc) throw ValidationError("not a valid BAS image: " + img.str());
  if (rc && cc) return Category::Uniform;
  return rc ? Category::Horizontal : Category::Vertical;
}

std::vector<Sample> synthesize_training_set(int count, std::uint64_t rng_seed, bool stratified) {
  if (count < 1) throw ValidationError("sample count must be >= 1");
  const auto images = enumerate_valid(kBasRows, kBasCols);
  Rng rng(rng_seed);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::size_t pick = stratified ? static_cast<std::size_t>(i) % images.size()
                                        : static_cast<std::size_t>(uniform_index(rng, images.size()));
    const auto& img = images[pick];
    out.push_back({img.pixels, category_label(categorize(img))});
  }
  if (stratified) shuffle(out, rng);
  return out;
}

std::vector<std::vector<Sample>> batches(const std::vector<Sample>& dataset, int batch_size,
                                         std::uint64_t rng_seed) {
  if (batch_size < 1) throw ValidationError("batch size must be >= 1");
  std::vector<Sample> shuffled = dataset;
  Rng rng(rng_seed);
  shuffle(shuffled, rng);
  std::vector<std::vector<Sample>> out;
  const auto bs = static_cast<std::size_t>(batch_size);
  for (std::size_t start = 0; start < shuffled.size(); start += bs) {
    const std::size_t end = std::min(shuffled.size(), start + bs);
    out.emplace_back(shuffled.begin() + static_cast<std::ptrdiff_t>(start),
                     shuffled.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

Bits parse_bits(const std::string& s) {
  if (s.empty()) throw FormatError("empty bit string");
  Bits b;
  b.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw FormatError("invalid bit string '" + s + "'");
    b.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return b;
}

std::string bits_str(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (auto v : b) s.push_back(v ? '1' : '0');
  return s;
}

}  // namespace qcgan
