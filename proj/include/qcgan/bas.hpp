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

#include <cstdint>
#include <string>
#include <vector>

namespace qcgan {

using Bits = std::vector<std::uint8_t>;

/// m x n binary image, pixels row-major.
struct BasImage {
  int rows = 0;
  int cols = 0;
  Bits pixels;

  std::string str() const;
  /// Pixel string read as a binary number, first pixel most significant.
  std::uint64_t value() const;
  bool operator==(const BasImage&) const = default;
};

enum class Category { Horizontal, Vertical, Uniform };

/// One-hot label bits: Horizontal 001, Vertical 010, Uniform 100.
Bits category_label(Category c);
const char* category_name(Category c);
/// Inverse of category_label; throws ValidationError for other bit patterns.
Category category_from_label(const Bits& label);

/// A (data bits, one-hot condition) pair.
struct Sample {
  Bits data_bits;
  Bits label;

  /// data bits followed by label bits as 0/1 reals.
  std::vector<double> as_input() const;
  bool operator==(const Sample&) const = default;
};

inline constexpr int kBasRows = 2;
inline constexpr int kBasCols = 2;
inline constexpr int kDataQubits = kBasRows * kBasCols;
inline constexpr int kConditionQubits = 3;

/// All valid BAS(m, n) images sorted by value(); 2^m + 2^n - 2 of them.
/// Throws CapacityError unless m, n >= 1 and m * n <= 20.
std::vector<BasImage> enumerate_valid(int m, int n);

bool rows_constant(const BasImage& img);
bool cols_constant(const BasImage& img);
bool is_valid_bas(const BasImage& img);

/// Throws ValidationError if the image is not a valid BAS image.
Category categorize(const BasImage& img);

BasImage bas_image(const Bits& pixels, int rows = kBasRows, int cols = kBasCols);

/// `count` labelled BAS(2,2) samples, uniform over the six valid images.
/// With `stratified`, images are dealt round-robin and then shuffled.
std::vector<Sample> synthesize_training_set(int count, std::uint64_t rng_seed,
                                            bool stratified = false);

/// Seeded shuffle, then contiguous chunks of `batch_size` (last may be short).
std::vector<std::vector<Sample>> batches(const std::vector<Sample>& dataset, int batch_size,
                                         std::uint64_t rng_seed);

Bits parse_bits(const std::string& s);
std::string bits_str(const Bits& b);

}  // namespace qcgan
