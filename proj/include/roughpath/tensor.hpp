/* Copyright 2026 The roughpath Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Dense truncated tensor algebra T^N(R^d).
//
// Level k holds d^k coefficients, row-major: the word (i_1, ..., i_k) with
// letters in 1..d lives at offset sum_j (i_j - 1) * d^(k - j). All levels are
// stored back to back in one buffer.

#ifndef ROUGHPATH_TENSOR_HPP
#define ROUGHPATH_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace roughpath {

class TruncatedTensor {
 public:
  TruncatedTensor() = default;

  // Zero tensor (level 0 included).
  TruncatedTensor(std::size_t dim, std::size_t depth);

  static TruncatedTensor identity(std::size_t dim, std::size_t depth);

  // levels[k] must have exactly dim^k entries.
  static TruncatedTensor from_levels(std::size_t dim,
                                     const std::vector<std::vector<double>>& levels);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t depth() const noexcept { return depth_; }

  std::span<const double> level(std::size_t k) const;
  std::span<double> level(std::size_t k);

  // All levels back to back, level 0 first.
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  std::span<double> coefficients() noexcept { return coeffs_; }

  // Coefficient of a word given by 1-based letters; the empty word is level 0.
  double operator[](std::initializer_list<int> word) const;
  double& operator[](std::initializer_list<int> word);

  // Keeps levels <= new_depth; missing levels are zero-filled.
  TruncatedTensor truncated(std::size_t new_depth) const;

  TruncatedTensor& operator+=(const TruncatedTensor& other);
  TruncatedTensor& operator-=(const TruncatedTensor& other);
  TruncatedTensor& operator*=(double scale);

  friend TruncatedTensor operator+(TruncatedTensor a, const TruncatedTensor& b) { return a += b; }
  friend TruncatedTensor operator-(TruncatedTensor a, const TruncatedTensor& b) { return a -= b; }
  friend TruncatedTensor operator*(TruncatedTensor a, double s) { return a *= s; }
  friend TruncatedTensor operator*(double s, TruncatedTensor a) { return a *= s; }

  friend bool operator==(const TruncatedTensor&, const TruncatedTensor&) = default;

 private:
  std::size_t offset_of(std::initializer_list<int> word) const;

  std::size_t dim_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::size_t> offsets_;  // depth_ + 2 entries
  std::vector<double> coeffs_;
};

// d^k as an exact integer.
std::size_t level_size(std::size_t dim, std::size_t k);

// Flat offset of a 1-based word inside its level.
std::size_t word_offset(std::size_t dim, std::span<const int> word);

// Level n of the result is sum_{k=0..n} a_k (x) b_{n-k}. Both operands must
// share dim and depth.
TruncatedTensor truncated_product(const TruncatedTensor& a, const TruncatedTensor& b);

// Euclidean norm of every level.
std::vector<double> level_norms(const TruncatedTensor& a);

// Largest absolute coefficient difference, levels 0..depth.
double max_abs_difference(const TruncatedTensor& a, const TruncatedTensor& b);

// exp(v) truncated at depth: level k is v^{(x)k} / k!.
TruncatedTensor segment_signature(std::span<const double> increment, std::size_t depth);

// In place: sig <- sig (x) exp(increment). Horner form, top level first, so
// no temporary tensor is allocated.
void multiply_by_segment(TruncatedTensor& sig, std::span<const double> increment);

}  // namespace roughpath

#endif  // ROUGHPATH_TENSOR_HPP
