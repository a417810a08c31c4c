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
#include "roughpath/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "roughpath/error.hpp"

namespace roughpath {

std::size_t level_size(std::size_t dim, std::size_t k) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= dim;
  return n;
}

std::size_t word_offset(std::size_t dim, std::span<const int> word) {
  std::size_t off = 0;
  for (int letter : word) {
    if (letter < 1 || static_cast<std::size_t>(letter) > dim)
      throw InvalidInput("letter " + std::to_string(letter) + " outside 1.." + std::to_string(dim));
    off = off * dim + static_cast<std::size_t>(letter - 1);
  }
  return off;
}

TruncatedTensor::TruncatedTensor(std::size_t dim, std::size_t depth) : dim_(dim), depth_(depth) {
  if (dim == 0) throw InvalidInput("tensor dimension must be positive");
  offsets_.resize(depth + 2);
  offsets_[0] = 0;
  for (std::size_t k = 0; k <= depth; ++k) offsets_[k + 1] = offsets_[k] + level_size(dim, k);
  coeffs_.assign(offsets_.back(), 0.0);
}

TruncatedTensor TruncatedTensor::identity(std::size_t dim, std::size_t depth) {
  TruncatedTensor t(dim, depth);
  t.coeffs_[0] = 1.0;
  return t;
}

TruncatedTensor TruncatedTensor::from_levels(std::size_t dim,
                                             const std::vector<std::vector<double>>& levels) {
  if (levels.empty()) throw InvalidInput("a tensor needs at least level 0");
  TruncatedTensor t(dim, levels.size() - 1);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].size() != level_size(dim, k))
      throw InvalidInput("level " + std::to_string(k) + " has " + std::to_string(levels[k].size()) +
                         " entries, expected " + std::to_string(level_size(dim, k)));
    std::copy(levels[k].begin(), levels[k].end(), t.level(k).begin());
  }
  return t;
}

std::span<const double> TruncatedTensor::level(std::size_t k) const {
  if (k > depth_) throw InvalidInput("level " + std::to_string(k) + " beyond depth");
  return {coeffs_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

std::span<double> TruncatedTensor::level(std::size_t k) {
  if (k > depth_) throw InvalidInput("level " + std::to_string(k) + " beyond depth");
  return {coeffs_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

std::size_t TruncatedTensor::offset_of(std::initializer_list<int> word) const {
  if (word.size() > depth_) throw InvalidInput("word longer than tensor depth");
  return offsets_[word.size()] + word_offset(dim_, std::span<const int>(word.begin(), word.size()));
}

double TruncatedTensor::operator[](std::initializer_list<int> word) const {
  return coeffs_[offset_of(word)];
}

double& TruncatedTensor::operator[](std::initializer_list<int> word) {
  return coeffs_[offset_of(word)];
}

TruncatedTensor TruncatedTensor::truncated(std::size_t new_depth) const {
  TruncatedTensor t(dim_, new_depth);
  const std::size_t keep = std::min(offsets_[std::min(depth_, new_depth) + 1], t.coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, t.coeffs_.begin());
  return t;
}

namespace {
void require_same_shape(const TruncatedTensor& a, const TruncatedTensor& b) {
  if (a.dim() != b.dim() || a.depth() != b.depth())
    throw InvalidInput("tensor shape mismatch: (dim " + std::to_string(a.dim()) + ", depth " +
                       std::to_string(a.depth()) + ") vs (dim " + std::to_string(b.dim()) +
                       ", depth " + std::to_string(b.depth()) + ")");
}
}  // namespace

TruncatedTensor& TruncatedTensor::operator+=(const TruncatedTensor& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedTensor& TruncatedTensor::operator-=(const TruncatedTensor& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedTensor& TruncatedTensor::operator*=(double scale) {
  for (double& c : coeffs_) c *= scale;
  return *this;
}

TruncatedTensor truncated_product(const TruncatedTensor& a, const TruncatedTensor& b) {
  require_same_shape(a, b);
  TruncatedTensor r(a.dim(), a.depth());
  for (std::size_t n = 0; n <= a.depth(); ++n) {
    auto out = r.level(n);
    for (std::size_t k = 0; k <= n; ++k) {
      auto left = a.level(k);
      auto right = b.level(n - k);
      const std::size_t stride = right.size();
      for (std::size_t i = 0; i < left.size(); ++i) {
        const double x = left[i];
        if (x == 0.0) continue;
        double* dst = out.data() + i * stride;
        for (std::size_t j = 0; j < stride; ++j) dst[j] += x * right[j];
      }
    }
  }
  return r;
}

std::vector<double> level_norms(const TruncatedTensor& a) {
  std::vector<double> norms(a.depth() + 1);
  for (std::size_t k = 0; k <= a.depth(); ++k) {
    double sq = 0.0;
    for (double c : a.level(k)) sq += c * c;
    norms[k] = std::sqrt(sq);
  }
  return norms;
}

double max_abs_difference(const TruncatedTensor& a, const TruncatedTensor& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  auto x = a.coefficients();
  auto y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

TruncatedTensor segment_signature(std::span<const double> increment, std::size_t depth) {
  TruncatedTensor t = TruncatedTensor::identity(increment.size(), depth);
  for (std::size_t k = 1; k <= depth; ++k) {
    auto prev = std::as_const(t).level(k - 1);
    auto cur = t.level(k);
    const double inv = 1.0 / static_cast<double>(k);
    const std::size_t d = increment.size();
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) cur[i * d + j] = prev[i] * increment[j] * inv;
  }
  return t;
}

void multiply_by_segment(TruncatedTensor& sig, std::span<const double> increment) {
  const std::size_t d = sig.dim();
  if (increment.size() != d) throw InvalidInput("increment dimension does not match tensor");
  const std::size_t top = sig.depth();
  std::vector<double> acc;
  std::vector<double> next;
  acc.reserve(level_size(d, top));
  next.reserve(level_size(d, top));
  // level n <- sum_k a_k (x) v^{n-k}/(n-k)!, evaluated as
  // ((a_0 v/n + a_1) v/(n-1) + a_2) ... v/1 + a_n.
  for (std::size_t n = top; n >= 1; --n) {
    acc.assign(1, sig.level(0)[0]);
    for (std::size_t j = 1; j <= n; ++j) {
      const double inv = 1.0 / static_cast<double>(n - j + 1);
      auto a_j = std::as_const(sig).level(j);
      next.resize(acc.size() * d);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        const double x = acc[i] * inv;
        for (std::size_t l = 0; l < d; ++l) next[i * d + l] = x * increment[l] + a_j[i * d + l];
      }
      acc.swap(next);
    }
    auto out = sig.level(n);
    std::copy(acc.begin(), acc.end(), out.begin());
  }
}

}  // namespace roughpath
