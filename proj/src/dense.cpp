// Copyright 2026 The qlga developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlga/dense.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qlga {

namespace {

/// Max entrywise |U^dagger U - I|. Column-pair dot products, O(d^3).
double unitarity_defect(std::size_t dim,
                        const std::vector<std::complex<double>>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      std::complex<double> dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        dot += std::conj(m[r * dim + i]) * m[r * dim + j];
      }
      if (i == j) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

}  // namespace

DenseUnitary::DenseUnitary(std::size_t dim,
                           std::vector<std::complex<double>> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw std::invalid_argument("unitary dimension must be positive");
  }
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument(
        "unitary entry count " + std::to_string(entries_.size()) +
        " does not match dimension " + std::to_string(dim_));
  }
  const double defect = unitarity_defect(dim_, entries_);
  if (!(defect <= kUnitarityTolerance)) {
    throw std::invalid_argument("matrix is not unitary: defect " +
                                std::to_string(defect));
  }
}

std::vector<std::complex<double>> DenseUnitary::apply(
    std::span<const std::complex<double>> v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match dimension " +
                                std::to_string(dim_));
  }
  std::vector<std::complex<double>> out(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    std::complex<double> acc = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      acc += entries_[r * dim_ + c] * v[c];
    }
    out[r] = acc;
  }
  return out;
}

DenseUnitary DenseUnitary::adjoint() const {
  std::vector<std::complex<double>> out(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
    }
  }
  return DenseUnitary(dim_, std::move(out));
}

DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("dimension mismatch in unitary product");
  }
  const std::size_t d = a.dim_;
  std::vector<std::complex<double>> out(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::complex<double> ark = a.entries_[r * d + k];
      if (ark == std::complex<double>(0.0)) continue;
      for (std::size_t c = 0; c < d; ++c) {
        out[r * d + c] += ark * b.entries_[k * d + c];
      }
    }
  }
  return DenseUnitary(d, std::move(out));
}

double max_entry_distance(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("dimension mismatch in unitary comparison");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries_[i] - b.entries_[i]));
  }
  return worst;
}

}  // namespace qlga
