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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qlga {

/**
 * Dense complex square matrix verified to be unitary on construction.
 *
 * Entries are stored row-major; (row, col) addresses entry row*dim + col.
 * Construction throws std::invalid_argument if U^dagger U deviates from
 * the identity by more than kUnitarityTolerance in any entry.
 */
class DenseUnitary {
 public:
  static constexpr double kUnitarityTolerance = 1e-10;

  DenseUnitary(std::size_t dim, std::vector<std::complex<double>> entries);

  std::size_t dim() const { return dim_; }

  std::complex<double> operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const std::complex<double>> entries() const { return entries_; }

  /// Matrix-vector product; v must have length dim().
  std::vector<std::complex<double>> apply(
      std::span<const std::complex<double>> v) const;

  DenseUnitary adjoint() const;

  friend DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b);

  /// Largest entrywise |a - b|; dimensions must agree.
  friend double max_entry_distance(const DenseUnitary& a,
                                   const DenseUnitary& b);

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> entries_;
};

}  // namespace qlga
