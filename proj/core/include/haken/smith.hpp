#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "haken/dyadic.hpp"

namespace haken {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// d₁ | d₂ | … | d_rank, all positive.
struct SmithForm {
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;

  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const;
};

/// Dense Smith normal form over ℤ by unimodular row/column operations,
/// pivoting on the entry of least absolute value.
SmithForm smith_normal_form(IntMatrix m);

/// Column-oriented sparse integer matrix.
class SparseIntMatrix {
 public:
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  void set(std::size_t row, std::size_t col, BigInt value);
  const std::map<std::uint32_t, BigInt>& column(std::size_t c) const { return columns_[c]; }
  IntMatrix to_dense() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::uint32_t, BigInt>> columns_;
};

/// Same invariants as the dense routine. Eliminates unit pivots sparsely
/// (fewest-entries row first) and hands the remaining block to the dense
/// algorithm.
SmithForm smith_normal_form(const SparseIntMatrix& m);

}  // namespace haken
