#pragma once

// Dense matrices over GF(p^d) with deterministic Gaussian elimination.

#include <cstddef>
#include <span>
#include <vector>

#include "gkws/gf.hpp"

namespace gkws::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  gf::Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  gf::Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<gf::Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const gf::Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const gf::Fe> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<gf::Fe> data_;
};

/// Reduces `m` in place to reduced row echelon form, scanning columns left to
/// right and picking the first nonzero pivot in each. Returns the pivot
/// columns; their count is the rank. Zero rows are moved to the bottom.
std::vector<std::size_t> row_reduce(const gf::Field& F, Matrix& m);

std::size_t rank(const gf::Field& F, Matrix m);

/// Basis of the right null space {v : m v = 0}, one vector per row, derived
/// from the reduced echelon form (free variable set to 1, others to 0).
Matrix nullspace(const gf::Field& F, Matrix m);

/// Dot product of two equal-length vectors.
gf::Fe dot(const gf::Field& F, std::span<const gf::Fe> a, std::span<const gf::Fe> b);

}  // namespace gkws::linalg
