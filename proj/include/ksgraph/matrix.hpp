#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ksgraph/rational.hpp"

namespace ksg {

/// Dense matrix over exact rationals. 0x0 and 0xN shapes are legal; the
/// determinant of a 0x0 matrix is 1 (empty product).
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMat identity(std::size_t n);
  static RatMat zero(std::size_t rows, std::size_t cols) { return RatMat(rows, cols); }
  static RatMat from_rows(const std::vector<std::vector<Rat>>& rows);
  static RatMat from_int_rows(const std::vector<std::vector<long long>>& rows);
  /// Column vector from entries.
  static RatMat column(const RatVec& entries);
  /// Row vector from entries.
  static RatMat row(const RatVec& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMat transpose() const;
  RatMat operator+(const RatMat& other) const;
  RatMat operator-(const RatMat& other) const;
  RatMat operator*(const RatMat& other) const;
  RatMat operator*(const Rat& scalar) const;
  RatMat operator-() const;
  bool operator==(const RatMat& other) const;
  bool operator!=(const RatMat& other) const { return !(*this == other); }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_integer() const;

  RatMat block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const RatMat& sub);

  /// Returns the matrix with rows and columns rearranged: entry (i, j) of the
  /// result is entry (row_perm[i], col_perm[j]) of this matrix.
  RatMat permuted(const std::vector<std::size_t>& row_perm,
                  const std::vector<std::size_t>& col_perm) const;

  /// Exact determinant by fraction-free (Bareiss) elimination with row
  /// pivoting. Throws NotSquare.
  Rat det() const;

  /// Exact inverse by Gauss-Jordan elimination. Throws NotSquare, Singular.
  RatMat inverse() const;

  /// Exact rank by Gaussian elimination.
  std::size_t rank() const;

  /// Exact kernel basis: a cols() x k matrix whose columns span the null
  /// space (k = cols() - rank()).
  RatMat null_space() const;

  Rat trace() const;

  /// First coordinates (row, col) where the two matrices differ, as a short
  /// human-readable string; empty string when equal. Shapes must match.
  static std::string first_difference(const RatMat& a, const RatMat& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace ksg
