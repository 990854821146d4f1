#include "ksgraph/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "ksgraph/error.hpp"

namespace ksg {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::from_int_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::column(const RatVec& entries) {
  RatMat m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

RatMat RatMat::row(const RatVec& entries) {
  RatMat m(1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m(0, j) = entries[j];
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::operator+(const RatMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RatMat RatMat::operator-(const RatMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix subtraction shape mismatch");
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

RatMat RatMat::operator*(const RatMat& other) const {
  if (cols_ != other.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rat& b = other(k, j);
        if (b == 0) continue;
        out(i, j) += a * b;
      }
    }
  }
  return out;
}

RatMat RatMat::operator*(const Rat& scalar) const {
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

RatMat RatMat::operator-() const {
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

bool RatMat::operator==(const RatMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool RatMat::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool RatMat::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMat::is_integer() const {
  for (const auto& v : data_)
    if (!ksg::is_integer(v)) return false;
  return true;
}

RatMat RatMat::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  RatMat out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void RatMat::set_block(std::size_t row0, std::size_t col0, const RatMat& sub) {
  if (row0 + sub.rows() > rows_ || col0 + sub.cols() > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j) (*this)(row0 + i, col0 + j) = sub(i, j);
}

RatMat RatMat::permuted(const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "permutation size mismatch");
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(row_perm[i], col_perm[j]);
  return out;
}

Rat RatMat::det() const {
  if (!square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;  // empty product
  RatMat work(*this);
  Rat prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && work(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(work(k, j), work(swap_row, j));
      sign = -sign;
    }
    const Rat pivot = work(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        work(i, j) = (work(i, j) * pivot - work(i, k) * work(k, j)) / prev_pivot;
      }
      work(i, k) = 0;
    }
    prev_pivot = pivot;
  }
  return sign > 0 ? work(n - 1, n - 1) : -work(n - 1, n - 1);
}

RatMat RatMat::inverse() const {
  if (!square()) throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMat work(*this);
  RatMat inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && work(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(pivot_row, j));
        std::swap(inv(k, j), inv(pivot_row, j));
      }
    }
    const Rat pivot = work(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rat factor = work(i, k);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

std::size_t RatMat::rank() const {
  RatMat work(*this);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows_ && work(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(rank, j), work(pivot_row, j));
    const Rat pivot = work(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (work(i, col) == 0) continue;
      const Rat factor = work(i, col) / pivot;
      for (std::size_t j = col; j < cols_; ++j) work(i, j) -= factor * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

RatMat RatMat::null_space() const {
  // reduced row echelon form
  RatMat work(*this);
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows_ && work(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(rank, j), work(pivot_row, j));
    const Rat pivot = work(rank, col);
    for (std::size_t j = 0; j < cols_; ++j) work(rank, j) /= pivot;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || work(i, col) == 0) continue;
      const Rat factor = work(i, col);
      for (std::size_t j = 0; j < cols_; ++j) work(i, j) -= factor * work(rank, j);
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t col : pivot_col_of_row) is_pivot[col] = true;

  RatMat basis(cols_, cols_ - rank);
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, out) = 1;
    for (std::size_t r = 0; r < rank; ++r)
      basis(pivot_col_of_row[r], out) = -work(r, free_col);
    ++out;
  }
  return basis;
}

Rat RatMat::trace() const {
  if (!square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::string RatMat::first_difference(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    return os.str();
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "(" << i << "," << j << "): " << rational_to_string(a(i, j)) << " vs "
           << rational_to_string(b(i, j));
        return os.str();
      }
  return {};
}

std::string RatMat::to_string() const {
  std::vector<std::size_t> widths(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i)
      widths[j] = std::max(widths[j], rational_to_string((*this)(i, j)).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string entry = rational_to_string((*this)(i, j));
      os << (j == 0 ? " " : "  ") << std::string(widths[j] - entry.size(), ' ') << entry;
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace ksg
