#include "glr/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "glr/errors.hpp"

namespace glr {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<long long>> entries) {
  rows_ = entries.size();
  cols_ = rows_ == 0 ? 0 : entries.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : entries) {
    if (row.size() != cols_)
      fail(ErrorKind::DimensionMismatch, "ragged initializer rows");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << at(i, j);
    }
    out << "]";
    if (i + 1 < rows_) out << ",\n";
  }
  out << "]";
  return out.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix addition shape mismatch");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix subtraction shape mismatch");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const IntMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix r(rows, cols);
  std::size_t ro = 0, co = 0;
  for (const IntMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

IntMatrix matrix_power(const IntMatrix& a, unsigned long long e) {
  if (!a.is_square())
    fail(ErrorKind::DimensionMismatch, "matrix power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1ULL;
    if (e) base = base * base;
  }
  return result;
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square())
    fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        // Bareiss update; the division is exact.
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace glr
