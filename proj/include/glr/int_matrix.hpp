#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace glr {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries.  A rows x 0 or
// 0 x cols matrix is legal and denotes the corresponding zero map.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transposed() const;
  std::string to_string() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix block_diag(const std::vector<IntMatrix>& blocks);
IntMatrix matrix_power(const IntMatrix& a, unsigned long long e);

// Fraction-free (Bareiss) elimination; exact for any size.
Int determinant(const IntMatrix& a);

}  // namespace glr
