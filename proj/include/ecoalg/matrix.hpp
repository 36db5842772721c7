#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ecoalg {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major. Used for the small blocks handed to
/// Smith normal form; operators between complexes are stored sparsely.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  std::vector<Integer> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Integer>& v);

  /// Horizontal concatenation; row counts must agree.
  static IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows);

  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  // Elementary operations (used by the normal-form reducers).
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

}  // namespace ecoalg
